#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "preisach/config.hpp"
#include "preisach/trajectory.hpp"

namespace preisach {

// Rows whose index is a multiple of `decimation`.
Trajectory decimate(const Trajectory& trajectory, std::size_t decimation);

// CSV: header "index,x,f", '\n' line endings, shortest round-trip decimal
// representation with '.' as separator regardless of locale.
// JSON: {"columns": ["index", "x", "f"], "rows": [[i, x, f], ...]}.
void write_trajectory(std::ostream& out, const Trajectory& trajectory, OutputFormat format);

// Throws io_error when the file cannot be written.
void save_trajectory(const std::string& path, const Trajectory& trajectory, OutputFormat format);

// CSV "period,x_min,x_max,f_min,f_max", one row per box.
void write_loop_boxes(std::ostream& out, const std::vector<LoopBox>& boxes);

std::string format_real(double value);

} // namespace preisach
