#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace preisach {

struct TrajectoryRow {
    std::int64_t index;
    double x;
    double f;

    friend bool operator==(const TrajectoryRow&, const TrajectoryRow&) = default;
};

using Trajectory = std::vector<TrajectoryRow>;

// Bounding box of one input period in the (x, f) plane.
struct LoopBox {
    double x_min, x_max;
    double f_min, f_max;

    bool contains(const LoopBox& inner) const noexcept {
        return x_min <= inner.x_min && inner.x_max <= x_max &&
               f_min <= inner.f_min && inner.f_max <= f_max;
    }
};

// Splits the trajectory into consecutive windows of `samples_per_period`
// rows (a trailing partial window is kept) and boxes each one.
std::vector<LoopBox> loop_boxes(const Trajectory& trajectory, std::size_t samples_per_period);

} // namespace preisach
