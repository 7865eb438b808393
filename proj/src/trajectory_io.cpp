#include "preisach/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>

#include "preisach/error.hpp"

namespace preisach {

std::string format_real(double value) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{})
        throw contract_error("cannot format value");
    return std::string(buf.data(), end);
}

namespace {

std::string format_index(std::int64_t value) {
    std::array<char, 24> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

} // namespace

Trajectory decimate(const Trajectory& trajectory, std::size_t decimation) {
    if (decimation == 0)
        throw contract_error("decimation must be at least 1");
    if (decimation == 1)
        return trajectory;
    Trajectory out;
    out.reserve(trajectory.size() / decimation + 1);
    for (const auto& row : trajectory) {
        if (row.index % static_cast<std::int64_t>(decimation) == 0)
            out.push_back(row);
    }
    return out;
}

void write_trajectory(std::ostream& out, const Trajectory& trajectory, OutputFormat format) {
    if (format == OutputFormat::csv) {
        out << "index,x,f\n";
        for (const auto& row : trajectory)
            out << format_index(row.index) << ',' << format_real(row.x) << ',' << format_real(row.f) << '\n';
        return;
    }

    out << "{\"columns\":[\"index\",\"x\",\"f\"],\"rows\":[";
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const auto& row = trajectory[k];
        if (k > 0)
            out << ',';
        out << '[' << format_index(row.index) << ',' << format_real(row.x) << ',' << format_real(row.f) << ']';
    }
    out << "]}\n";
}

void save_trajectory(const std::string& path, const Trajectory& trajectory, OutputFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    write_trajectory(out, trajectory, format);
    out.flush();
    if (!out)
        throw io_error("failed writing '" + path + "'");
}

void write_loop_boxes(std::ostream& out, const std::vector<LoopBox>& boxes) {
    out << "period,x_min,x_max,f_min,f_max\n";
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        const auto& b = boxes[k];
        out << format_index(static_cast<std::int64_t>(k)) << ',' << format_real(b.x_min) << ',' << format_real(b.x_max) << ','
            << format_real(b.f_min) << ',' << format_real(b.f_max) << '\n';
    }
}

} // namespace preisach
