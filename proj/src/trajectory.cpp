#include "preisach/trajectory.hpp"

#include <algorithm>

#include "preisach/error.hpp"

namespace preisach {

std::vector<LoopBox> loop_boxes(const Trajectory& trajectory, std::size_t samples_per_period) {
    if (samples_per_period == 0)
        throw contract_error("loop period must be at least one sample");

    std::vector<LoopBox> boxes;
    for (std::size_t start = 0; start < trajectory.size(); start += samples_per_period) {
        const std::size_t stop = std::min(trajectory.size(), start + samples_per_period);
        LoopBox box{trajectory[start].x, trajectory[start].x, trajectory[start].f, trajectory[start].f};
        for (std::size_t k = start + 1; k < stop; ++k) {
            box.x_min = std::min(box.x_min, trajectory[k].x);
            box.x_max = std::max(box.x_max, trajectory[k].x);
            box.f_min = std::min(box.f_min, trajectory[k].f);
            box.f_max = std::max(box.f_max, trajectory[k].f);
        }
        boxes.push_back(box);
    }
    return boxes;
}

} // namespace preisach
