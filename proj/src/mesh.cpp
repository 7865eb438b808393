#include "preisach/mesh.hpp"

#include <cmath>
#include <string>

namespace preisach {

void MeshSpec::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw contract_error("mesh range must be finite");
    if (!(x_min < x_max))
        throw contract_error("mesh requires x_min < x_max");
    if (levels == 0)
        throw contract_error("mesh requires at least one level");
}

std::vector<double> mesh_levels(const MeshSpec& spec) {
    spec.validate();
    const std::size_t n = spec.levels;
    std::vector<double> levels(n);
    const double denom = 2.0 * static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lo = static_cast<double>(2 * (n - k) - 1);
        const double hi = static_cast<double>(2 * k + 1);
        levels[k] = (spec.x_min * lo + spec.x_max * hi) / denom;
    }
    return levels;
}

std::vector<HysteronParams> build_mesh(const MeshSpec& spec) {
    const std::vector<double> levels = mesh_levels(spec);
    const std::size_t n = levels.size();

    std::vector<HysteronParams> nodes;
    nodes.reserve(spec.node_count());
    for (std::size_t row = n; row-- > 0;) {
        for (std::size_t col = 0; col <= row; ++col)
            nodes.push_back({levels[row], levels[col]});
    }
    return nodes;
}

std::vector<double> assign_weights(std::span<const HysteronParams> nodes, const DensitySpec& density) {
    if (nodes.empty())
        throw contract_error("density assignment needs at least one node");

    if (density.kind == DensityKind::uniform)
        return std::vector<double>(nodes.size(), 1.0 / static_cast<double>(nodes.size()));

    if (!density.table)
        throw contract_error("table density without a table");
    const auto& table = *density.table;
    if (table.size() != nodes.size())
        throw contract_error("density table has " + std::to_string(table.size()) +
                             " entries for " + std::to_string(nodes.size()) + " nodes");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!std::isfinite(table[i]) || table[i] < 0.0)
            throw contract_error("density table entry " + std::to_string(i) +
                                 " must be finite and nonnegative");
    }
    return table;
}

} // namespace preisach
