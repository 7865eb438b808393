#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "preisach/hysteron.hpp"

namespace preisach {

// Uniform discretization of the Preisach triangle over [x_min, x_max].
struct MeshSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    std::size_t levels = 1;

    void validate() const;

    // n(n+1)/2
    std::size_t node_count() const noexcept { return levels * (levels + 1) / 2; }
};

enum class DensityKind { uniform, table };

struct DensitySpec {
    DensityKind kind = DensityKind::uniform;
    std::optional<std::vector<double>> table; // positional, one weight per node

    static DensitySpec uniform() { return {}; }
    static DensitySpec from_table(std::vector<double> weights) {
        return {DensityKind::table, std::move(weights)};
    }
};

// The `levels` threshold values: centres of n equal cells covering
// [x_min, x_max], i.e. x_min + (k + 1/2) (x_max - x_min) / n. No node lies on
// the range boundary, so x = x_max saturates every relay high (including the
// diagonal alpha == beta relays, whose tie resolves low) and x = x_min every
// relay low. Computed as a convex combination so that a symmetric range
// yields levels that are exact negations of each other.
std::vector<double> mesh_levels(const MeshSpec& spec);

// Nodes (alpha, beta) with alpha >= beta, ordered by alpha descending and,
// within one alpha row, beta ascending.
std::vector<HysteronParams> build_mesh(const MeshSpec& spec);

// Uniform density gives 1/N per node so that the output spans [-1, +1].
// Table density is returned as given after validation.
std::vector<double> assign_weights(std::span<const HysteronParams> nodes, const DensitySpec& density);

} // namespace preisach
