#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "preisach/hysteron.hpp"

namespace preisach::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

// Random input that lands exactly on one of `levels` a quarter of the time,
// otherwise anywhere in [lo, hi].
inline std::vector<double> random_input(std::mt19937_64& rng, std::size_t count, double lo, double hi,
                                        std::span<const double> levels = {}) {
    std::vector<double> xs(count);
    for (auto& x : xs) {
        if (!levels.empty() && rng() % 4 == 0)
            x = levels[rng() % levels.size()];
        else
            x = uniform(rng, lo, hi);
    }
    return xs;
}

inline HysteronParams random_relay(std::mt19937_64& rng, double lo, double hi) {
    double a = uniform(rng, lo, hi);
    double b = uniform(rng, lo, hi);
    while (a == b)
        b = uniform(rng, lo, hi);
    if (a < b)
        std::swap(a, b);
    return {a, b};
}

} // namespace preisach::testing
