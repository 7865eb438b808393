#pragma once

// Algebraic non-ideal relay.
//
// A relay with thresholds beta <= alpha is advanced one input sample at a
// time by
//
//     y = min( sgn_down(x - beta), max( y_prev, sgn_up(x - alpha) ) )
//
// where sgn_up maps 0 to +1 and sgn_down maps 0 to -1. With alpha > beta this
// reproduces the relay exactly: x >= alpha gives +1, x <= beta gives -1 and
// anything strictly inside the band keeps the previous state. For the
// degenerate alpha == beta relay the tie x == alpha resolves to -1.
//
// Per sample the update costs two subtractions, two sign evaluations, one
// max, one min and one stored state, which is what makes the bank kernel in
// bank.hpp a straight-line loop over structure-of-arrays storage.

#include <algorithm>
#include <cmath>

#include "preisach/error.hpp"

namespace preisach {

struct HysteronParams {
    double alpha; // up-switching threshold
    double beta;  // down-switching threshold

    bool valid() const noexcept {
        return std::isfinite(alpha) && std::isfinite(beta) && alpha >= beta;
    }
};

// Binary relay output, stored as a full-width real so that the update is
// plain floating-point arithmetic.
class RelayState {
public:
    static constexpr RelayState up() noexcept { return RelayState{1.0}; }
    static constexpr RelayState down() noexcept { return RelayState{-1.0}; }

    // Throws contract_error unless v is exactly -1 or +1.
    static RelayState from_value(double v) {
        if (v != 1.0 && v != -1.0)
            throw contract_error("relay state must be -1 or +1");
        return RelayState{v};
    }

    constexpr double value() const noexcept { return value_; }
    constexpr bool is_up() const noexcept { return value_ > 0.0; }

    friend constexpr bool operator==(RelayState, RelayState) = default;
    friend constexpr auto operator<=>(RelayState, RelayState) = default;

private:
    constexpr explicit RelayState(double v) noexcept : value_(v) {}
    double value_;
};

namespace kernel {

// z >= 0 -> +1, z < 0 -> -1
constexpr double sign_zero_up(double z) noexcept { return z >= 0.0 ? 1.0 : -1.0; }

// z > 0 -> +1, z <= 0 -> -1
constexpr double sign_zero_down(double z) noexcept { return z > 0.0 ? 1.0 : -1.0; }

// Unchecked relay update; `prev` must be -1.0 or +1.0.
constexpr double switch_relay(double alpha, double beta, double prev, double x) noexcept {
    return std::min(sign_zero_down(x - beta), std::max(prev, sign_zero_up(x - alpha)));
}

} // namespace kernel

inline void require_valid(const HysteronParams& p) {
    if (!p.valid())
        throw contract_error("hysteron thresholds must be finite with alpha >= beta");
}

inline RelayState relay_step(const HysteronParams& params, RelayState prev, double x) {
    require_valid(params);
    if (!std::isfinite(x))
        throw contract_error("relay input must be finite");
    return RelayState::from_value(kernel::switch_relay(params.alpha, params.beta, prev.value(), x));
}

// Initial state for input x0: saturated outside the band, `in_band_default`
// strictly inside it. The boundary cases follow relay_step.
inline RelayState relay_init(const HysteronParams& params, double x0, RelayState in_band_default) {
    require_valid(params);
    if (!std::isfinite(x0))
        throw contract_error("relay initial input must be finite");
    return relay_step(params, in_band_default, x0);
}

} // namespace preisach
