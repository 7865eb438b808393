#include "preisach/oracle.hpp"

#include <cmath>

#include "preisach/error.hpp"

namespace preisach::oracle {

OracleRelay::OracleRelay(double alpha, double beta, int state)
    : alpha_(alpha), beta_(beta), state_(state) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < beta)
        throw contract_error("oracle relay needs finite alpha >= beta");
    if (state != 1 && state != -1)
        throw contract_error("oracle relay state must be -1 or +1");
}

int OracleRelay::step(double x) {
    if (!std::isfinite(x))
        throw contract_error("oracle input must be finite");
    if (x <= beta_) {
        state_ = -1;
    } else if (x >= alpha_) {
        state_ = +1;
    }
    return state_;
}

Trajectory model_run(std::vector<OracleRelay>& relays, std::span<const double> weights,
                     std::span<const double> xs) {
    if (relays.size() != weights.size())
        throw contract_error("oracle model needs one weight per relay");

    Trajectory out;
    out.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double f = 0.0;
        for (std::size_t i = 0; i < relays.size(); ++i) {
            const int y = relays[i].step(xs[k]);
            f += weights[i] * static_cast<double>(y);
        }
        out.push_back({static_cast<std::int64_t>(k), xs[k], f});
    }
    return out;
}

} // namespace preisach::oracle
