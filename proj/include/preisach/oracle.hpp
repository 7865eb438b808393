#pragma once

// Reference relay and aggregate model written directly from the relay's
// case definition. Shares no code with the bank kernel; used only to check it.

#include <span>
#include <vector>

#include "preisach/trajectory.hpp"

namespace preisach::oracle {

class OracleRelay {
public:
    OracleRelay(double alpha, double beta, int state);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    int state() const noexcept { return state_; }

    // x <= beta -> -1, x >= alpha -> +1, otherwise unchanged.
    int step(double x);

private:
    double alpha_;
    double beta_;
    int state_;
};

// For every sample: step each relay in order, then sum weight * state in
// ascending index order starting from 0.
Trajectory model_run(std::vector<OracleRelay>& relays, std::span<const double> weights,
                     std::span<const double> xs);

} // namespace preisach::oracle
