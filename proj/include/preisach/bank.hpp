#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "preisach/hysteron.hpp"
#include "preisach/mesh.hpp"
#include "preisach/trajectory.hpp"

namespace preisach {

class WorkerPool;

enum class InitPreset { negative_saturation, positive_saturation, demagnetized, from_input };

std::string_view to_string(InitPreset preset) noexcept;
InitPreset parse_init_preset(std::string_view name); // throws contract_error

// How the weighted sum over hysterons is reduced for each sample.
//
// serial        f = ((0 + w0*y0) + w1*y1) + ... in ascending index order.
//               One worker only; bit-identical to the naive aggregate loop.
// blocked_tree  Hysterons are cut into consecutive blocks of `block_size`.
//               Each block is summed serially in ascending order, then the
//               block partials are combined by a balanced pairwise tree
//               (split at lo + (hi - lo) / 2). The result depends on
//               block_size only, never on the number of workers.
enum class Reduction { serial, blocked_tree };

struct BankOptions {
    std::size_t workers = 1;
    Reduction reduction = Reduction::serial;
    std::size_t block_size = 256;
};

struct BankSnapshot {
    std::vector<double> states;
    double x_last = 0.0;

    friend bool operator==(const BankSnapshot&, const BankSnapshot&) = default;
};

// Structure-of-arrays store of N weighted hysterons sharing one input.
class HysteronBank {
public:
    // Validates lengths, thresholds and weights, then sets the states from
    // `preset` evaluated at x0.
    HysteronBank(std::span<const HysteronParams> nodes, std::span<const double> weights,
                 InitPreset preset, double x0, BankOptions options = {});

    std::size_t size() const noexcept { return alphas_.size(); }
    double x_last() const noexcept { return x_last_; }
    const BankOptions& options() const noexcept { return options_; }
    void set_options(BankOptions options);

    std::span<const double> alphas() const noexcept { return alphas_; }
    std::span<const double> betas() const noexcept { return betas_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const double> states() const noexcept { return states_; }

    double weight_sum() const noexcept;

    // Current output, reduced per options().
    double output() const;

    // Advances every hysteron against x and returns the new output.
    // Non-finite x throws without touching the state.
    double step(double x);

    // Applies step() to every sample. All samples are checked before any
    // state changes; a non-finite sample throws naming its index.
    Trajectory run(std::span<const double> xs);

    // Same as run() but writes outputs only; `out.size()` must equal
    // `xs.size()`.
    void run_into(std::span<const double> xs, std::span<double> out);

    BankSnapshot snapshot() const;
    void restore(const BankSnapshot& snapshot);

private:
    void advance(std::span<const double> xs, std::span<double> out);
    WorkerPool& pool();

    std::vector<double> alphas_;
    std::vector<double> betas_;
    std::vector<double> weights_;
    std::vector<double> states_;
    double x_last_ = 0.0;
    BankOptions options_;
    std::shared_ptr<WorkerPool> pool_;
};

// Builds the mesh, weights and bank in one go.
HysteronBank make_bank(const MeshSpec& mesh, const DensitySpec& density, InitPreset preset, double x0,
                       BankOptions options = {});

} // namespace preisach
