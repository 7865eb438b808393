#include "preisach/bank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "preisach/worker_pool.hpp"

namespace preisach {

namespace {

constexpr std::size_t chunk_samples = 1024;

// Advances hysterons [0, count) over every sample in xs and adds their
// weighted outputs into acc[s] in ascending hysteron order. Four relays are
// carried at once to hide the latency of the min/max chain; the additions
// into acc[s] stay in index order.
void accumulate_block(const double* alpha, const double* beta, const double* weight, double* state,
                      std::size_t count, std::span<const double> xs, double* acc) noexcept {
    using kernel::switch_relay;
    const std::size_t ns = xs.size();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const double a0 = alpha[i], a1 = alpha[i + 1], a2 = alpha[i + 2], a3 = alpha[i + 3];
        const double b0 = beta[i], b1 = beta[i + 1], b2 = beta[i + 2], b3 = beta[i + 3];
        const double w0 = weight[i], w1 = weight[i + 1], w2 = weight[i + 2], w3 = weight[i + 3];
        double y0 = state[i], y1 = state[i + 1], y2 = state[i + 2], y3 = state[i + 3];
        for (std::size_t s = 0; s < ns; ++s) {
            const double x = xs[s];
            y0 = switch_relay(a0, b0, y0, x);
            y1 = switch_relay(a1, b1, y1, x);
            y2 = switch_relay(a2, b2, y2, x);
            y3 = switch_relay(a3, b3, y3, x);
            double t = acc[s];
            t += w0 * y0;
            t += w1 * y1;
            t += w2 * y2;
            t += w3 * y3;
            acc[s] = t;
        }
        state[i] = y0;
        state[i + 1] = y1;
        state[i + 2] = y2;
        state[i + 3] = y3;
    }
    for (; i < count; ++i) {
        const double a = alpha[i], b = beta[i], w = weight[i];
        double y = state[i];
        for (std::size_t s = 0; s < ns; ++s) {
            y = switch_relay(a, b, y, xs[s]);
            acc[s] += w * y;
        }
        state[i] = y;
    }
}

double tree_sum(std::span<const double> partials) noexcept {
    if (partials.size() == 1)
        return partials[0];
    const std::size_t mid = partials.size() / 2;
    return tree_sum(partials.first(mid)) + tree_sum(partials.subspan(mid));
}

std::size_t block_count(std::size_t n, const BankOptions& options) {
    if (options.reduction == Reduction::serial)
        return 1;
    return (n + options.block_size - 1) / options.block_size;
}

void validate_options(const BankOptions& options) {
    if (options.workers == 0)
        throw contract_error("bank needs at least one worker");
    if (options.block_size == 0)
        throw contract_error("reduction block size must be positive");
}

} // namespace

std::string_view to_string(InitPreset preset) noexcept {
    switch (preset) {
    case InitPreset::negative_saturation: return "negative-saturation";
    case InitPreset::positive_saturation: return "positive-saturation";
    case InitPreset::demagnetized: return "demagnetized";
    case InitPreset::from_input: return "from-input";
    }
    return "unknown";
}

InitPreset parse_init_preset(std::string_view name) {
    for (auto p : {InitPreset::negative_saturation, InitPreset::positive_saturation,
                   InitPreset::demagnetized, InitPreset::from_input}) {
        if (name == to_string(p))
            return p;
    }
    throw contract_error("unknown init preset '" + std::string(name) + "'");
}

HysteronBank::HysteronBank(std::span<const HysteronParams> nodes, std::span<const double> weights,
                           InitPreset preset, double x0, BankOptions options)
    : x_last_(x0), options_(options) {
    if (nodes.empty())
        throw contract_error("bank needs at least one hysteron");
    if (nodes.size() != weights.size())
        throw contract_error("bank has " + std::to_string(nodes.size()) + " hysterons but " +
                             std::to_string(weights.size()) + " weights");
    if (!std::isfinite(x0))
        throw contract_error("initial input must be finite");
    validate_options(options);

    const std::size_t n = nodes.size();
    alphas_.resize(n);
    betas_.resize(n);
    weights_.assign(weights.begin(), weights.end());
    states_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!nodes[i].valid())
            throw contract_error("hysteron " + std::to_string(i) + " has invalid thresholds");
        if (!std::isfinite(weights[i]) || weights[i] < 0.0)
            throw contract_error("hysteron " + std::to_string(i) + " has a negative or non-finite weight");
        alphas_[i] = nodes[i].alpha;
        betas_[i] = nodes[i].beta;

        switch (preset) {
        case InitPreset::negative_saturation:
            states_[i] = -1.0;
            break;
        case InitPreset::positive_saturation:
            states_[i] = 1.0;
            break;
        case InitPreset::demagnetized:
            states_[i] = nodes[i].alpha + nodes[i].beta < 0.0 ? 1.0 : -1.0;
            break;
        case InitPreset::from_input:
            states_[i] = relay_init(nodes[i], x0, RelayState::down()).value();
            break;
        }
    }
}

void HysteronBank::set_options(BankOptions options) {
    validate_options(options);
    if (pool_ && pool_->size() != options.workers)
        pool_.reset();
    options_ = options;
}

double HysteronBank::weight_sum() const noexcept {
    double total = 0.0;
    for (double w : weights_)
        total += w;
    return total;
}

double HysteronBank::output() const {
    const std::size_t n = size();
    const std::size_t blocks = block_count(n, options_);
    const std::size_t width = blocks == 1 ? n : options_.block_size;
    std::vector<double> partials(blocks, 0.0);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t stop = std::min(n, (b + 1) * width);
        for (std::size_t i = b * width; i < stop; ++i)
            partials[b] += weights_[i] * states_[i];
    }
    return tree_sum(partials);
}

double HysteronBank::step(double x) {
    double f = 0.0;
    run_into(std::span<const double>(&x, 1), std::span<double>(&f, 1));
    return f;
}

Trajectory HysteronBank::run(std::span<const double> xs) {
    std::vector<double> f(xs.size());
    run_into(xs, f);
    Trajectory out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
        out[k] = {static_cast<std::int64_t>(k), xs[k], f[k]};
    return out;
}

void HysteronBank::run_into(std::span<const double> xs, std::span<double> out) {
    if (out.size() != xs.size())
        throw contract_error("output span length differs from input length");
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (!std::isfinite(xs[k]))
            throw contract_error("input sample " + std::to_string(k) + " is not finite");
    }
    if (xs.empty())
        return;
    advance(xs, out);
    x_last_ = xs.back();
}

void HysteronBank::advance(std::span<const double> xs, std::span<double> out) {
    const std::size_t n = size();
    const std::size_t blocks = block_count(n, options_);

    if (blocks == 1) {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::size_t start = 0; start < xs.size(); start += chunk_samples) {
            const std::size_t len = std::min(chunk_samples, xs.size() - start);
            accumulate_block(alphas_.data(), betas_.data(), weights_.data(), states_.data(), n,
                             xs.subspan(start, len), out.data() + start);
        }
        return;
    }

    const std::size_t width = options_.block_size;
    std::vector<double> partials(blocks * chunk_samples);
    std::vector<double> column(blocks);
    for (std::size_t start = 0; start < xs.size(); start += chunk_samples) {
        const std::size_t len = std::min(chunk_samples, xs.size() - start);
        const auto chunk = xs.subspan(start, len);
        pool().run(blocks, [&](std::size_t b) {
            const std::size_t first = b * width;
            const std::size_t count = std::min(n, first + width) - first;
            double* acc = partials.data() + b * chunk_samples;
            std::fill(acc, acc + len, 0.0);
            accumulate_block(alphas_.data() + first, betas_.data() + first, weights_.data() + first,
                             states_.data() + first, count, chunk, acc);
        });
        for (std::size_t s = 0; s < len; ++s) {
            for (std::size_t b = 0; b < blocks; ++b)
                column[b] = partials[b * chunk_samples + s];
            out[start + s] = tree_sum(column);
        }
    }
}

WorkerPool& HysteronBank::pool() {
    if (!pool_)
        pool_ = std::make_shared<WorkerPool>(options_.workers);
    return *pool_;
}

BankSnapshot HysteronBank::snapshot() const { return {states_, x_last_}; }

void HysteronBank::restore(const BankSnapshot& snapshot) {
    if (snapshot.states.size() != states_.size())
        throw contract_error("snapshot holds " + std::to_string(snapshot.states.size()) +
                             " states for a bank of " + std::to_string(states_.size()));
    for (double s : snapshot.states) {
        if (s != 1.0 && s != -1.0)
            throw contract_error("snapshot state must be -1 or +1");
    }
    if (!std::isfinite(snapshot.x_last))
        throw contract_error("snapshot input must be finite");
    states_ = snapshot.states;
    x_last_ = snapshot.x_last;
}

HysteronBank make_bank(const MeshSpec& mesh, const DensitySpec& density, InitPreset preset, double x0,
                       BankOptions options) {
    const auto nodes = build_mesh(mesh);
    const auto weights = assign_weights(nodes, density);
    return HysteronBank(nodes, weights, preset, x0, options);
}

} // namespace preisach
