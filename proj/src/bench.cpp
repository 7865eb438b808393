#include "preisach/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "preisach/bank.hpp"
#include "preisach/mesh.hpp"
#include "preisach/signals.hpp"

namespace preisach::bench {

std::vector<HysteronParams> synthetic_nodes(std::size_t n) {
    if (n == 0)
        throw contract_error("benchmark needs at least one hysteron");
    std::size_t levels = 1;
    while (levels * (levels + 1) / 2 < n)
        ++levels;
    auto nodes = build_mesh({-1.0, 1.0, levels});
    nodes.resize(n);
    return nodes;
}

std::uint64_t checksum(std::span<const double> outputs, std::span<const double> states) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](double v) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            h ^= bits & 0xff;
            h *= 0x100000001b3ULL;
            bits >>= 8;
        }
    };
    for (double v : outputs)
        mix(v);
    for (double v : states)
        mix(v);
    return h;
}

BenchReport bench_bank(std::size_t n, std::size_t samples, std::size_t workers, const BenchOptions& options) {
    if (samples == 0)
        throw contract_error("benchmark needs at least one sample");
    if (workers == 0)
        throw contract_error("benchmark needs at least one worker");
    if (options.repeats == 0)
        throw contract_error("benchmark needs at least one repeat");

    const auto nodes = synthetic_nodes(n);
    const std::vector<double> weights(n, 1.0 / static_cast<double>(n));

    signals::SignalSpec sweep;
    sweep.kind = signals::SignalKind::sinusoid;
    sweep.amplitude = 1.0;
    sweep.frequency_hz = 1.0;
    sweep.sample_rate_hz = reference_rate_hz;
    sweep.duration_s = static_cast<double>(samples) / reference_rate_hz;
    auto xs = signals::generate(sweep);
    xs.resize(samples, 0.0);

    const BankOptions timed_options{workers, Reduction::blocked_tree, options.block_size};
    const HysteronBank initial(nodes, weights, InitPreset::from_input, 0.0, timed_options);

    BenchReport report;
    report.n_hysterons = n;
    report.samples = samples;
    report.workers = workers;
    report.repeats = options.repeats;
    report.warmup = options.warmup;

    std::vector<double> out(samples);
    {
        HysteronBank serial = initial;
        serial.set_options({1, Reduction::serial, options.block_size});
        std::vector<double> serial_out(samples);
        serial.run_into(xs, serial_out);

        HysteronBank reference = initial;
        reference.set_options({1, Reduction::blocked_tree, options.block_size});
        reference.run_into(xs, out);
        report.reference_checksum = checksum(out, reference.states());
        for (std::size_t k = 0; k < samples; ++k)
            report.serial_deviation = std::max(report.serial_deviation, std::abs(out[k] - serial_out[k]));
    }

    bool valid = report.serial_deviation <= 1e-12 * static_cast<double>(n);

    for (std::size_t w = 0; w < options.warmup; ++w) {
        HysteronBank bank = initial;
        bank.run_into(xs, out);
    }

    std::vector<double> walls;
    for (std::size_t r = 0; r < options.repeats; ++r) {
        HysteronBank bank = initial;
        const auto start = std::chrono::steady_clock::now();
        bank.run_into(xs, out);
        const auto stop = std::chrono::steady_clock::now();
        walls.push_back(std::chrono::duration<double>(stop - start).count());

        const auto sum = checksum(out, bank.states());
        if (r == 0)
            report.checksum = sum;
        valid = valid && sum == report.reference_checksum;
    }

    std::sort(walls.begin(), walls.end());
    report.wall_seconds_min = walls.front();
    report.wall_seconds_max = walls.back();
    report.wall_seconds = walls[walls.size() / 2];
    // Guard against timer granularity on tiny workloads.
    const double wall = std::max(report.wall_seconds, 1e-9);
    report.samples_per_second = static_cast<double>(samples) / wall;
    report.updates_per_second = static_cast<double>(n) * report.samples_per_second;
    report.max_hysterons_at_reference_rate = report.updates_per_second / reference_rate_hz;
    report.realtime_margin = report.samples_per_second / reference_rate_hz;
    report.valid = valid;
    return report;
}

nlohmann::json to_json(const BenchReport& report) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(report.checksum));
    char ref[17];
    std::snprintf(ref, sizeof ref, "%016llx", static_cast<unsigned long long>(report.reference_checksum));
    return {
        {"n_hysterons", report.n_hysterons},
        {"samples", report.samples},
        {"workers", report.workers},
        {"repeats", report.repeats},
        {"warmup", report.warmup},
        {"wall_seconds", report.wall_seconds},
        {"wall_seconds_min", report.wall_seconds_min},
        {"wall_seconds_max", report.wall_seconds_max},
        {"updates_per_second", report.updates_per_second},
        {"samples_per_second", report.samples_per_second},
        {"max_hysterons_at_2khz", report.max_hysterons_at_reference_rate},
        {"realtime_margin", report.realtime_margin},
        {"checksum", hex},
        {"reference_checksum", ref},
        {"serial_deviation", report.serial_deviation},
        {"valid", report.valid},
    };
}

} // namespace preisach::bench
