#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "preisach/hysteron.hpp"

namespace preisach::bench {

// Sampling rate the throughput figures are compared against.
inline constexpr double reference_rate_hz = 2000.0;

struct BenchOptions {
    std::size_t repeats = 3;
    std::size_t warmup = 3;
    std::size_t block_size = 256;
};

struct BenchReport {
    std::size_t n_hysterons = 0;
    std::size_t samples = 0;
    std::size_t workers = 0;
    std::size_t repeats = 0;
    std::size_t warmup = 0;

    double wall_seconds = 0.0; // median over repeats
    double wall_seconds_min = 0.0;
    double wall_seconds_max = 0.0;
    double updates_per_second = 0.0;
    double samples_per_second = 0.0;
    double max_hysterons_at_reference_rate = 0.0;
    double realtime_margin = 0.0; // samples_per_second / reference_rate_hz

    std::uint64_t checksum = 0;
    std::uint64_t reference_checksum = 0;
    double serial_deviation = 0.0; // max |f - f_serial| over the run
    bool valid = false;
};

// First n nodes of the smallest uniform mesh on [-1, 1] holding at least n.
std::vector<HysteronParams> synthetic_nodes(std::size_t n);

// FNV-1a over the bit patterns of the outputs followed by the final states.
std::uint64_t checksum(std::span<const double> outputs, std::span<const double> states);

// Times a synthetic bank of n uniformly weighted hysterons driven by a 1 Hz
// full-range sinusoid at the reference rate. Every timed run is checked
// against a single-threaded evaluation of the same reduction, and that
// reference against the ascending serial sum (tolerance 1e-12 * n). A
// report with valid == false must not be trusted.
BenchReport bench_bank(std::size_t n, std::size_t samples, std::size_t workers, const BenchOptions& options = {});

nlohmann::json to_json(const BenchReport& report);

} // namespace preisach::bench
