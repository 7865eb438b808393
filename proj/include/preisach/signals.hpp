#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace preisach::signals {

enum class SignalKind { sinusoid, decaying_sinusoid, filtered_noise, file_replay, piecewise_linear };

std::string_view to_string(SignalKind kind) noexcept;
SignalKind parse_signal_kind(std::string_view name); // throws contract_error

struct SignalSpec {
    SignalKind kind = SignalKind::sinusoid;
    double amplitude = 1.0;
    double frequency_hz = 1.0;
    double decay = 0.0; // 1/s
    double sample_rate_hz = 1000.0;
    double duration_s = 1.0;
    double cutoff_hz = 10.0;
    std::uint64_t seed = 0;
    std::string path; // file-replay / piecewise-linear

    void validate() const;

    // round(duration_s * sample_rate_hz); generated kinds only.
    std::size_t sample_count() const;
};

// sinusoid           x_k = A sin(2 pi f k / fs)
// decaying-sinusoid  x_k = A exp(-decay k / fs) sin(2 pi f k / fs)
// filtered-noise     uniform [-A, A] white noise through
//                    y_k = y_{k-1} + c (u_k - y_{k-1}), c = 1 - exp(-2 pi cutoff / fs), y_{-1} = 0
// file-replay        one decimal sample per line from `path`
// piecewise-linear   "t,x" CSV from `path` resampled at sample_rate_hz
//
// The sine phase is reduced as fmod(f k, fs) / fs before scaling by 2 pi, so
// integer frequencies give sample-exact periodic sequences.
std::vector<double> generate(const SignalSpec& spec);

struct Breakpoint {
    double t;
    double x;
};

// Linear interpolation at t0 + k / rate_hz for every instant strictly before
// the last breakpoint, followed by the last breakpoint itself. Requires at
// least two breakpoints with strictly increasing, finite t.
std::vector<double> resample_piecewise_linear(std::span<const Breakpoint> points, double rate_hz);

// Readers for the two file formats. Both reject malformed or non-finite
// values with the offending line number.
std::vector<double> read_samples(const std::string& path);
std::vector<Breakpoint> read_breakpoints(const std::string& path);

} // namespace preisach::signals
