#include "preisach/signals.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "preisach/error.hpp"

namespace preisach::signals {

namespace {

double sine_at(double frequency_hz, double sample_rate_hz, std::size_t k) {
    const double cycles = std::fmod(frequency_hz * static_cast<double>(k), sample_rate_hz) / sample_rate_hz;
    return std::sin(2.0 * std::numbers::pi * cycles);
}

// 53 random bits mapped onto [-1, 1).
double uniform_symmetric(std::mt19937_64& rng) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view text, double& value) {
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc{} && ptr == end && std::isfinite(value);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot read signal file '" + path + "'");
    return in;
}

} // namespace

std::string_view to_string(SignalKind kind) noexcept {
    switch (kind) {
    case SignalKind::sinusoid: return "sinusoid";
    case SignalKind::decaying_sinusoid: return "decaying-sinusoid";
    case SignalKind::filtered_noise: return "filtered-noise";
    case SignalKind::file_replay: return "file-replay";
    case SignalKind::piecewise_linear: return "piecewise-linear";
    }
    return "unknown";
}

SignalKind parse_signal_kind(std::string_view name) {
    for (auto k : {SignalKind::sinusoid, SignalKind::decaying_sinusoid, SignalKind::filtered_noise,
                   SignalKind::file_replay, SignalKind::piecewise_linear}) {
        if (name == to_string(k))
            return k;
    }
    throw contract_error("unknown signal kind '" + std::string(name) + "'");
}

void SignalSpec::validate() const {
    if (!std::isfinite(sample_rate_hz) || sample_rate_hz <= 0.0)
        throw contract_error("sample_rate_hz must be positive");
    if (kind == SignalKind::file_replay || kind == SignalKind::piecewise_linear) {
        if (path.empty())
            throw contract_error("signal kind '" + std::string(to_string(kind)) + "' needs a path");
        return;
    }
    if (!std::isfinite(duration_s) || duration_s <= 0.0)
        throw contract_error("duration_s must be positive");
    if (!std::isfinite(amplitude) || amplitude < 0.0)
        throw contract_error("amplitude must be finite and nonnegative");
    if (!std::isfinite(frequency_hz) || frequency_hz < 0.0)
        throw contract_error("frequency_hz must be finite and nonnegative");
    if (!std::isfinite(decay) || decay < 0.0)
        throw contract_error("decay must be finite and nonnegative");
    if (kind == SignalKind::filtered_noise && (!std::isfinite(cutoff_hz) || cutoff_hz <= 0.0))
        throw contract_error("cutoff_hz must be positive");
    if (std::llround(duration_s * sample_rate_hz) < 1)
        throw contract_error("signal would contain no samples");
}

std::size_t SignalSpec::sample_count() const {
    return static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
}

std::vector<double> generate(const SignalSpec& spec) {
    spec.validate();

    switch (spec.kind) {
    case SignalKind::file_replay:
        return read_samples(spec.path);
    case SignalKind::piecewise_linear: {
        const auto points = read_breakpoints(spec.path);
        return resample_piecewise_linear(points, spec.sample_rate_hz);
    }
    default:
        break;
    }

    const std::size_t n = spec.sample_count();
    std::vector<double> xs(n);
    const double fs = spec.sample_rate_hz;

    if (spec.kind == SignalKind::sinusoid) {
        for (std::size_t k = 0; k < n; ++k)
            xs[k] = spec.amplitude * sine_at(spec.frequency_hz, fs, k);
    } else if (spec.kind == SignalKind::decaying_sinusoid) {
        for (std::size_t k = 0; k < n; ++k) {
            const double envelope = spec.amplitude * std::exp(-spec.decay * static_cast<double>(k) / fs);
            xs[k] = envelope * sine_at(spec.frequency_hz, fs, k);
        }
    } else {
        std::mt19937_64 rng(spec.seed);
        const double c = 1.0 - std::exp(-2.0 * std::numbers::pi * spec.cutoff_hz / fs);
        double y = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double u = spec.amplitude * uniform_symmetric(rng);
            y += c * (u - y);
            xs[k] = y;
        }
    }
    return xs;
}

std::vector<double> resample_piecewise_linear(std::span<const Breakpoint> points, double rate_hz) {
    if (points.size() < 2)
        throw contract_error("piecewise-linear signal needs at least two points");
    if (!std::isfinite(rate_hz) || rate_hz <= 0.0)
        throw contract_error("resampling rate must be positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].t) || !std::isfinite(points[i].x))
            throw contract_error("piecewise-linear point " + std::to_string(i) + " is not finite");
        if (i > 0 && !(points[i].t > points[i - 1].t))
            throw contract_error("piecewise-linear times must be strictly increasing (point " +
                                 std::to_string(i) + ")");
    }

    const double t0 = points.front().t;
    const double t_end = points.back().t;
    std::vector<double> xs;
    std::size_t seg = 0;
    for (std::size_t k = 0;; ++k) {
        const double t = t0 + static_cast<double>(k) / rate_hz;
        if (!(t < t_end))
            break;
        while (points[seg + 1].t <= t)
            ++seg;
        const Breakpoint& p = points[seg];
        const Breakpoint& q = points[seg + 1];
        xs.push_back(p.x + (q.x - p.x) * ((t - p.t) / (q.t - p.t)));
    }
    xs.push_back(points.back().x);
    return xs;
}

std::vector<double> read_samples(const std::string& path) {
    auto in = open_input(path);
    std::vector<double> xs;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (trim(line).empty())
            continue;
        double v;
        if (!parse_real(line, v))
            throw contract_error(path + ":" + std::to_string(lineno) + ": not a finite number");
        xs.push_back(v);
    }
    if (in.bad())
        throw io_error("error while reading '" + path + "'");
    if (xs.empty())
        throw contract_error(path + ": no samples");
    return xs;
}

std::vector<Breakpoint> read_breakpoints(const std::string& path) {
    auto in = open_input(path);
    std::vector<Breakpoint> points;
    std::string line;
    bool first = true;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto text = trim(line);
        if (text.empty())
            continue;
        const auto comma = text.find(',');
        Breakpoint p{};
        const bool ok = comma != std::string_view::npos && parse_real(text.substr(0, comma), p.t) &&
                        parse_real(text.substr(comma + 1), p.x);
        if (!ok) {
            // A non-numeric first line is taken as the header.
            if (first && text.find_first_of("0123456789") == std::string_view::npos) {
                first = false;
                continue;
            }
            throw contract_error(path + ":" + std::to_string(lineno) + ": expected 't,x'");
        }
        first = false;
        points.push_back(p);
    }
    if (in.bad())
        throw io_error("error while reading '" + path + "'");
    return points;
}

} // namespace preisach::signals
