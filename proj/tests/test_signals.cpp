#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "preisach/error.hpp"
#include "preisach/signals.hpp"

using namespace preisach;
using namespace preisach::signals;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("sph_signals_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

SignalSpec sine(double fs, double duration) {
    SignalSpec s;
    s.kind = SignalKind::sinusoid;
    s.sample_rate_hz = fs;
    s.duration_s = duration;
    return s;
}

} // namespace

TEST_CASE("sinusoid at 2 kHz for 120 s") {
    const auto xs = generate(sine(2000.0, 120.0));
    REQUIRE(xs.size() == 240000);
    CHECK(xs[0] == 0.0);
    CHECK(xs[500] == 1.0);
    CHECK(xs[1500] == -1.0);
    for (double x : xs)
        REQUIRE(std::abs(x) <= 1.0);
    for (std::size_t k = 0; k + 2000 < xs.size(); k += 997)
        CHECK(xs[k] == xs[k + 2000]);
}

TEST_CASE("decaying sinusoid") {
    SignalSpec s = sine(1000.0, 4.0);
    const auto plain = generate(s);
    s.kind = SignalKind::decaying_sinusoid;
    s.decay = 0.0;
    CHECK(generate(s) == plain);

    s.decay = 0.4;
    const auto xs = generate(s);
    double prev = INFINITY;
    for (std::size_t p = 0; p < 4; ++p) {
        double peak = 0.0;
        for (std::size_t k = p * 1000; k < (p + 1) * 1000; ++k)
            peak = std::max(peak, std::abs(xs[k]));
        CHECK(peak < prev);
        prev = peak;
    }
}

TEST_CASE("filtered noise is seeded and bounded") {
    SignalSpec s;
    s.kind = SignalKind::filtered_noise;
    s.amplitude = 2.0;
    s.cutoff_hz = 10.0;
    s.sample_rate_hz = 2000.0;
    s.duration_s = 5.0;
    s.seed = 17;
    const auto a = generate(s);
    CHECK(a.size() == 10000);
    CHECK(generate(s) == a);
    for (double x : a)
        CHECK(std::abs(x) <= 2.0);
    s.seed = 18;
    CHECK(generate(s) != a);
}

TEST_CASE("filtered noise follows the first-order recursion") {
    SignalSpec s;
    s.kind = SignalKind::filtered_noise;
    s.amplitude = 3.0;
    s.cutoff_hz = 10.0;
    s.sample_rate_hz = 2000.0;
    s.duration_s = 0.5;
    s.seed = 99;
    const auto xs = generate(s);

    std::mt19937_64 rng(99);
    const double c = 1.0 - std::exp(-2.0 * std::numbers::pi * 10.0 / 2000.0);
    double y = 0.0;
    for (double x : xs) {
        const double u = 3.0 * (2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0);
        y += c * (u - y);
        REQUIRE(x == y);
    }
}

TEST_CASE("filter is transparent far above the sampling rate") {
    // With a cutoff far above the sampling rate the filter coefficient is
    // 1 - exp(-2 pi * 1e4) = 1, so the output is the raw noise, which must
    // lie in [-A, A] and average close to zero.
    SignalSpec s;
    s.kind = SignalKind::filtered_noise;
    s.cutoff_hz = 1e6;
    s.sample_rate_hz = 100.0;
    s.duration_s = 1000.0;
    s.amplitude = 1.0;
    const auto xs = generate(s);
    double mean = 0.0, sq = 0.0;
    for (double x : xs) {
        mean += x;
        sq += x * x;
    }
    mean /= xs.size();
    sq /= xs.size();
    CHECK(std::abs(mean) < 0.02);
    CHECK(sq == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("invalid specs are rejected") {
    SignalSpec s = sine(0.0, 1.0);
    CHECK_THROWS_AS(generate(s), contract_error);
    s = sine(100.0, 0.0);
    CHECK_THROWS_AS(generate(s), contract_error);
    s = sine(100.0, 0.001);
    CHECK_THROWS_AS(generate(s), contract_error);
    s = sine(100.0, 1.0);
    s.kind = SignalKind::filtered_noise;
    s.cutoff_hz = 0.0;
    CHECK_THROWS_AS(generate(s), contract_error);
    s = sine(100.0, 1.0);
    s.decay = -1.0;
    CHECK_THROWS_AS(generate(s), contract_error);
    s.kind = SignalKind::file_replay;
    CHECK_THROWS_AS(generate(s), contract_error);
    CHECK_THROWS_AS(parse_signal_kind("square"), contract_error);
    CHECK(parse_signal_kind("filtered-noise") == SignalKind::filtered_noise);
}

TEST_CASE("piecewise-linear resampling") {
    const std::vector<Breakpoint> ramp{{0.0, -1.0}, {2.0, 3.0}};
    for (double rate : {1.0, 3.0, 7.5, 100.0}) {
        const auto xs = resample_piecewise_linear(ramp, rate);
        CHECK(xs.front() == -1.0);
        CHECK(xs.back() == 3.0);
        for (std::size_t k = 1; k < xs.size(); ++k)
            CHECK(xs[k] > xs[k - 1]);
    }
    const auto xs = resample_piecewise_linear(ramp, 2.0);
    CHECK(xs == std::vector<double>{-1.0, 0.0, 1.0, 2.0, 3.0});

    const std::vector<Breakpoint> backwards{{0.0, 0.0}, {1.0, 1.0}, {0.5, 0.0}};
    CHECK_THROWS_AS(resample_piecewise_linear(backwards, 10.0), contract_error);
    const std::vector<Breakpoint> one{{0.0, 0.0}};
    CHECK_THROWS_AS(resample_piecewise_linear(one, 10.0), contract_error);
}

TEST_CASE("file replay") {
    const auto good = temp_file("good.txt", "0.5\n-1e-1\n\n  2 \n+3.25\n");
    SignalSpec s;
    s.kind = SignalKind::file_replay;
    s.path = good;
    CHECK(generate(s) == std::vector<double>{0.5, -0.1, 2.0, 3.25});

    s.path = temp_file("nan.txt", "0.5\nnan\n");
    CHECK_THROWS_WITH_AS(generate(s), doctest::Contains(":2:"), contract_error);
    s.path = temp_file("junk.txt", "0.5\n1.0x\n");
    CHECK_THROWS_AS(generate(s), contract_error);
    s.path = "/nonexistent/sph/signal.txt";
    CHECK_THROWS_AS(generate(s), io_error);
}

TEST_CASE("piecewise-linear files with and without header") {
    SignalSpec s;
    s.kind = SignalKind::piecewise_linear;
    s.sample_rate_hz = 2.0;
    s.path = temp_file("pl_header.csv", "t,x\n0,0\n1,1\n1.5,0\n");
    CHECK(generate(s) == std::vector<double>{0.0, 0.5, 1.0, 0.0});
    s.path = temp_file("pl_plain.csv", "0,0\n1,1\n1.5,0\n");
    CHECK(generate(s) == std::vector<double>{0.0, 0.5, 1.0, 0.0});
    s.path = temp_file("pl_bad.csv", "t,x\n0,0\n1;1\n");
    CHECK_THROWS_AS(generate(s), contract_error);
}
