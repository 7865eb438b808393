#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "preisach/hysteron.hpp"
#include "preisach/oracle.hpp"
#include "support.hpp"

using namespace preisach;

namespace {
const RelayState up = RelayState::up();
const RelayState down = RelayState::down();
} // namespace

TEST_CASE("relay_step switching examples") {
    const HysteronParams p{0.5, -0.5};
    CHECK(relay_step(p, down, 0.7) == up);
    CHECK(relay_step(p, up, 0.0) == up);
    CHECK(relay_step(p, up, -0.5) == down);
    CHECK(relay_step(p, down, 0.5) == up);
    CHECK(relay_step(p, down, 0.0) == down);
}

TEST_CASE("relay_init examples") {
    const HysteronParams p{1.0, -1.0};
    CHECK(relay_init(p, -2.0, up) == down);
    CHECK(relay_init(p, 0.0, down) == down);
    CHECK(relay_init(p, 0.0, up) == up);
    CHECK(relay_init(p, 1.0, down) == up);
    CHECK(relay_init(p, -1.0, up) == down);
}

TEST_CASE("sign conventions at zero") {
    CHECK(kernel::sign_zero_up(0.0) == 1.0);
    CHECK(kernel::sign_zero_up(-0.0) == 1.0);
    CHECK(kernel::sign_zero_down(0.0) == -1.0);
    CHECK(kernel::sign_zero_down(-0.0) == -1.0);
    for (double z : {-3.0, -1e-300, 1e-300, 2.5}) {
        const double s = z > 0 ? 1.0 : -1.0;
        CHECK(kernel::sign_zero_up(z) == s);
        CHECK(kernel::sign_zero_down(z) == s);
    }
}

TEST_CASE("degenerate relay resolves the tie downward") {
    const HysteronParams p{0.25, 0.25};
    CHECK(relay_step(p, up, 0.25) == down);
    CHECK(relay_step(p, down, 0.25) == down);
    CHECK(relay_step(p, down, 0.2500001) == up);
    CHECK(relay_step(p, up, 0.2499999) == down);
}

TEST_CASE("contract violations are rejected") {
    const HysteronParams p{0.5, -0.5};
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(relay_step(p, up, std::nan("")), contract_error);
    CHECK_THROWS_AS(relay_step(p, up, inf), contract_error);
    CHECK_THROWS_AS(relay_step({-0.5, 0.5}, up, 0.0), contract_error);
    CHECK_THROWS_AS(relay_step({std::nan(""), 0.0}, up, 0.0), contract_error);
    CHECK_THROWS_AS(relay_init({inf, 0.0}, 0.0, up), contract_error);
    CHECK_THROWS_AS(relay_init(p, -inf, up), contract_error);
    CHECK_THROWS_AS(RelayState::from_value(0.0), contract_error);
    CHECK(RelayState::from_value(-1.0) == down);
}

// alpha = 1, beta = -1; x in {-2, -1, 0, 1, 2}; previous state -1 / +1.
// Expected values read off the relay definition by hand.
TEST_CASE("exhaustive small grid matches the hand-derived table") {
    const HysteronParams p{1.0, -1.0};
    const double xs[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const double from_down[] = {-1, -1, -1, +1, +1};
    const double from_up[] = {-1, -1, +1, +1, +1};
    for (int k = 0; k < 5; ++k) {
        CAPTURE(xs[k]);
        CHECK(relay_step(p, down, xs[k]).value() == from_down[k]);
        CHECK(relay_step(p, up, xs[k]).value() == from_up[k]);
    }
}

TEST_CASE("random sequences agree with the reference relay") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testing::random_relay(rng, -1.0, 1.0);
        const double levels[] = {p.alpha, p.beta};
        const auto xs = testing::random_input(rng, 1000, -1.5, 1.5, levels);
        RelayState y = rng() % 2 ? up : down;
        oracle::OracleRelay ref(p.alpha, p.beta, y.is_up() ? 1 : -1);
        for (double x : xs) {
            y = relay_step(p, y, x);
            REQUIRE(y.value() == static_cast<double>(ref.step(x)));
        }
    }
}

TEST_CASE("relay properties hold on random draws") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto p = testing::random_relay(rng, -2.0, 2.0);
        const double x = rng() % 3 == 0 ? (rng() % 2 ? p.alpha : p.beta) : testing::uniform(rng, -3.0, 3.0);
        for (RelayState prev : {down, up}) {
            const RelayState once = relay_step(p, prev, x);
            CHECK((once == up || once == down));
            CHECK(relay_step(p, once, x) == once);
        }
        CHECK(relay_step(p, up, x) >= relay_step(p, down, x));
        if (x >= p.alpha) {
            CHECK(relay_step(p, down, x) == up);
        }
        if (x <= p.beta) {
            CHECK(relay_step(p, up, x) == down);
        }
    }
}

TEST_CASE("duplicated samples leave the final state unchanged") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testing::random_relay(rng, -1.0, 1.0);
        const auto xs = testing::random_input(rng, 200, -1.2, 1.2);
        RelayState plain = down, dup = down;
        for (double x : xs) {
            plain = relay_step(p, plain, x);
            const int copies = 1 + static_cast<int>(rng() % 3);
            for (int c = 0; c < copies; ++c)
                dup = relay_step(p, dup, x);
        }
        CHECK(plain == dup);
    }
}
