#include <doctest.h>

#include <random>

#include "preisach/bank.hpp"
#include "preisach/oracle.hpp"
#include "support.hpp"

using namespace preisach;
using oracle::OracleRelay;

TEST_CASE("oracle relay follows the case definition") {
    OracleRelay r(1.0, -1.0, +1);
    CHECK(r.step(-1.0) == -1);

    OracleRelay held(1.0, -1.0, -1);
    CHECK(held.step(0.99) == -1);
    CHECK(held.state() == -1);
}

TEST_CASE("oracle relay on the small grid") {
    const double xs[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const int from_down[] = {-1, -1, -1, +1, +1};
    const int from_up[] = {-1, -1, +1, +1, +1};
    for (int k = 0; k < 5; ++k) {
        OracleRelay d(1.0, -1.0, -1), u(1.0, -1.0, +1);
        CHECK(d.step(xs[k]) == from_down[k]);
        CHECK(u.step(xs[k]) == from_up[k]);
    }
}

TEST_CASE("oracle relay rejects bad construction and input") {
    CHECK_THROWS_AS(OracleRelay(0.0, 1.0, 1), contract_error);
    CHECK_THROWS_AS(OracleRelay(1.0, 0.0, 0), contract_error);
    OracleRelay r(1.0, 0.0, 1);
    CHECK_THROWS_AS(r.step(std::nan("")), contract_error);
}

TEST_CASE("oracle model: single relay under a square wave alternates") {
    std::vector<OracleRelay> relays{OracleRelay(0.5, -0.5, -1)};
    const std::vector<double> w{1.0};
    const std::vector<double> xs{1.0, -1.0, 1.0, -1.0, 1.0, -1.0};
    const auto traj = oracle::model_run(relays, w, xs);
    REQUIRE(traj.size() == xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
        CHECK(traj[k].f == (k % 2 == 0 ? 1.0 : -1.0));
}

TEST_CASE("oracle model: input below every beta gives minus the weight sum") {
    std::vector<OracleRelay> relays{OracleRelay(0.5, -0.5, -1), OracleRelay(0.8, -0.2, -1),
                                    OracleRelay(0.2, -0.8, -1)};
    const std::vector<double> w{0.5, 0.25, 0.25};
    const std::vector<double> xs{-0.9};
    CHECK(oracle::model_run(relays, w, xs)[0].f == -1.0);
}

TEST_CASE("oracle model matches bank_run on a 9-level mesh") {
    auto bank = make_bank({-1.0, 1.0, 9}, DensitySpec::uniform(), InitPreset::negative_saturation, 0.0);
    REQUIRE(bank.size() == 45);
    std::vector<OracleRelay> relays;
    for (std::size_t i = 0; i < bank.size(); ++i)
        relays.emplace_back(bank.alphas()[i], bank.betas()[i], -1);
    const std::vector<double> weights(bank.weights().begin(), bank.weights().end());

    std::mt19937_64 rng(2024);
    const auto levels = mesh_levels({-1.0, 1.0, 9});
    const auto xs = testing::random_input(rng, 1000, -1.2, 1.2, levels);
    CHECK(bank.run(xs) == oracle::model_run(relays, weights, xs));
}
