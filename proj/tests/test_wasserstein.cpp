#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "wassbound/parallel.hpp"
#include "wassbound/wasserstein.hpp"

using namespace wassbound;

TEST_CASE("burn-in length") {
    CHECK(burn_in(0.0) == 100);
    CHECK(burn_in(0.5) == 100);
    CHECK(burn_in(-0.5) == 100);
    CHECK(burn_in(0.7) == 102);  // 52 / log2(1/0.7) = 101.06
    CHECK(burn_in(0.99) == static_cast<int>(std::ceil(52.0 / -std::log2(0.99))));
    CHECK(std::pow(0.7, burn_in(0.7)) <= std::ldexp(1.0, -52));
}

TEST_CASE("alpha = 0 path is the innovation sequence after burn-in") {
    const auto t9 = InnovationModel::student_t(9);
    const auto path = simulate_ar1(AR1Model(0.0, t9), 20, {7, 3});
    const auto raw = sample(t9, {7, 3}, 120);
    CHECK(std::equal(path.begin(), path.end(), raw.begin() + 100));
}

TEST_CASE("simulated path follows the recursion") {
    const auto nrm = InnovationModel::normal();
    const auto raw = sample(nrm, {1, 1}, 150);
    const auto path = simulate_ar1(AR1Model(0.5, nrm), 50, {1, 1});
    for (int t = 1; t < 50; ++t) CHECK(path[t] == 0.5 * path[t - 1] + raw[100 + t]);
    CHECK_THROWS_AS(simulate_ar1(AR1Model(0.5, nrm), 0, {1, 1}), std::invalid_argument);
}

TEST_CASE("statistic examples") {
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    CHECK(statistic(x, 0, 0.0) == doctest::Approx(2.0 * 30.0 / 4.0));
    CHECK(statistic(x, 1, 0.0) == doctest::Approx(2.0 * 20.0 / 4.0));
    CHECK(statistic(x, 3, 1.0) == doctest::Approx(2.0 * (4.0 / 4.0 - 1.0)));
    CHECK_THROWS_AS(statistic(x, 4, 0.0), std::invalid_argument);
}

TEST_CASE("normal quantile") {
    CHECK(normal_quantile(0.5) == 0.0);
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-15));
    CHECK(normal_quantile(0.025) == doctest::Approx(-1.959963984540054).epsilon(1e-15));
    CHECK(normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-14));
    for (double u : {1e-300, 1e-12, 0.01, 0.2, 0.42, 0.6, 0.9, 0.999999})
        CHECK(oracle::normal_cdf(normal_quantile(u)) == doctest::Approx(u).epsilon(1e-13));
    for (double u : {0.0, 1.0, -0.1, 1.5}) CHECK_THROWS_AS(normal_quantile(u), std::invalid_argument);
    CHECK(normal_cdf(0.0) == 0.5);
}

TEST_CASE("W1 against the normal target") {
    std::vector<double> exact(1000);
    for (int r = 0; r < 1000; ++r) exact[r] = 3.0 * normal_quantile((2.0 * r + 1.0) / 2000.0);
    auto shuffled = exact;
    std::mt19937_64 gen(4);
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(w1_vs_normal(shuffled, 9.0) < 1e-14);

    std::vector<double> shifted(exact);
    for (auto& v : shifted) v += 0.25;
    CHECK(w1_vs_normal(shifted, 9.0) == doctest::Approx(0.25).epsilon(1e-12));

    auto a = sample(InnovationModel::student_t(9), {2, 2}, 5000);
    auto b = a;
    std::shuffle(b.begin(), b.end(), gen);
    CHECK(w1_vs_normal(a, 1.0) == w1_vs_normal(b, 1.0));
    CHECK(std::is_sorted(a.begin(), a.end()));

    std::vector<double> empty;
    CHECK_THROWS_AS(w1_vs_normal(empty, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(w1_vs_normal(a, 0.0), std::invalid_argument);
}

TEST_CASE("W1 of a normal with the wrong scale") {
    // W1(N(0,4), N(0,1)) = (2 - 1) sqrt(2/pi)
    auto z = sample(InnovationModel::normal(), {11, 0}, 200000);
    for (auto& v : z) v *= 2.0;
    CHECK(std::abs(w1_vs_normal(z, 1.0) - std::sqrt(2.0 / std::numbers::pi)) < 0.01);
}

TEST_CASE("estimate_w1 is deterministic and schedule independent") {
    const AR1Model model(0.5, InnovationModel::student_t(9));
    const auto par = estimate_w1(model, 1, 30, 10000, 3, 77, ExecPolicy::parallel);
    const auto ser = estimate_w1(model, 1, 30, 10000, 3, 77, ExecPolicy::serial);
    CHECK(par.per_replicate == ser.per_replicate);
    CHECK(par.mean == ser.mean);
    CHECK(par.sd == ser.sd);
    CHECK(par.per_replicate.size() == 3);
    CHECK(par.per_replicate[0] != par.per_replicate[1]);
    const auto other = estimate_w1(model, 1, 30, 10000, 3, 78);
    CHECK(other.mean != par.mean);
    CHECK(estimate_w1(model, 1, 30, 5000, 1, 77).sd == 0.0);
}

TEST_CASE("estimate_w1 errors") {
    const AR1Model model(0.5, InnovationModel::normal());
    CHECK_THROWS_AS(estimate_w1(model, 0, 25, 1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_w1(model, 0, 25, 100, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_w1(model, 25, 25, 100, 2, 1), std::invalid_argument);
}

TEST_CASE("W1 estimates decrease in n") {
    const AR1Model model(0.5, InnovationModel::student_t(9));
    const double w25 = estimate_w1(model, 0, 25, 20000, 2, 5).mean;
    const double w250 = estimate_w1(model, 0, 250, 20000, 2, 5).mean;
    CHECK(w250 < w25);
}
