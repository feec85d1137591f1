#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "wassbound/variance.hpp"

using namespace wassbound;

namespace {
const InnovationModel kNormal = InnovationModel::normal();
const InnovationModel kT9 = InnovationModel::student_t(9);
}  // namespace

TEST_CASE("sigma_asymptotic closed form values") {
    CHECK(sigma_asymptotic(AR1Model(0.0, kNormal), 0) == doctest::Approx(2.0));
    CHECK(sigma_asymptotic(AR1Model(0.0, kNormal), 1) == doctest::Approx(1.0));
    CHECK(sigma_asymptotic(AR1Model(0.0, kT9), 0) == doctest::Approx(3.2));
    CHECK_THROWS_AS(sigma_asymptotic(AR1Model(0.0, kT9), -1), std::invalid_argument);
}

TEST_CASE("sigma_asymptotic equals the sum of lag-product covariances of X") {
    // sum_u cov(X(k)X(0), X(u+k)X(u)) with X cumulants from a long MA truncation
    for (double a : {0.3, -0.6})
        for (int k : {0, 1, 2}) {
            const MDepApprox far(AR1Model(a, kT9), 120);
            double s = 0.0;
            for (int u = -200; u <= 200; ++u) s += c_tilde(far, k, u);
            CHECK(sigma_asymptotic(far.model, k) == doctest::Approx(s).epsilon(1e-10));
        }
}

TEST_CASE("c_tilde cases") {
    CHECK(c_tilde(MDepApprox(AR1Model(0.0, kNormal), 0), 0, 0) == doctest::Approx(2.0));
    CHECK(c_tilde(MDepApprox(AR1Model(0.5, kNormal), 3), 0, 5) == 0.0);
    for (double a : {0.0, 0.5, -0.7})
        for (int m : {0, 1, 2})
            for (int k : {0, 1, 3}) {
                const MDepApprox ap(AR1Model(a, kT9), m);
                for (int u = 0; u <= m + k + 2; ++u) {
                    CHECK(c_tilde(ap, k, u) == doctest::Approx(c_tilde(ap, k, -u)).epsilon(1e-14));
                    if (u > m) CHECK(c_tilde(ap, k, u) == 0.0);
                }
            }
}

TEST_CASE("c_tilde against moments of Z") {
    for (const auto& e : {kNormal, kT9})
        for (double a : {0.5, -0.3})
            for (int m : {1, 2})
                for (int k : {0, 1, 2})
                    for (int u : {0, 1, 2}) {
                        const MDepApprox ap(AR1Model(a, e), m);
                        CHECK(c_tilde(ap, k, u) == doctest::Approx(oracle::z_cumulant(ap, k, {0, u})).epsilon(1e-10));
                    }
}

TEST_CASE("sigma_tilde cases") {
    for (int m : {0, 3})
        for (int n : {5, 40}) {
            const MDepApprox ap(AR1Model(0.0, kT9), m);
            CHECK(sigma_tilde(ap, 0, n) == doctest::Approx(1.2 + 2.0));
        }
    const MDepApprox ap(AR1Model(0.6, kT9), 2);
    CHECK(sigma_tilde(ap, 4, 5) == doctest::Approx(c_tilde(ap, 4, 0) / 5.0).epsilon(1e-14));
    CHECK_THROWS_AS(sigma_tilde(ap, 3, 3), std::invalid_argument);
}

TEST_CASE("sigma_tilde equals the brute-force variance of the normalized lag-product sum") {
    for (const auto& e : {kNormal, kT9})
        for (double a : {0.5, -0.8})
            for (int m : {1, 2})
                for (int k : {0, 1})
                    for (int n : {3, 6, 9}) {
                        const MDepApprox ap(AR1Model(a, e), m);
                        CHECK(sigma_tilde(ap, k, n) ==
                              doctest::Approx(oracle::z_sum_variance(ap, k, n)).epsilon(1e-10));
                    }
}

TEST_CASE("sigma_tilde converges to sigma") {
    const MDepApprox ap(AR1Model(0.5, kNormal), 60);
    CHECK(std::abs(sigma_tilde(ap, 0, 100000) - sigma_asymptotic(ap.model, 0)) < 1e-3);
}

TEST_CASE("sigma_tilde positive on the experiment grid") {
    for (const auto& e : {kNormal, kT9, InnovationModel::student_t(14)})
        for (double a : {0.0, 0.1, 0.3, 0.5, 0.7})
            for (int k : {0, 1, 2})
                for (int m = 0; m <= 30; m += 3)
                    for (int n : {25, 100, 2000}) CHECK(sigma_tilde(MDepApprox(AR1Model(a, e), m), k, n) > 0.0);
}
