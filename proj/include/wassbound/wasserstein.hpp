#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wassbound/ar1.hpp"
#include "wassbound/innovations.hpp"
#include "wassbound/qbound.hpp"

namespace wassbound {

struct W1Estimate {
    std::vector<double> per_replicate;
    double mean = 0.0;
    double sd = 0.0;
    long long R = 0;
    int B = 0;
    std::uint64_t seed = 0;
};

// ceil(max(100, 52 / -log2|alpha|)), so that |alpha|^burn_in <= 2^-52
int burn_in(double alpha);

std::vector<double> simulate_ar1(const AR1Model& model, int n, const RngHandle& rng);

// sqrt(n) * ((1/n) sum_{t=1}^{n-k} x(t+k) x(t) - gamma)
double statistic(std::span<const double> x, int k, double gamma);

double normal_quantile(double u);
double normal_cdf(double x);

// Sorts samples in place.
double w1_vs_normal(std::span<double> samples, double sigma2);

// Paths per RNG substream inside one replicate.
constexpr long long kPathsPerStream = 4096;

W1Estimate estimate_w1(const AR1Model& model, int k, int n, long long R, int B, std::uint64_t seed,
                       ExecPolicy policy = ExecPolicy::parallel);

}  // namespace wassbound
