#include "wassbound/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wassbound/variance.hpp"

namespace wassbound {

int burn_in(double alpha) {
    const double a = std::abs(alpha);
    const double rate = a > 0.0 ? std::max(1e-12, -std::log2(a)) : INFINITY;
    return static_cast<int>(std::ceil(std::max(100.0, 52.0 / rate)));
}

namespace {

void fill_path(double alpha, int burn, InnovationSampler& draw, std::span<double> out) {
    double x = 0.0;
    for (int i = 0; i < burn; ++i) x = alpha * x + draw();
    for (auto& v : out) {
        x = alpha * x + draw();
        v = x;
    }
}

}  // namespace

std::vector<double> simulate_ar1(const AR1Model& model, int n, const RngHandle& rng) {
    if (n < 1) throw std::invalid_argument("simulate_ar1: n must be >= 1");
    InnovationSampler draw(model.innovations, rng);
    std::vector<double> out(n);
    fill_path(model.alpha, burn_in(model.alpha), draw, out);
    return out;
}

double statistic(std::span<const double> x, int k, double gamma) {
    const int n = static_cast<int>(x.size());
    if (k < 0 || k >= n) throw std::invalid_argument("statistic: need 0 <= k < n");
    double s = 0.0;
    for (int t = 0; t + k < n; ++t) s += x[t + k] * x[t];
    return std::sqrt(static_cast<double>(n)) * (s / n - gamma);
}

// Wichura's AS 241 (PPND16).
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: u must be in (0, 1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2509.0809287301226727 * r + 33430.575583588128105) * r + 67265.770927008700853) * r +
                    45921.953931549871457) * r + 13731.693765509461125) * r + 1971.5909503065514427) * r +
                 133.14166789178437745) * r + 3.387132872796366608) /
               (((((((5226.495278852545925 * r + 28729.085735721942674) * r + 39307.89580009271061) * r +
                    21213.794301586595867) * r + 5394.1960214247511077) * r + 687.1870074920579083) * r +
                 42.313330701600911252) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.7454501427834140764e-4 * r + 0.0227238449892691845833) * r + 0.24178072517745061177) * r +
                   1.27045825245236838258) * r + 3.64784832476320460504) * r + 5.7694972214606914055) * r +
                4.6303378461565452959) * r + 1.42343711074968357734) /
              (((((((1.05075007164441684324e-9 * r + 5.475938084995344946e-4) * r + 0.0151986665636164571966) * r +
                   0.14810397642748007459) * r + 0.68976733498510000455) * r + 1.6763848301838038494) * r +
                2.05319162663775882187) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r + 0.0012426609473880784386) * r +
                   0.026532189526576123093) * r + 0.29656057182850489123) * r + 1.7848265399172913358) * r +
                5.4637849111641143699) * r + 6.6579046435011037772) /
              (((((((2.04426310338993978564e-15 * r + 1.4215117583164458887e-7) * r + 1.8463183175100546818e-5) * r +
                   7.868691311456132591e-4) * r + 0.0148753612908506148525) * r + 0.13692988092273580531) * r +
                0.59983220655588793769) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double w1_vs_normal(std::span<double> samples, double sigma2) {
    if (samples.empty()) throw std::invalid_argument("w1_vs_normal: empty input");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("w1_vs_normal: sigma2 must be positive");
    std::sort(samples.begin(), samples.end());
    const double sd = std::sqrt(sigma2);
    const double R = static_cast<double>(samples.size());
    double acc = 0.0;
    for (std::size_t r = 0; r < samples.size(); ++r)
        acc += std::abs(samples[r] - sd * normal_quantile((2.0 * r + 1.0) / (2.0 * R)));
    return acc / R;
}

W1Estimate estimate_w1(const AR1Model& model, int k, int n, long long R, int B, std::uint64_t seed,
                       ExecPolicy policy) {
    if (R < 2) throw std::invalid_argument("estimate_w1: R must be >= 2");
    if (B < 1) throw std::invalid_argument("estimate_w1: B must be >= 1");
    if (k < 0 || k >= n) throw std::invalid_argument("estimate_w1: need 0 <= k < n");
    const double g = gamma(model, k);
    const double sigma = sigma_asymptotic(model, k);
    const int burn = burn_in(model.alpha);
    const long long streams = (R + kPathsPerStream - 1) / kPathsPerStream;

    W1Estimate est;
    est.R = R;
    est.B = B;
    est.seed = seed;
    std::vector<double> z(R);
    for (int i = 0; i < B; ++i) {
        auto batch = [&](long long s) {
            InnovationSampler draw(model.innovations,
                                   {seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(streams) +
                                              static_cast<std::uint64_t>(s)});
            std::vector<double> path(n);
            const long long end = std::min(R, (s + 1) * kPathsPerStream);
            for (long long r = s * kPathsPerStream; r < end; ++r) {
                fill_path(model.alpha, burn, draw, path);
                z[r] = statistic(path, k, g);
            }
        };
        if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long long s = 0; s < streams; ++s) batch(s);
        } else {
            for (long long s = 0; s < streams; ++s) batch(s);
        }
        est.per_replicate.push_back(w1_vs_normal(z, sigma));
    }
    double sum = 0.0;
    for (double w : est.per_replicate) sum += w;
    est.mean = sum / B;
    if (B > 1) {
        double ss = 0.0;
        for (double w : est.per_replicate) ss += (w - est.mean) * (w - est.mean);
        est.sd = std::sqrt(ss / (B - 1));
    }
    return est;
}

}  // namespace wassbound
