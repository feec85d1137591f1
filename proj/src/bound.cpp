#include "wassbound/bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wassbound/variance.hpp"

namespace wassbound {

StationaryBound::StationaryBound(const AR1Model& model, int m, int k, QMethod method, ExecPolicy policy)
    : approx_(model, m), k_(k), method_(method) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    gamma_k_ = gamma(model, k);
    sigma_ = sigma_asymptotic(model, k);
    const double d2 = mdep_error(approx_, 2);
    k_tilde_ = 2.0 * d2 * std::sqrt(gamma(model, 0)) + d2 * d2;
    const CumYEvaluator cy(approx_);
    for (int u = 0; u <= m; ++u) c_.push_back(c_tilde(cy, k, u));
    if (method == QMethod::method2)
        tables_.emplace(approx_, k, policy);
    else
        q1_ = q_bound_method1(m, k, moment_Y(approx_, 6));
}

BoundBreakdown StationaryBound::at(int n) const {
    if (n <= k_) throw std::invalid_argument("need n > k, got n=" + std::to_string(n));
    BoundBreakdown b;
    b.model = approx_.model;
    b.m = approx_.m;
    b.k = k_;
    b.n = n;
    b.q_method = method_;
    b.gamma_k = gamma_k_;
    b.sigma = sigma_;
    b.k_tilde = k_tilde_;

    const int len = n - k_;
    const int lim = std::min(len - 1, approx_.m);
    double s = c_[0];
    for (int u = 1; u <= lim; ++u) s += 2.0 * (1.0 - static_cast<double>(u) / len) * c_[u];
    b.sigma_tilde = static_cast<double>(len) / n * s;
    if (!(b.sigma > 0.0) || !(b.sigma_tilde > 0.0))
        throw std::domain_error("bound needs positive sigma and sigma_tilde");

    b.sum_q = method_ == QMethod::method2 ? tables_->sum_q_method2(n) : len * q1_;

    const double rn = std::sqrt(static_cast<double>(n));
    b.term1 = k_ / rn * std::abs(gamma_k_);
    b.term2 = std::sqrt(2.0 / (std::numbers::pi * b.sigma)) * std::abs(b.sigma - b.sigma_tilde);
    b.term3 = 2.0 * len / rn * k_tilde_;
    b.term4 = 2.0 * std::pow(n * b.sigma_tilde, -1.5) * b.sum_q;
    b.total = b.term1 + b.term2 + b.term3 + b.term4;
    return b;
}

BoundBreakdown bound_stationary(const AR1Model& model, int m, int k, int n, QMethod method) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (n <= k) throw std::invalid_argument("need n > k");
    return StationaryBound(model, m, k, method, ExecPolicy::serial).at(n);
}

std::vector<OptimizeResult> optimize_m_many(const AR1Model& model, int k, const std::vector<int>& ns,
                                            int m_max, QMethod method, ExecPolicy policy) {
    if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
    for (int n : ns)
        if (n <= k) throw std::invalid_argument("need n > k for every n");
    const int count = m_max + 1;
    std::vector<std::vector<BoundBreakdown>> all(count);
    auto eval = [&](int m) {
        const StationaryBound sb(model, m, k, method, ExecPolicy::serial);
        for (int n : ns) all[m].push_back(sb.at(n));
    };
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int m = count - 1; m >= 0; --m) eval(m);
    } else {
        for (int m = 0; m < count; ++m) eval(m);
    }

    std::vector<OptimizeResult> out(ns.size());
    for (std::size_t j = 0; j < ns.size(); ++j) {
        out[j].m_star = 0;
        out[j].breakdown = all[0][j];
        for (int m = 1; m < count; ++m)
            if (all[m][j].total < out[j].breakdown.total) {
                out[j].m_star = m;
                out[j].breakdown = all[m][j];
            }
        out[j].at_m_max = out[j].m_star == m_max;
    }
    return out;
}

OptimizeResult optimize_m(const AR1Model& model, int k, int n, int m_max, QMethod method) {
    return optimize_m_many(model, k, {n}, m_max, method).front();
}

std::vector<BoundBreakdown> bound_curve(const AR1Model& model, int k, int n, int m_lo, int m_hi,
                                        QMethod method) {
    if (m_lo < 0 || m_hi < m_lo) throw std::invalid_argument("invalid m range");
    if (n <= k) throw std::invalid_argument("need n > k");
    std::vector<BoundBreakdown> out(m_hi - m_lo + 1);
#pragma omp parallel for schedule(dynamic)
    for (int m = m_lo; m <= m_hi; ++m)
        out[m - m_lo] = StationaryBound(model, m, k, method, ExecPolicy::serial).at(n);
    return out;
}

double bound_nonstationary(const GeneralBoundInputs& in) {
    if (in.n <= in.k || in.k < 0) throw std::invalid_argument("need n > k >= 0");
    const std::size_t len = static_cast<std::size_t>(in.n - in.k);
    if (in.k_t.size() != len || in.mean_y.size() != len || in.q_t.size() != len)
        throw std::invalid_argument("per-t inputs must all have length n - k");
    if (!(in.sigma2 > 0.0) || !(in.sigma_tilde > 0.0))
        throw std::invalid_argument("sigma2 and sigma_tilde must be positive");
    const double n = in.n;
    const double rn = std::sqrt(n);
    double sk = 0.0, sm = 0.0, sq = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
        sk += in.k_t[t];
        sm += std::abs(n / static_cast<double>(len) * in.gamma - in.mean_y[t]);
        sq += in.q_t[t];
    }
    return sk / rn + sm / rn +
           std::sqrt(2.0 / (std::numbers::pi * in.sigma2)) * std::abs(in.sigma2 - in.sigma_tilde) +
           2.0 / (std::pow(n, 1.5) * std::pow(in.sigma_tilde, 1.5)) * sq;
}

std::vector<std::vector<int>> lambda_set(int p) {
    if (p < 1 || p > 8) throw std::invalid_argument("lambda_set: p must be in 1..8");
    // family j: zeros before position j, a one at j, anything after
    std::vector<std::vector<int>> out;
    for (int j = 0; j < p; ++j) {
        const int free = p - j - 1;
        for (int mask = (1 << free) - 1; mask >= 0; --mask) {
            std::vector<int> v(p, 0);
            v[j] = 1;
            for (int i = 0; i < free; ++i) v[j + 1 + i] = (mask >> (free - 1 - i)) & 1;
            out.push_back(std::move(v));
        }
    }
    return out;
}

double k_alpha_p(std::span<const double> d, std::span<const double> x, int p, double alpha) {
    if (static_cast<int>(d.size()) != p || static_cast<int>(x.size()) != p)
        throw std::invalid_argument("k_alpha_p: d and x must have length p");
    if (!(alpha >= 1.0)) throw std::invalid_argument("k_alpha_p: alpha must be >= 1");
    double total = 0.0;
    for (const auto& l : lambda_set(p)) {
        double prod = 1.0;
        for (int i = 0; i < p; ++i) prod *= l[i] ? d[i] : x[i];
        total += prod;
    }
    return total;
}

double f_tilde(double gamma_k, double x2a, double x2b, double x4a, double x4b, double d2a, double d2b,
               double d4a, double d4b) {
    const double s2 = x2a + x2b + std::min(d2a, d2b);
    return std::abs(gamma_k) * s2 + 0.5 * std::max(d2a, d2b) * s2 * s2 +
           (x4a + d4a) * (x4b + d4b) * (x4a + x4b + d4a + d4b);
}

double q_diff_bound(double k2_1, double k2_2, double k2_3, double x2a, double x2b, double x4a,
                    double x4b, double x6a, double x6b, int a_size, int b_size, double c3_sum) {
    const double c1 = 6.0 * std::pow(2.0 * x6a * x6b + k2_3, 2) + 2.0 * k2_3 * k2_3;
    const double c2 = 8.0 * (2.0 * x4a * x4b + k2_2) * (x2a * x2b + k2_1);
    const double c3 = 2.0 * std::abs(c3_sum);
    const double a = a_size, b = b_size;
    return k2_3 * (a * b + 0.5 * a * a) * c1 + k2_2 * a * b * c2 + k2_1 * b * c3;
}

double x_side_stein_term(double sum_q, double sum_q_diff, int n, double sigma, double sigma_tilde) {
    if (!(sigma > 0.0) || !(sigma_tilde > 0.0)) throw std::invalid_argument("variances must be positive");
    const double lead = 2.0 * std::pow(static_cast<double>(n), -1.5) * std::pow(sigma, -1.5);
    return (lead * sum_q + lead * sum_q_diff) * std::pow(sigma / sigma_tilde, 1.5);
}

double noncentered_correction(const AR1Model& model, int k, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const double a = std::abs(model.alpha);
    const double g0 = gamma(model, 0);
    const double s0 = cumulant(model.innovations, 2) * (1.0 + a) / ((1.0 - a * a) * (1.0 - a));
    const double s1 = 2.0 * g0 * a / ((1.0 - a) * (1.0 - a));
    const double nn = n;
    return s0 / std::sqrt(nn) + k / std::pow(nn, 1.5) * (s0 + s1 / nn);
}

}  // namespace wassbound
