#include "wassbound/ar1.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "wassbound/partitions.hpp"

namespace wassbound {

AR1Model::AR1Model(double a, const InnovationModel& eps) : alpha(a), innovations(eps) {
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("AR(1) needs |alpha| < 1");
}

MDepApprox::MDepApprox(const AR1Model& mod, int m_) : model(mod), m(m_) {
    if (m_ < 0) throw std::invalid_argument("truncation level m must be >= 0");
}

double ipow(double x, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

namespace {

void check_order(std::size_t p) {
    if (p < 2 || p > 8) throw std::invalid_argument("cumulant needs between 2 and 8 time points");
}

struct Shape {
    int p, spread, s;
};

Shape shape_of(std::span<const int> times) {
    const auto [lo, hi] = std::minmax_element(times.begin(), times.end());
    int s = 0;
    for (int t : times) s += t - *lo;
    return {static_cast<int>(times.size()), *hi - *lo, s};
}

double block_sum(const std::vector<Partition>& parts, auto&& factor) {
    double total = 0.0;
    for (const auto& part : parts) {
        double prod = 1.0;
        for (const auto& b : part.blocks) prod *= factor(static_cast<int>(b.size()));
        total += prod;
    }
    return total;
}

}  // namespace

double gamma(const AR1Model& model, int k) {
    const double a = model.alpha;
    return ipow(a, std::abs(k)) * cumulant(model.innovations, 2) / (1.0 - a * a);
}

double lag_product_moment(const AR1Model& model, int k, int q) {
    if (q < 1 || q > 4) throw std::invalid_argument("lag_product_moment: q must be in 1..4");
    std::vector<int> times(2 * q);
    for (int i = 0; i < q; ++i) {
        times[2 * i] = k;
        times[2 * i + 1] = 0;
    }
    const auto& parts = even_partitions_of(2 * q);
    double total = 0.0;
    std::vector<int> bt;
    for (const auto& part : parts) {
        double prod = 1.0;
        for (const auto& b : part.blocks) {
            bt.clear();
            for (int c : b) bt.push_back(times[c]);
            prod *= cum_X(model, bt);
            if (prod == 0.0) break;
        }
        total += prod;
    }
    return total;
}

double mdep_error(const MDepApprox& approx, int q) {
    if (q < 2 || q > 8 || q % 2 != 0) throw std::invalid_argument("mdep_error: q must be 2, 4, 6 or 8");
    const double a = approx.model.alpha;
    const auto& eps = approx.model.innovations;
    const double lead = ipow(std::abs(a), approx.m + 1);
    if (lead == 0.0) return 0.0;
    auto g = [&](int p) { return cumulant(eps, p) / (1.0 - ipow(a, p)); };
    double inner;
    switch (q) {
        case 2: inner = g(2); break;
        case 4: inner = g(4) + 3.0 * g(2) * g(2); break;
        case 8:
            inner = g(8) + 28.0 * g(6) * g(2) + 35.0 * g(4) * g(4) + 210.0 * g(4) * g(2) * g(2) +
                    105.0 * ipow(g(2), 4);
            break;
        default: inner = block_sum(even_partitions_of(q), g); break;
    }
    return lead * std::pow(inner, 1.0 / q);
}

double cum_Y(const MDepApprox& approx, std::span<const int> times) {
    check_order(times.size());
    const auto sh = shape_of(times);
    if (sh.spread > approx.m) return 0.0;
    const double a = approx.model.alpha;
    const double kp = cumulant(approx.model.innovations, sh.p);
    if (kp == 0.0) return 0.0;
    return kp * ipow(a, sh.s) * (1.0 - ipow(a, sh.p * (approx.m - sh.spread + 1))) /
           (1.0 - ipow(a, sh.p));
}

double cum_X(const AR1Model& model, std::span<const int> times) {
    check_order(times.size());
    const auto sh = shape_of(times);
    const double kp = cumulant(model.innovations, sh.p);
    if (kp == 0.0) return 0.0;
    return kp * ipow(model.alpha, sh.s) / (1.0 - ipow(model.alpha, sh.p));
}

double moment_Y(const MDepApprox& approx, int q) {
    if (q < 2 || q > 8 || q % 2 != 0) throw std::invalid_argument("moment_Y: q must be 2, 4, 6 or 8");
    const double a = approx.model.alpha;
    auto g = [&](int p) {
        return cumulant(approx.model.innovations, p) * (1.0 - ipow(a, p * (approx.m + 1))) /
               (1.0 - ipow(a, p));
    };
    return block_sum(even_partitions_of(q), g);
}

CumYEvaluator::CumYEvaluator(const MDepApprox& approx) : m_(approx.m) {
    const double a = approx.model.alpha;
    for (int p = 1; p <= 8; ++p) kappa_[p] = cumulant(approx.model.innovations, p);
    apow_.resize(7 * m_ + 1);
    for (std::size_t s = 0; s < apow_.size(); ++s) apow_[s] = ipow(a, static_cast<int>(s));
    for (int p = 2; p <= 8; ++p) {
        geo_[p].resize(m_ + 1);
        for (int r = 0; r <= m_; ++r)
            geo_[p][r] = (1.0 - ipow(a, p * (m_ - r + 1))) / (1.0 - ipow(a, p));
    }
}

double CumYEvaluator::operator()(std::span<const int> times) const {
    check_order(times.size());
    const auto sh = shape_of(times);
    return by_shape(sh.p, sh.spread, sh.s);
}

}  // namespace wassbound
