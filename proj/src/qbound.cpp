#include "wassbound/qbound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wassbound/variance.hpp"

namespace wassbound {

QTermContext::QTermContext(const MDepApprox& a, int k_, int n_, int t_) : approx(a), k(k_), n(n_), t(t_) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (n <= k) throw std::invalid_argument("need n > k");
    if (t < 1 || t > n - k) throw std::invalid_argument("t must be in 1..n-k");
}

Interval QTermContext::a_set() const {
    const int h = approx.m + k;
    return {std::max(1, t - h), std::min(n - k, t + h)};
}

Interval QTermContext::b_set() const {
    const int h = 2 * (approx.m + k);
    return {std::max(1, t - h), std::min(n - k, t + h)};
}

CompiledPartitions compile_partitions(const std::vector<Partition>& parts, const InnovationModel& eps) {
    CompiledPartitions out;
    out.offsets.push_back(0);
    for (const auto& p : parts) {
        bool live = true;
        for (const auto& b : p.blocks)
            if (cumulant(eps, static_cast<int>(b.size())) == 0.0) live = false;
        if (!live) continue;
        for (const auto& b : p.blocks) {
            CompiledPartitions::Block cb;
            cb.size = static_cast<std::uint8_t>(b.size());
            for (std::size_t i = 0; i < b.size(); ++i) cb.cells[i] = static_cast<std::uint8_t>(b[i]);
            out.blocks.push_back(cb);
        }
        out.offsets.push_back(static_cast<std::uint32_t>(out.blocks.size()));
    }
    return out;
}

namespace {

const std::vector<Partition>& table_partitions() {
    PartitionFilter f;
    f.min_block_size = 2;
    f.even_blocks_only = true;
    return cached_partitions(IndexedTable(4, 2), f);
}

}  // namespace

double d_tilde(const CumYEvaluator& cy, const CompiledPartitions& parts, int k, int u1, int u2) {
    const int times[8] = {k, 0, k, 0, u1 + k, u1, u2 + k, u2};
    const int m = cy.m();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < parts.offsets.size(); ++i) {
        double prod = 1.0;
        for (std::uint32_t j = parts.offsets[i]; j < parts.offsets[i + 1]; ++j) {
            const auto& b = parts.blocks[j];
            int lo = times[b.cells[0]], hi = lo, sum = lo;
            for (int c = 1; c < b.size; ++c) {
                const int tt = times[b.cells[c]];
                lo = std::min(lo, tt);
                hi = std::max(hi, tt);
                sum += tt;
            }
            if (hi - lo > m) {
                prod = 0.0;
                break;
            }
            prod *= cy.by_shape(b.size, hi - lo, sum - b.size * lo);
        }
        total += prod;
    }
    return total;
}

double d_tilde(const MDepApprox& approx, int k, int u1, int u2) {
    const CumYEvaluator cy(approx);
    const auto parts = compile_partitions(table_partitions(), approx.model.innovations);
    return d_tilde(cy, parts, k, u1, u2);
}

std::vector<double> d_tilde_table(const CumYEvaluator& cy, const CompiledPartitions& parts, int k,
                                  int h, ExecPolicy policy) {
    const int w = 2 * h + 1;
    std::vector<double> out(static_cast<std::size_t>(w) * w, 0.0);
    auto row = [&](int i) {
        for (int j = i; j < w; ++j) {
            const double v = d_tilde(cy, parts, k, i - h, j - h);
            out[static_cast<std::size_t>(i) * w + j] = v;
            out[static_cast<std::size_t>(j) * w + i] = v;
        }
    };
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < w; ++i) row(i);
    } else {
        for (int i = 0; i < w; ++i) row(i);
    }
    return out;
}

QTables::QTables(const MDepApprox& approx, int k, ExecPolicy policy)
    : approx_(approx), k_(k), h_(approx.m + k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const CumYEvaluator cy(approx);
    c_.resize(8 * h_ + 1);
    for (int u = -4 * h_; u <= 4 * h_; ++u) c_[u + 4 * h_] = c_tilde(cy, k, u);
    const auto parts = compile_partitions(table_partitions(), approx.model.innovations);
    d_ = d_tilde_table(cy, parts, k, h_, policy);
    var_sum_.assign(4 * h_ + 2, 0.0);
    for (int s = 1; s <= 4 * h_ + 1; ++s) {
        double acc = c(0);
        for (int u = 1; u < s; ++u) acc += 2.0 * (1.0 - static_cast<double>(u) / s) * c(u);
        var_sum_[s] = s * acc;
    }
}

double QTables::c(int u) const {
    if (std::abs(u) > 4 * h_) return c_tilde(approx_, k_, u);
    return c_[u + 4 * h_];
}

double QTables::d(int u1, int u2) const {
    if (std::abs(u1) > h_ || std::abs(u2) > h_) return d_tilde(approx_, k_, u1, u2);
    const int w = 2 * h_ + 1;
    return d_[static_cast<std::size_t>(u1 + h_) * w + (u2 + h_)];
}

double QTables::var_sum(int size) const {
    if (size < 1) throw std::invalid_argument("var_sum: size must be >= 1");
    if (size < static_cast<int>(var_sum_.size())) return var_sum_[size];
    double acc = c(0);
    for (int u = 1; u < size; ++u) acc += 2.0 * (1.0 - static_cast<double>(u) / size) * c(u);
    return size * acc;
}

MTerms QTables::m_terms(int n, int t) const {
    const QTermContext ctx(approx_, k_, n, t);
    const Interval a = ctx.a_set();
    const Interval b = ctx.b_set();
    MTerms mt;
    for (int l1 = a.lo - t; l1 <= a.hi - t; ++l1)
        for (int l2 = a.lo - t; l2 <= a.hi - t; ++l2) mt.m1 += d(l1, l2);
    mt.m2a = var_sum(a.size());
    mt.m2b = var_sum(b.size());
    for (int u = a.lo; u <= a.hi; ++u) mt.m3 += c(u - t);
    return mt;
}

double QTables::sum_q_method2(int n) const {
    std::map<std::tuple<int, int, int>, double> seen;
    const double c0 = c(0);
    double total = 0.0;
    for (int t = 1; t <= n - k_; ++t) {
        const int h = h_;
        const int a0 = std::max(1, t - h) - t, a1 = std::min(n - k_, t + h) - t;
        const int bs = std::min(n - k_, t + 2 * h) - std::max(1, t - 2 * h) + 1;
        const auto key = std::make_tuple(a0, a1, bs);
        auto it = seen.find(key);
        if (it == seen.end()) it = seen.emplace(key, q_bound_method2(m_terms(n, t), c0)).first;
        total += it->second;
    }
    return total;
}

MTerms m_terms(const QTermContext& ctx) {
    return QTables(ctx.approx, ctx.k, ExecPolicy::serial).m_terms(ctx.n, ctx.t);
}

namespace {

double checked_sqrt(double x) {
    if (x < -1e-12) throw std::logic_error("negative variance radicand in Q bound");
    return std::sqrt(std::max(x, 0.0));
}

}  // namespace

double q_bound_method2(const MTerms& mt, double c0) {
    const double base = mt.m1 + c0 * mt.m2a;
    return checked_sqrt(base + mt.m3 * mt.m3) * checked_sqrt(mt.m2b) +
           0.5 * checked_sqrt(base + 2.0 * mt.m3 * mt.m3) * checked_sqrt(mt.m2a);
}

double q_bound_method2(const QTermContext& ctx) {
    const QTables tab(ctx.approx, ctx.k, ExecPolicy::serial);
    return q_bound_method2(tab.m_terms(ctx.n, ctx.t), tab.c(0));
}

double q_bound_method1(int m, int k, double y6) {
    const double w = 4.0 * m + 4.0 * k + 1.0;
    return 2.5 * w * w * y6;
}

}  // namespace wassbound
