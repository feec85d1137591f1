#pragma once

#include <cstdint>
#include <vector>

#include "wassbound/ar1.hpp"
#include "wassbound/partitions.hpp"

namespace wassbound {

enum class QMethod { method1, method2 };
enum class ExecPolicy { serial, parallel };

struct Interval {
    int lo = 1;
    int hi = 0;
    int size() const { return hi - lo + 1; }
};

struct QTermContext {
    MDepApprox approx;
    int k = 0;
    int n = 1;
    int t = 1;

    QTermContext(const MDepApprox& a, int k_, int n_, int t_);
    Interval a_set() const;  // {l in 1..n-k : |l - t| <= m + k}
    Interval b_set() const;  // {l in 1..n-k : |l - t| <= 2(m + k)}
};

struct MTerms {
    double m1 = 0.0;
    double m2a = 0.0;
    double m2b = 0.0;
    double m3 = 0.0;
};

// Indecomposable partitions of the 4x2 table with even blocks, flattened.
struct CompiledPartitions {
    struct Block {
        std::uint8_t size = 0;
        std::uint8_t cells[8] = {};
    };
    std::vector<std::uint32_t> offsets;  // partition i owns blocks[offsets[i] .. offsets[i+1])
    std::vector<Block> blocks;

    std::size_t count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

// Drops partitions containing a block whose innovation cumulant is zero.
CompiledPartitions compile_partitions(const std::vector<Partition>& parts,
                                      const InnovationModel& eps);

double d_tilde(const MDepApprox& approx, int k, int u1, int u2);
double d_tilde(const CumYEvaluator& cy, const CompiledPartitions& parts, int k, int u1, int u2);

// (2h+1)^2 row-major table of D(u1, u2), |u_i| <= h.
std::vector<double> d_tilde_table(const CumYEvaluator& cy, const CompiledPartitions& parts, int k,
                                  int h, ExecPolicy policy);

// C and D tables for one (model, m, k); shared read-only across n and t.
class QTables {
public:
    QTables(const MDepApprox& approx, int k, ExecPolicy policy = ExecPolicy::parallel);

    int h() const { return h_; }
    int k() const { return k_; }
    const MDepApprox& approx() const { return approx_; }
    double c(int u) const;
    double d(int u1, int u2) const;
    double var_sum(int size) const;  // size * sum_{|u|<size} (1 - |u|/size) C(u)

    MTerms m_terms(int n, int t) const;
    double sum_q_method2(int n) const;

private:
    MDepApprox approx_;
    int k_;
    int h_;
    std::vector<double> c_;  // index u + 4h
    std::vector<double> d_;  // (u1 + h) * (2h+1) + (u2 + h)
    std::vector<double> var_sum_;
};

MTerms m_terms(const QTermContext& ctx);
double q_bound_method2(const MTerms& mt, double c0);
double q_bound_method2(const QTermContext& ctx);
double q_bound_method1(int m, int k, double y6);

}  // namespace wassbound
