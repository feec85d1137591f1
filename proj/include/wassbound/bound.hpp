#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wassbound/ar1.hpp"
#include "wassbound/qbound.hpp"

namespace wassbound {

struct BoundBreakdown {
    double term1 = 0.0;  // bias
    double term2 = 0.0;  // variance mismatch
    double term3 = 0.0;  // m-dependent approximation
    double term4 = 0.0;  // Stein term
    double total = 0.0;
    AR1Model model;
    int m = 0;
    int k = 0;
    int n = 0;
    QMethod q_method = QMethod::method2;
    double gamma_k = 0.0;
    double sigma = 0.0;
    double sigma_tilde = 0.0;
    double k_tilde = 0.0;
    double sum_q = 0.0;
};

// Everything that depends on (model, m, k) but not on n.
class StationaryBound {
public:
    StationaryBound(const AR1Model& model, int m, int k, QMethod method = QMethod::method2,
                    ExecPolicy policy = ExecPolicy::parallel);
    BoundBreakdown at(int n) const;

private:
    MDepApprox approx_;
    int k_;
    QMethod method_;
    double gamma_k_, sigma_, k_tilde_, q1_ = 0.0;
    std::vector<double> c_;  // C(u), 0 <= u <= m
    std::optional<QTables> tables_;
};

BoundBreakdown bound_stationary(const AR1Model& model, int m, int k, int n,
                                QMethod method = QMethod::method2);

struct OptimizeResult {
    int m_star = 0;
    BoundBreakdown breakdown;
    bool at_m_max = false;
};

OptimizeResult optimize_m(const AR1Model& model, int k, int n, int m_max = 30,
                          QMethod method = QMethod::method2);

// One result per entry of ns; the (C, D) tables for each m are built once and reused.
std::vector<OptimizeResult> optimize_m_many(const AR1Model& model, int k, const std::vector<int>& ns,
                                            int m_max = 30, QMethod method = QMethod::method2,
                                            ExecPolicy policy = ExecPolicy::parallel);

std::vector<BoundBreakdown> bound_curve(const AR1Model& model, int k, int n, int m_lo, int m_hi,
                                        QMethod method = QMethod::method2);

struct GeneralBoundInputs {
    int n = 0;
    int k = 0;
    double gamma = 0.0;
    double sigma2 = 1.0;
    double sigma_tilde = 1.0;
    std::vector<double> k_t;
    std::vector<double> mean_y;
    std::vector<double> q_t;
};

double bound_nonstationary(const GeneralBoundInputs& in);

std::vector<std::vector<int>> lambda_set(int p);

double k_alpha_p(std::span<const double> d, std::span<const double> x, int p, double alpha = 1.0);

double f_tilde(double gamma_k, double x2a, double x2b, double x4a, double x4b, double d2a, double d2b,
               double d4a, double d4b);

double q_diff_bound(double k2_1, double k2_2, double k2_3, double x2a, double x2b, double x4a,
                    double x4b, double x6a, double x6b, int a_size, int b_size, double c3_sum);

// Stein term in X-side quantities, rescaled by (sigma / sigma_tilde)^{3/2}.
double x_side_stein_term(double sum_q, double sum_q_diff, int n, double sigma, double sigma_tilde);

double noncentered_correction(const AR1Model& model, int k, int n);

}  // namespace wassbound
