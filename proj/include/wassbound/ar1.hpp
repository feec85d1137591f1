#pragma once

#include <span>
#include <vector>

#include "wassbound/innovations.hpp"

namespace wassbound {

struct AR1Model {
    double alpha = 0.0;
    InnovationModel innovations;

    AR1Model() = default;
    AR1Model(double a, const InnovationModel& eps);
};

// Y(t) = sum_{j=0}^{m} alpha^j eps(t-j)
struct MDepApprox {
    AR1Model model;
    int m = 0;

    MDepApprox() = default;
    MDepApprox(const AR1Model& mod, int m_);
};

// x^e for e >= 0 with 0^0 = 1.
double ipow(double x, int e);

double gamma(const AR1Model& model, int k);
double lag_product_moment(const AR1Model& model, int k, int q);
double mdep_error(const MDepApprox& approx, int q);
double cum_Y(const MDepApprox& approx, std::span<const int> times);
double cum_X(const AR1Model& model, std::span<const int> times);
double moment_Y(const MDepApprox& approx, int q);

// Table-driven cum_Y for hot loops: value depends only on (p, R, S).
class CumYEvaluator {
public:
    explicit CumYEvaluator(const MDepApprox& approx);

    double by_shape(int p, int spread, int s) const {
        if (spread > m_) return 0.0;
        return kappa_[p] * apow_[s] * geo_[p][spread];
    }
    double operator()(std::span<const int> times) const;
    int m() const { return m_; }

private:
    int m_;
    double kappa_[9] = {};
    std::vector<double> apow_;
    std::vector<double> geo_[9];
};

}  // namespace wassbound
