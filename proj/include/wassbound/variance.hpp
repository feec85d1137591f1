#pragma once

#include "wassbound/ar1.hpp"

namespace wassbound {

struct VariancePair {
    double sigma = 0.0;
    double sigma_tilde = 0.0;
    int k = 0;
    int n = 0;
    int m = 0;
};

double sigma_asymptotic(const AR1Model& model, int k);

// cum(Z(0), Z(u)) with Z(t) = Y(t+k) Y(t).
double c_tilde(const MDepApprox& approx, int k, int u);
double c_tilde(const CumYEvaluator& cy, int k, int u);

double sigma_tilde(const MDepApprox& approx, int k, int n);

VariancePair variances(const MDepApprox& approx, int k, int n);

}  // namespace wassbound
