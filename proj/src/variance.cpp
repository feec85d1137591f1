#include "wassbound/variance.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace wassbound {

double sigma_asymptotic(const AR1Model& model, int k) {
    if (k < 0) throw std::invalid_argument("sigma_asymptotic: k must be >= 0");
    const double a2 = model.alpha * model.alpha;
    const double k2 = cumulant(model.innovations, 2);
    const double k4 = cumulant(model.innovations, 4);
    const double a2k = ipow(a2, k);
    const double d = 1.0 - a2;
    return k2 * k2 * (1.0 + a2 + a2k * (1.0 + a2 + 2.0 * k * d)) / (d * d * d) + k4 * a2k / (d * d);
}

double c_tilde(const CumYEvaluator& cy, int k, int u) {
    const std::array<int, 4> four{k, 0, u + k, u};
    const std::array<int, 2> g_u{u, 0};
    const std::array<int, 2> g_minus{k - u, 0};
    const std::array<int, 2> g_plus{k + u, 0};
    const double gu = cy(g_u);
    return cy(four) + gu * gu + cy(g_minus) * cy(g_plus);
}

double c_tilde(const MDepApprox& approx, int k, int u) {
    return c_tilde(CumYEvaluator(approx), k, u);
}

double sigma_tilde(const MDepApprox& approx, int k, int n) {
    if (k < 0) throw std::invalid_argument("sigma_tilde: k must be >= 0");
    if (n <= k) throw std::invalid_argument("sigma_tilde: need n > k");
    const CumYEvaluator cy(approx);
    const int len = n - k;
    const int lim = std::min(len - 1, approx.m);
    double s = c_tilde(cy, k, 0);
    for (int u = 1; u <= lim; ++u)
        s += 2.0 * (1.0 - static_cast<double>(u) / len) * c_tilde(cy, k, u);
    return static_cast<double>(len) / n * s;
}

VariancePair variances(const MDepApprox& approx, int k, int n) {
    return {sigma_asymptotic(approx.model, k), sigma_tilde(approx, k, n), k, n, approx.m};
}

}  // namespace wassbound
