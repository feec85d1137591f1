#include "wassbound/innovations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wassbound {

InnovationModel InnovationModel::normal() { return {}; }

InnovationModel InnovationModel::student_t(double nu) {
    if (!(nu > 8.0)) throw std::invalid_argument("student t innovations need nu > 8");
    return {InnovationKind::scaled_student_t, nu};
}

std::string InnovationModel::name() const {
    if (kind == InnovationKind::standard_normal) return "normal";
    double ip;
    if (std::modf(nu, &ip) == 0.0) return "t" + std::to_string(static_cast<long long>(ip));
    return "t:" + std::to_string(nu);
}

double cumulant(const InnovationModel& model, int p) {
    if (p < 1 || p > 8) throw std::invalid_argument("cumulant order must be in 1..8");
    if (p == 2) return 1.0;
    if (model.kind == InnovationKind::standard_normal || p % 2 == 1) return 0.0;
    const double v = model.nu;
    switch (p) {
        case 4: return 6.0 / (v - 4.0);
        case 6: return 240.0 / ((v - 4.0) * (v - 6.0));
        default: return 5040.0 * (5.0 * v - 22.0) / ((v - 4.0) * (v - 4.0) * (v - 6.0) * (v - 8.0));
    }
}

double raw_moment(const InnovationModel& model, int p) {
    if (p < 0 || p > 8) throw std::invalid_argument("raw_moment order must be in 0..8");
    if (p % 2 == 1) return 0.0;
    const int r = p / 2;
    double out = 1.0;
    for (int i = 1; i <= r; ++i) {
        out *= (2.0 * i - 1.0);
        if (model.kind == InnovationKind::scaled_student_t)
            out *= (model.nu - 2.0) / (model.nu - 2.0 * i);
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(const RngHandle& h) : engine_(splitmix64(splitmix64(h.seed) ^ splitmix64(~h.stream))) {}

double Rng::uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
}

double Rng::gamma(double shape) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

InnovationSampler::InnovationSampler(const InnovationModel& model, const RngHandle& h)
    : model_(model), rng_(h) {
    if (model_.kind == InnovationKind::scaled_student_t)
        t_scale_ = std::sqrt((model_.nu - 2.0) / model_.nu);
}

double InnovationSampler::operator()() {
    const double z = rng_.normal();
    if (model_.kind == InnovationKind::standard_normal) return z;
    const double v = 2.0 * rng_.gamma(0.5 * model_.nu);  // chi-square(nu)
    return z / std::sqrt(v / model_.nu) * t_scale_;
}

std::vector<double> sample(const InnovationModel& model, const RngHandle& rng, std::size_t count) {
    InnovationSampler s(model, rng);
    std::vector<double> out(count);
    for (auto& x : out) x = s();
    return out;
}

}  // namespace wassbound
