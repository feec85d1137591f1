#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wassbound {

enum class InnovationKind { standard_normal, scaled_student_t };

struct InnovationModel {
    InnovationKind kind = InnovationKind::standard_normal;
    double nu = 0.0;  // only meaningful for scaled_student_t

    static InnovationModel normal();
    static InnovationModel student_t(double nu);  // requires nu > 8

    std::string name() const;
};

// kappa_1..kappa_8 of the innovation law.
double cumulant(const InnovationModel& model, int p);

// E eps^p, p in 0..8.
double raw_moment(const InnovationModel& model, int p);

struct RngHandle {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// mt19937_64 seeded from a mix of (seed, stream); uniforms and normals are produced
// by explicit transforms so draws do not depend on the standard library vendor.
class Rng {
public:
    explicit Rng(const RngHandle& h);

    std::uint64_t next_u64() { return engine_(); }
    double uniform();       // (0, 1), never 0 or 1
    double normal();        // Box-Muller, cached pair
    double gamma(double shape);  // Marsaglia-Tsang, shape >= 1

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

class InnovationSampler {
public:
    InnovationSampler(const InnovationModel& model, const RngHandle& h);
    double operator()();

private:
    InnovationModel model_;
    Rng rng_;
    double t_scale_ = 1.0;
};

std::vector<double> sample(const InnovationModel& model, const RngHandle& rng, std::size_t count);

}  // namespace wassbound
