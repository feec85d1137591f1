#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wassbound/innovations.hpp"
#include "wassbound/qbound.hpp"

namespace wassbound {

struct RunConfig {
    std::string dist = "t9";
    std::vector<double> alpha{0.0};
    std::vector<int> k{0};
    std::vector<int> n{25};
    std::string m = "auto";  // "auto", "<int>" or "<lo>..<hi>"
    int m_max = 30;
    QMethod q_method = QMethod::method2;
    long long R = 100000;
    int B = 10;
    std::uint64_t seed = 20240917;
    std::string output;       // empty means stdout
    std::optional<int> precision;  // unset: 3 in table mode, shortest round-trip otherwise
};

InnovationModel parse_dist(const std::string& s);

// Throws std::invalid_argument on a bad grid.
void validate(const RunConfig& cfg);

struct MRange {
    bool automatic = false;
    int lo = 0;
    int hi = 0;
};
MRange parse_m(const std::string& s);

// Half away from zero when precision is set, shortest round-trip otherwise.
std::string format_number(double x, std::optional<int> precision);

std::string cmd_bound(const RunConfig& cfg, std::ostream& warn);
std::string cmd_table(const RunConfig& cfg, const std::string& which);
std::string cmd_simulate(const RunConfig& cfg);

// Published experiment grid: k in {0,1,2}, alpha in {0,.1,.3,.5,.7}, ten values of n.
void apply_replication_grid(RunConfig& cfg);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wassbound
