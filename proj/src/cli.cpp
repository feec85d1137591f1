#include "wassbound/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wassbound/bound.hpp"
#include "wassbound/parallel.hpp"
#include "wassbound/wasserstein.hpp"

namespace wassbound {

InnovationModel parse_dist(const std::string& s) {
    if (s == "normal") return InnovationModel::normal();
    if (s == "t9") return InnovationModel::student_t(9.0);
    if (s == "t14") return InnovationModel::student_t(14.0);
    if (s.rfind("t:", 0) == 0) {
        double nu = 0.0;
        const char* b = s.data() + 2;
        const char* e = s.data() + s.size();
        auto [p, ec] = std::from_chars(b, e, nu);
        if (ec != std::errc() || p != e) throw std::invalid_argument("bad degrees of freedom in '" + s + "'");
        return InnovationModel::student_t(nu);
    }
    throw std::invalid_argument("unknown dist '" + s + "' (use normal, t9, t14 or t:<nu>)");
}

MRange parse_m(const std::string& s) {
    if (s == "auto") return {true, 0, 0};
    auto to_int = [&](std::string_view v) {
        int x = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || p != v.data() + v.size() || x < 0)
            throw std::invalid_argument("bad m '" + s + "'");
        return x;
    };
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(s);
        return {false, v, v};
    }
    const int lo = to_int(std::string_view(s).substr(0, dots));
    const int hi = to_int(std::string_view(s).substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty m range '" + s + "'");
    return {false, lo, hi};
}

void validate(const RunConfig& cfg) {
    parse_dist(cfg.dist);
    if (cfg.alpha.empty() || cfg.k.empty() || cfg.n.empty()) throw std::invalid_argument("empty grid");
    int kmax = 0;
    for (double a : cfg.alpha)
        if (!(std::abs(a) < 1.0)) throw std::invalid_argument("alpha must lie in (-1, 1)");
    for (int k : cfg.k) {
        if (k < 0) throw std::invalid_argument("k must be >= 0");
        kmax = std::max(kmax, k);
    }
    for (int n : cfg.n)
        if (n <= kmax) throw std::invalid_argument("every n must exceed max(k)");
    if (cfg.m_max < 0) throw std::invalid_argument("m-max must be >= 0");
    if (cfg.R < 2) throw std::invalid_argument("R must be >= 2");
    if (cfg.B < 1) throw std::invalid_argument("B must be >= 1");
    if (cfg.precision && (*cfg.precision < 0 || *cfg.precision > 17))
        throw std::invalid_argument("precision must be in 0..17");
    parse_m(cfg.m);
}

std::string format_number(double x, std::optional<int> precision) {
    char buf[64];
    std::to_chars_result res;
    if (precision) {
        const double scale = std::pow(10.0, *precision);
        double r = std::round(x * scale) / scale;
        if (r == 0.0) r = 0.0;  // no "-0.000"
        res = std::to_chars(buf, buf + sizeof buf, r, std::chars_format::fixed, *precision);
    } else {
        res = std::to_chars(buf, buf + sizeof buf, x);
    }
    return std::string(buf, res.ptr);
}

void apply_replication_grid(RunConfig& cfg) {
    cfg.k = {0, 1, 2};
    cfg.alpha = {0.0, 0.1, 0.3, 0.5, 0.7};
    cfg.n = {25, 50, 75, 100, 150, 200, 250, 500, 1000, 2000};
}

namespace {

std::string alpha_str(double a) { return format_number(a, std::nullopt); }

void breakdown_row(std::ostringstream& os, const RunConfig& cfg, const BoundBreakdown& b, bool is_min) {
    const auto f = [&](double x) { return format_number(x, cfg.precision); };
    os << cfg.dist << ',' << alpha_str(b.model.alpha) << ',' << b.k << ',' << b.n << ',' << b.m << ','
       << f(b.term1) << ',' << f(b.term2) << ',' << f(b.term3) << ',' << f(b.term4) << ',' << f(b.total)
       << ',' << f(b.sigma) << ',' << f(b.sigma_tilde) << ',' << f(b.k_tilde) << ',' << f(b.sum_q) << ','
       << (is_min ? 1 : 0) << '\n';
}

}  // namespace

std::string cmd_bound(const RunConfig& cfg, std::ostream& warn) {
    validate(cfg);
    const auto eps = parse_dist(cfg.dist);
    const auto mr = parse_m(cfg.m);
    std::ostringstream os;
    os << "dist,alpha,k,n,m,term1,term2,term3,term4,total,sigma,sigma_tilde,k_tilde,sum_q,is_min\n";
    for (int k : cfg.k)
        for (double a : cfg.alpha)
            for (int n : cfg.n) {
                const AR1Model model(a, eps);
                if (mr.automatic) {
                    const auto opt = optimize_m(model, k, n, cfg.m_max, cfg.q_method);
                    if (opt.at_m_max)
                        warn << "warning: m* equals m-max (" << cfg.m_max << ") at alpha=" << alpha_str(a)
                             << " k=" << k << " n=" << n << '\n';
                    breakdown_row(os, cfg, opt.breakdown, true);
                } else {
                    const auto curve = bound_curve(model, k, n, mr.lo, mr.hi, cfg.q_method);
                    std::size_t best = 0;
                    for (std::size_t i = 1; i < curve.size(); ++i)
                        if (curve[i].total < curve[best].total) best = i;
                    for (std::size_t i = 0; i < curve.size(); ++i) breakdown_row(os, cfg, curve[i], i == best);
                }
            }
    return os.str();
}

std::string cmd_table(const RunConfig& cfg, const std::string& which) {
    validate(cfg);
    if (which != "bound" && which != "w1") throw std::invalid_argument("table kind must be bound or w1");
    const auto eps = parse_dist(cfg.dist);
    const std::optional<int> prec = cfg.precision ? cfg.precision : std::optional<int>(3);
    std::ostringstream os;
    os << "k,alpha";
    for (int n : cfg.n) os << ',' << n;
    os << '\n';
    for (int k : cfg.k)
        for (double a : cfg.alpha) {
            const AR1Model model(a, eps);
            os << k << ',' << alpha_str(a);
            if (which == "bound") {
                for (const auto& r : optimize_m_many(model, k, cfg.n, cfg.m_max, cfg.q_method))
                    os << ',' << format_number(r.breakdown.total, prec);
            } else {
                for (int n : cfg.n)
                    os << ',' << format_number(estimate_w1(model, k, n, cfg.R, cfg.B, cfg.seed).mean, prec);
            }
            os << '\n';
        }
    return os.str();
}

std::string cmd_simulate(const RunConfig& cfg) {
    validate(cfg);
    const auto eps = parse_dist(cfg.dist);
    std::ostringstream os;
    os << "k,alpha,n,R,B,seed,mean,sd\n";
    for (int k : cfg.k)
        for (double a : cfg.alpha)
            for (int n : cfg.n) {
                const auto est = estimate_w1(AR1Model(a, eps), k, n, cfg.R, cfg.B, cfg.seed);
                os << k << ',' << alpha_str(a) << ',' << n << ',' << cfg.R << ',' << cfg.B << ',' << cfg.seed
                   << ',' << format_number(est.mean, cfg.precision) << ','
                   << format_number(est.sd, cfg.precision) << '\n';
            }
    return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    configure_threads_from_env();

    CLI::App app{"Wasserstein-1 bounds and Monte Carlo distances for AR(1) autocovariances"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string q_method = "method2";
    std::string which = "bound";
    std::string scale = "desk";
    int precision = -1;
    bool replication = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--dist", cfg.dist, "normal, t9, t14 or t:<nu>");
        sub->add_option("--alpha", cfg.alpha, "autoregressive parameter(s)")->delimiter(',');
        sub->add_option("--k", cfg.k, "lag(s)")->delimiter(',');
        sub->add_option("--n", cfg.n, "segment length(s)")->delimiter(',');
        sub->add_option("--precision", precision, "decimals (default: 3 for tables, shortest otherwise)");
        sub->add_option("--output", cfg.output, "CSV destination (default stdout)");
    };
    auto mc = [&](CLI::App* sub) {
        sub->add_option("--R", cfg.R, "samples per replicate");
        sub->add_option("--B", cfg.B, "replicates");
        sub->add_option("--seed", cfg.seed, "base seed");
        sub->add_option("--scale", scale, "desk (R=1e5, B=10) or full (R=4e6, B=50)")
            ->check(CLI::IsMember({"desk", "full"}));
    };
    auto bounds = [&](CLI::App* sub) {
        sub->add_option("--m-max", cfg.m_max, "largest m searched (default 30)");
        sub->add_option("--q-method", q_method, "method1 or method2")
            ->check(CLI::IsMember({"method1", "method2"}));
    };

    auto* b = app.add_subcommand("bound", "bound for each grid cell, or a curve over m");
    common(b);
    bounds(b);
    b->add_option("--m", cfg.m, "auto, an integer, or lo..hi");

    auto* t = app.add_subcommand("table", "grid of bound totals or W1 means");
    common(t);
    bounds(t);
    mc(t);
    t->add_option("--which", which, "bound or w1")->check(CLI::IsMember({"bound", "w1"}));
    t->add_flag("--replication", replication, "use the published k/alpha/n grid");

    auto* s = app.add_subcommand("simulate", "Monte Carlo W1 estimates");
    common(s);
    mc(s);
    s->add_flag("--replication", replication, "use the published k/alpha/n grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (precision >= 0) cfg.precision = precision;
        cfg.q_method = q_method == "method1" ? QMethod::method1 : QMethod::method2;
        auto* active = app.get_subcommands().front();
        if (scale == "full") {
            if (active->count("--R") == 0) cfg.R = 4000000;
            if (active->count("--B") == 0) cfg.B = 50;
        }
        if (replication) apply_replication_grid(cfg);

        std::string csv;
        if (active == b)
            csv = cmd_bound(cfg, err);
        else if (active == t)
            csv = cmd_table(cfg, which);
        else
            csv = cmd_simulate(cfg);

        if (cfg.output.empty()) {
            out << csv;
        } else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + cfg.output);
            f << csv;
            if (!f) throw std::runtime_error("write failed for " + cfg.output);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace wassbound
