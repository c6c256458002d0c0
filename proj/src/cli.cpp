#include "rlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rlab/algebra.hpp"
#include "rlab/discalg.hpp"
#include "rlab/duality.hpp"
#include "rlab/reparam.hpp"
#include "rlab/rochberg.hpp"
#include "rlab/sampling.hpp"
#include "rlab/type2.hpp"
#include "rlab/zomega.hpp"

namespace rlab::cli {

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else {
                return std::to_string(v);
            }
        },
        c);
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string s = "#schema=1\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) s += ',';
        s += t.columns[i];
    }
    s += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (i) s += ',';
            if (auto it = row.find(t.columns[i]); it != row.end()) s += format_cell(it->second);
        }
        s += '\n';
    }
    return s;
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (const auto& col : t.columns) {
            auto it = row.find(col);
            if (it == row.end()) continue;
            std::visit([&](const auto& v) { rec[col] = v; }, it->second);
        }
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::int64_t to_int(const std::string& s) {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    try {
        for (const auto& part : split(text, ',')) {
            if (const auto dots = part.find(".."); dots != std::string::npos) {
                const std::int64_t lo = to_int(part.substr(0, dots));
                const std::int64_t hi = to_int(part.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument("empty range '" + part + "'");
                for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
            } else {
                out.push_back(to_int(part));
            }
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bad integer list '" + text + "': " + e.what());
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("integer out of range in '" + text + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    try {
        for (const auto& part : split(text, ',')) out.push_back(to_double(part));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number list '" + text + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

std::size_t positive(std::int64_t v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> positive_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    for (auto v : parse_int_list(text)) out.push_back(positive(v, what));
    return out;
}

double factorial_d(std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= double(k);
    return f;
}

/// N^theta, through sqrt at the centre so that ||s_N||_2 is reproduced exactly.
double power_theta(double N, double theta) {
    return theta == 0.5 ? std::sqrt(N) : std::pow(N, theta);
}

RochbergVector random_array(Rng& rng, std::size_t n, double theta) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = 0; i < n; ++i) {
        // Some zero coordinates exercise the trivial peeling steps.
        c.push_back(rng.uniform() < 0.2 ? FiniteSequence{} : rng.sequence(1, 16, 16));
    }
    return {std::move(c), theta};
}

struct LowerboundConfig {
    double theta = 0.5;
    std::string m = "1..4";
    std::string N = "4,16,64,256,1024";
};

Outcome run_lowerbound(const LowerboundConfig& cfg) {
    check_theta(cfg.theta);
    Outcome o;
    o.table.columns = {"theta", "m", "N", "rho", "bound", "ratio", "holds"};
    for (std::size_t m : positive_list(cfg.m, "m")) {
        for (std::size_t N : positive_list(cfg.N, "N")) {
            const double r = rho(bottom_vector(make_sn(N), m + 1, cfg.theta));
            const double bound = power_theta(double(N), cfg.theta) * std::pow(std::log(double(N)), double(m)) / factorial_d(m);
            const bool holds = r >= bound;
            o.table.rows.push_back({{"theta", cfg.theta}, {"m", std::int64_t(m)}, {"N", std::int64_t(N)}, {"rho", r},
                                    {"bound", bound}, {"ratio", r / bound}, {"holds", holds}});
            if (!holds) {
                o.violations.push_back("lower bound fails at m=" + std::to_string(m) + " N=" + std::to_string(N));
            }
        }
    }
    return o;
}

struct Type2Config {
    std::string m = "0..1";
    std::string n = "2..16";
    std::int64_t N = 64;
    std::int64_t ell2_max = 10;
    std::int64_t ell2_trials = 20;
    double spread = 1.5;
};

Outcome run_type2(const Type2Config& cfg, std::uint64_t seed) {
    Outcome o;
    o.table.columns = {"kind", "m", "n", "N", "trial", "lower_bound", "block_size", "scaled", "c", "spread", "holds"};
    const std::size_t N = positive(cfg.N, "N");
    // Hilbert-space tuples: the average over signs is the parallelogram identity.
    for (std::size_t n = 1; n <= static_cast<std::size_t>(std::max<std::int64_t>(0, cfg.ell2_max)); ++n) {
        for (std::int64_t t = 0; t < cfg.ell2_trials; ++t) {
            Rng rng = Rng::for_trial(seed, n * 1000 + static_cast<std::uint64_t>(t));
            std::vector<RochbergVector> tuple;
            for (std::size_t i = 0; i < n; ++i) tuple.push_back(RochbergVector({rng.sequence(1, 16, 16)}, 0.5));
            const double r = avg_sign_ratio(tuple);
            const bool holds = std::abs(r - 1.0) <= 1e-9;
            o.table.rows.push_back({{"kind", std::string("ell2")}, {"m", std::int64_t(0)}, {"n", std::int64_t(n)},
                                    {"trial", t}, {"lower_bound", r}, {"holds", holds}});
            if (!holds) o.violations.push_back("l2 tuple ratio differs from 1 at n=" + std::to_string(n));
        }
    }
    for (std::size_t m : [&] {
             std::vector<std::size_t> v;
             for (auto x : parse_int_list(cfg.m)) {
                 if (x < 0) throw std::invalid_argument("m must be non-negative");
                 v.push_back(static_cast<std::size_t>(x));
             }
             return v;
         }()) {
        double previous = 0.0;
        double cmin = std::numeric_limits<double>::infinity();
        double cmax = 0.0;
        for (std::size_t n : positive_list(cfg.n, "n")) {
            const Type2Report rep = an_lower(m, n, std::max(N, n));
            const double scale = n >= 2 ? std::pow(std::log2(double(n)), double(m)) : 1.0;
            const double scaled = rep.lower_bound / scale;
            bool holds = rep.lower_bound + 1e-12 >= previous;
            if (m == 0) holds = holds && std::abs(rep.lower_bound - 1.0) <= 1e-9;
            previous = rep.lower_bound;
            o.table.rows.push_back({{"kind", std::string("an")}, {"m", std::int64_t(m)}, {"n", std::int64_t(n)},
                                    {"N", std::int64_t(std::max(N, n))}, {"lower_bound", rep.lower_bound},
                                    {"block_size", std::int64_t(rep.block_size)}, {"scaled", scaled}, {"holds", holds}});
            if (!holds) o.violations.push_back("type-2 lower bound check fails at m=" + std::to_string(m) + " n=" + std::to_string(n));
            // The constant is fitted on the dyadic sizes 4, 8, 16, ...
            if (m >= 1 && n >= 4 && (n & (n - 1)) == 0) {
                cmin = std::min(cmin, scaled);
                cmax = std::max(cmax, scaled);
            }
        }
        if (m >= 1 && cmax > 0.0) {
            const double spread = cmax / cmin;
            const bool holds = cmin > 0.0 && spread <= cfg.spread;
            o.table.rows.push_back({{"kind", std::string("fit")}, {"m", std::int64_t(m)}, {"c", cmin},
                                    {"spread", spread}, {"holds", holds}});
            if (!holds) o.violations.push_back("fitted constant unstable for m=" + std::to_string(m));
        }
    }
    return o;
}

struct QuasilinConfig {
    double theta = 0.5;
    std::string n = "1..4";
    std::int64_t trials = 500;
    std::int64_t support = 64;
    std::int64_t window = 100;
    std::int64_t exact_trials = 1000;
    std::int64_t max_length = 6;
};

Outcome run_quasilin(const QuasilinConfig& cfg, std::uint64_t seed) {
    check_theta(cfg.theta);
    Outcome o;
    o.table.columns = {"kind", "n", "k", "trial", "constant", "running_max", "global_max", "window_max",
                       "lhs", "rhs", "holds"};
    const std::size_t trials = positive(cfg.trials, "trials");
    const std::size_t window = std::min(trials, positive(cfg.window, "window"));
    for (std::size_t n : positive_list(cfg.n, "n")) {
        const auto consts = quasilinearity_constants(n, cfg.theta, trials, positive(cfg.support, "support"),
                                                     splitmix64(seed) ^ (std::uint64_t(n) << 40));
        double running = 0.0;
        bool finite = true;
        for (std::size_t t = 0; t < trials; ++t) {
            finite = finite && std::isfinite(consts[t]);
            running = std::max(running, consts[t]);
            o.table.rows.push_back({{"kind", std::string("trial")}, {"n", std::int64_t(n)}, {"trial", std::int64_t(t)},
                                    {"constant", consts[t]}, {"running_max", running}});
        }
        const double window_max = *std::max_element(consts.end() - static_cast<std::ptrdiff_t>(window), consts.end());
        const bool holds = finite && window_max >= 0.9 * running;
        o.table.rows.push_back({{"kind", std::string("summary")}, {"n", std::int64_t(n)}, {"global_max", running},
                                {"window_max", window_max}, {"holds", holds}});
        if (!holds) o.violations.push_back("quasilinearity constant did not stabilise for n=" + std::to_string(n));
    }
    // Exact invariants of the recursive quasinorm.
    const std::size_t max_len = positive(cfg.max_length, "max-length");
    if (max_len < 2) throw std::invalid_argument("max-length must be at least 2");
    std::size_t inclusion_fail = 0;
    std::size_t projection_fail = 0;
    for (std::int64_t t = 0; t < cfg.exact_trials; ++t) {
        Rng rng = Rng::for_trial(seed ^ 0x5eedULL, static_cast<std::uint64_t>(t));
        const std::size_t total = 2 + rng.uniform_int(0, max_len - 2);
        const std::size_t n = 1 + rng.uniform_int(0, total - 2);
        const std::size_t k = total - n;
        const RochbergVector y = random_array(rng, n, cfg.theta);
        const double a = rho(iota(y, total));
        const double b = rho(y);
        const bool inc = a == b;
        const RochbergVector v = random_array(rng, total, cfg.theta);
        const double c = rho(project(v, k));
        const double d = rho(v);
        const bool proj = c <= d;
        inclusion_fail += !inc;
        projection_fail += !proj;
        o.table.rows.push_back({{"kind", std::string("inclusion")}, {"n", std::int64_t(n)}, {"k", std::int64_t(k)},
                                {"trial", t}, {"lhs", a}, {"rhs", b}, {"holds", inc}});
        o.table.rows.push_back({{"kind", std::string("projection")}, {"n", std::int64_t(n)}, {"k", std::int64_t(k)},
                                {"trial", t}, {"lhs", c}, {"rhs", d}, {"holds", proj}});
    }
    if (inclusion_fail) o.violations.push_back(std::to_string(inclusion_fail) + " inclusion isometry failures");
    if (projection_fail) o.violations.push_back(std::to_string(projection_fail) + " projection monotonicity failures");
    return o;
}

struct FdbConfig {
    std::int64_t trials = 100;
    std::int64_t max_order = 6;
};

ScalarJet random_scalar_jet(Rng& rng, Complex base, std::size_t order) {
    std::vector<Complex> c(order + 1);
    for (auto& v : c) v = rng.complex_in_disc();
    return {base, std::move(c)};
}

ScalarJet random_psi(Rng& rng, Complex value, std::size_t order) {
    ScalarJet psi = random_scalar_jet(rng, rng.complex_in_disc(0.5), order);
    psi.coeffs[0] = value;
    if (order >= 1) psi.coeffs[1] += std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return psi;
}

double max_abs(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

Outcome run_fdb(const FdbConfig& cfg, std::uint64_t seed) {
    Outcome o;
    o.table.columns = {"kind", "trial", "order", "residual", "tolerance", "holds"};
    const std::size_t max_order = positive(cfg.max_order, "max-order");
    auto record = [&](const char* kind, std::int64_t t, std::size_t order, double residual, double tol) {
        const bool holds = residual <= tol;
        o.table.rows.push_back({{"kind", std::string(kind)}, {"trial", t}, {"order", std::int64_t(order)},
                                {"residual", residual}, {"tolerance", tol}, {"holds", holds}});
        if (!holds) o.violations.push_back(std::string(kind) + " residual too large in trial " + std::to_string(t));
    };
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        const std::size_t order = 1 + rng.uniform_int(0, max_order - 1);
        // chain rule
        const Complex u = rng.complex_in_disc();
        const ScalarJet psi = random_psi(rng, u, order);
        const ScalarJet f = random_scalar_jet(rng, u, order);
        const auto lhs = fdb_matrix(psi, order + 1).apply(tau_extract(f, order + 1, 0));
        const auto rhs = tau_extract(jet_compose(f, psi), order + 1, 0);
        record("fdb", t, order, max_abs(lhs, rhs), 1e-10);
        // inverse through series reversion
        const TriangularMatrix inv = fdb_matrix(jet_revert(psi), order + 1);
        // Entries grow like |psi'|^{-order}, so the comparison is relative to the largest one.
        const double scale = std::max(1.0, inv.max_abs_diff(TriangularMatrix(order + 1)));
        record("fdb_inverse", t, order, fdb_matrix(psi, order + 1).inverse().max_abs_diff(inv) / scale, 1e-10);
        // Leibniz rule on vector-valued jets
        const Complex z = rng.complex_in_disc();
        const ScalarJet L = random_scalar_jet(rng, z, order);
        std::vector<FiniteSequence> fc;
        for (std::size_t i = 0; i <= order; ++i) fc.push_back(rng.sequence(1, 8, 8));
        const VectorJet fv(z, std::move(fc));
        const auto lm = leibniz_matrix(L, order + 1).apply(tau_extract(fv, order + 1, 0));
        const auto lp = tau_extract(jet_mul(L, fv), order + 1, 0);
        double d = 0.0;
        for (std::size_t i = 0; i < lm.size(); ++i) d = std::max(d, sup_distance(lm[i], lp[i]));
        record("leibniz", t, order, d, 1e-12);
        // reiteration differentials intertwined by FdB
        const std::size_t n = 1 + rng.uniform_int(0, 1);
        const std::size_t k = 1 + rng.uniform_int(0, 1);
        const RochbergVector x = random_array(rng, n, 0.5);
        if (!x.is_zero()) {
            const ScalarJet chi = random_psi(rng, Complex(0.5), n + k - 1);
            record("intertwine", t, n + k, intertwining_residual(x, k, chi), 1e-8);
        }
    }
    return o;
}

struct DualityConfig {
    std::int64_t trials = 100;
    std::string c = "0.25,0.5,0.75";
    std::int64_t n_max = 4;
    std::int64_t N_max = 1024;
};

Outcome run_duality(const DualityConfig& cfg, std::uint64_t seed) {
    Outcome o;
    o.table.columns = {"kind", "trial", "c", "n", "N", "lhs", "rhs", "holds"};
    const std::size_t n_max = positive(cfg.n_max, "n-max");
    const auto cs = parse_double_list(cfg.c);
    for (double c : cs) check_theta(c);
    std::size_t fails = 0;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(t));
        const FiniteSequence u = rng.sequence(1, 16, 16);
        const FiniteSequence v = rng.sequence(1, 16, 16);
        for (double c : cs) {
            for (std::size_t n = 1; n <= n_max; ++n) {
                const PairingBound pb = pairing_bound(u, v, c, n);
                const bool holds = pb.coefficient <= pb.bound;
                fails += !holds;
                o.table.rows.push_back({{"kind", std::string("pairing")}, {"trial", t}, {"c", c}, {"n", std::int64_t(n)},
                                        {"lhs", pb.coefficient}, {"rhs", pb.bound}, {"holds", holds}});
            }
        }
    }
    if (fails) o.violations.push_back(std::to_string(fails) + " pairing bound violations");
    std::size_t cert_fails = 0;
    const std::size_t N_max = positive(cfg.N_max, "N-max");
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t N = 1; N <= N_max; ++N) {
            const double cert = lb_certificate(N, n, 0.5);
            const double r = rho(bottom_vector(make_sn(N), n, 0.5));
            const bool holds = cert <= r;
            cert_fails += !holds;
            o.table.rows.push_back({{"kind", std::string("certificate")}, {"c", 0.5}, {"n", std::int64_t(n)},
                                    {"N", std::int64_t(N)}, {"lhs", cert}, {"rhs", r}, {"holds", holds}});
        }
    }
    if (cert_fails) o.violations.push_back(std::to_string(cert_fails) + " certificate violations");
    return o;
}

struct DiagramsConfig {
    std::string which = "all";
    std::int64_t samples = 100;
    std::int64_t max_m = 4;
    double tolerance = 1e-12;
};

Outcome run_diagrams(const DiagramsConfig& cfg, std::uint64_t seed) {
    Outcome o;
    o.table.columns = {"diagram", "square", "samples", "max_residual", "holds"};
    std::vector<std::string> names;
    if (cfg.which == "all") {
        names = kDiagramNames;
    } else {
        names = split(cfg.which, ',');
        for (const auto& n : names) {
            if (std::find(kDiagramNames.begin(), kDiagramNames.end(), n) == kDiagramNames.end()) {
                throw std::invalid_argument("unknown diagram '" + n + "'");
            }
        }
    }
    const std::size_t samples = positive(cfg.samples, "samples");
    const std::size_t max_m = positive(cfg.max_m, "max-m");
    for (const auto& name : names) {
        for (const auto& r : diagram_check(name, samples, max_m, seed)) {
            const bool holds = r.max_residual <= cfg.tolerance;
            o.table.rows.push_back({{"diagram", name}, {"square", r.square}, {"samples", std::int64_t(samples)},
                                    {"max_residual", r.max_residual}, {"holds", holds}});
            if (!holds) o.violations.push_back("diagram square " + r.square + " residual above tolerance");
        }
    }
    return o;
}

struct ZomegaConfig {
    std::string profiles = "0.25:2,0.3:3";
    std::int64_t samples = 4096;
    std::int64_t trials = 8;
    std::int64_t support = 64;
};

FiniteSequence random_normalized(Rng& rng, std::size_t support) {
    FiniteSequence f = rng.sequence(1, support, support, false).map([](Index, Complex v) { return Complex(std::abs(v)); });
    return Complex(1.0 / lp_norm(f, 2.0)) * f;
}

Outcome run_zomega(const ZomegaConfig& cfg, std::uint64_t seed) {
    Outcome o;
    o.table.columns = {"kind", "r", "k", "trial", "j", "n", "value", "reference", "holds"};
    const std::size_t samples = positive(cfg.samples, "samples");
    const std::size_t support = positive(cfg.support, "support");
    std::vector<OmegaProfile> profs;
    for (const auto& item : split(cfg.profiles, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw std::invalid_argument("profiles must look like r:k,r:k");
        profs.emplace_back(to_double(parts[0]), positive(to_int(parts[1]), "k"));
    }
    auto fail = [&](const std::string& what) { o.violations.push_back(what); };
    for (std::size_t pi = 0; pi < profs.size(); ++pi) {
        const OmegaProfile& prof = profs[pi];
        const std::int64_t k = static_cast<std::int64_t>(prof.k);
        for (std::int64_t t = 0; t < cfg.trials; ++t) {
            Rng rng = Rng::for_trial(seed ^ (pi << 48), static_cast<std::uint64_t>(t));
            const FiniteSequence f = random_normalized(rng, support);
            const double err = boundary_normalization_error(prof, f, samples);
            const bool ok = err <= 1e-8;
            o.table.rows.push_back({{"kind", std::string("normalization")}, {"r", prof.r}, {"k", k}, {"trial", t},
                                    {"value", err}, {"reference", 1e-8}, {"holds", ok}});
            if (!ok) fail("boundary normalization off for r=" + format_double(prof.r));
            for (std::size_t j = 1; j <= 2 * prof.k; ++j) {
                const FiniteSequence tau = differential_tau(prof, f, j);
                if (j % prof.k != 0) {
                    const bool zero = tau.is_zero();
                    o.table.rows.push_back({{"kind", std::string("vanishing")}, {"r", prof.r}, {"k", k}, {"trial", t},
                                            {"j", std::int64_t(j)}, {"value", lp_norm(tau, kInfinity)},
                                            {"reference", 0.0}, {"holds", zero}});
                    if (!zero) fail("differential does not vanish at j=" + std::to_string(j));
                } else {
                    const FiniteSequence ref = j == prof.k
                        ? f.map([&](Index, Complex v) { return 2.0 * prof.r * v * std::log(v.real()); })
                        : differential_tau_closed(prof, f, j);
                    const double d = sup_distance(tau, ref);
                    const bool ok2 = d <= 1e-10;
                    o.table.rows.push_back({{"kind", std::string("kalton-peck")}, {"r", prof.r}, {"k", k}, {"trial", t},
                                            {"j", std::int64_t(j)}, {"value", d}, {"reference", 1e-10}, {"holds", ok2}});
                    if (!ok2) fail("differential mismatch at j=" + std::to_string(j));
                }
            }
            // Below order k+1 the twisted quasinorm is the plain direct sum.
            for (std::size_t n = 1; n <= prof.k + 1; ++n) {
                std::vector<FiniteSequence> c;
                for (std::size_t i = 0; i < n; ++i) c.push_back(rng.sequence(1, 16, 16));
                const RochbergVector v(std::move(c), 0.5);
                const double a = zomega_rho(prof, v);
                const double b = direct_sum_norm(v);
                const bool degenerate = n <= prof.k;
                const bool ok3 = degenerate ? a == b : true;
                o.table.rows.push_back({{"kind", std::string(degenerate ? "degenerate" : "twisted")}, {"r", prof.r},
                                        {"k", k}, {"trial", t}, {"n", std::int64_t(n)}, {"value", a},
                                        {"reference", b}, {"holds", ok3}});
                if (!ok3) fail("degeneracy fails at n=" + std::to_string(n));
            }
        }
    }
    return o;
}

struct AlgebraConfig {
    std::int64_t n_max = 20;
    std::int64_t order = static_cast<std::int64_t>(kDefaultAlgebraOrder);
    std::int64_t strip_samples = 16;
};

Outcome run_algebra(const AlgebraConfig& cfg) {
    Outcome o;
    o.table.columns = {"kind", "n", "a_re", "a_im", "lambda_re", "lambda_im", "value", "reference", "holds"};
    auto fail = [&](const std::string& what) { o.violations.push_back(what); };
    for (std::int64_t n = 1; n <= cfg.n_max; ++n) {
        const Rational v = exp_product_coefficient(static_cast<unsigned>(n));
        const bool ok = v == 0;
        o.table.rows.push_back({{"kind", std::string("identity")}, {"n", n}, {"value", v.str()},
                                {"reference", std::string("0")}, {"holds", ok}});
        if (!ok) fail("alternating factorial identity fails at n=" + std::to_string(n));
    }
    const std::size_t order = positive(cfg.order, "order");
    const std::vector<MobiusMap> maps = {
        {1.0, 0.0}, {1.0, 0.5}, {Complex(0, 1), 0.0}, {Complex(0, 1), Complex(0.3, 0.4)}, {std::polar(1.0, 1.0), -0.9}};
    for (const auto& m : maps) {
        const auto c = mobius_coeffs(m, order);
        const double w = wiener_norm(c);
        const double sem = decay_seminorm(c, 2.0);
        const double bound = std::numbers::pi * std::numbers::pi / 6.0 * sem + std::abs(c[0]);
        const bool ok = w <= bound;
        Row base{{"a_re", m.a.real()}, {"a_im", m.a.imag()}, {"lambda_re", m.lambda.real()}, {"lambda_im", m.lambda.imag()}};
        Row r1 = base;
        r1.insert({{"kind", std::string("wiener")}, {"n", std::int64_t(order)}, {"value", w}, {"reference", bound}, {"holds", ok}});
        o.table.rows.push_back(r1);
        if (!ok) fail("Wiener bound fails");
        double err = 0.0;
        for (int s = 0; s < 64; ++s) {
            const Complex z = std::polar(0.9 * (s % 8 + 1) / 8.0, 2.0 * std::numbers::pi * s / 64.0);
            Complex acc{};
            for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
            err = std::max(err, std::abs(acc - m(z)));
        }
        Row r2 = base;
        r2.insert({{"kind", std::string("evaluation")}, {"n", std::int64_t(order)}, {"value", err}, {"reference", 1e-8},
                   {"holds", err <= 1e-8}});
        o.table.rows.push_back(r2);
        if (err > 1e-8) fail("Möbius series evaluation mismatch");
        for (const auto& inner : maps) {
            const std::size_t ord = 32;
            const ScalarJet g = jet_compose(mobius_jet(m, inner(0.0), ord), mobius_jet(inner, 0.0, ord));
            const auto direct = mobius_coeffs(mobius_compose(m, inner), ord);
            double d = 0.0;
            for (std::size_t k = 0; k <= ord; ++k) d = std::max(d, std::abs(g.coeffs[k] - direct[k]));
            Row r3 = base;
            r3.insert({{"kind", std::string("composition")}, {"n", std::int64_t(ord)}, {"value", d}, {"reference", 1e-8},
                       {"holds", d <= 1e-8}});
            o.table.rows.push_back(r3);
            if (d > 1e-8) fail("Möbius composition mismatch");
        }
    }
    const auto blow = strip_derivative_blowup(positive(cfg.strip_samples, "strip-samples"));
    for (std::size_t i = 0; i < blow.size(); ++i) {
        const bool sym = std::abs(strip_derivative(Complex(0, blow[i].y))) == std::abs(strip_derivative(Complex(0, -blow[i].y)));
        const bool ok = sym && (i == 0 ? std::abs(blow[i].modulus - 0.5) <= 1e-15 : blow[i].modulus > blow[i - 1].modulus);
        o.table.rows.push_back({{"kind", std::string("strip")}, {"n", std::int64_t(i)}, {"value", blow[i].modulus},
                                {"reference", blow[i].y}, {"holds", ok}});
        if (!ok) fail("strip derivative not monotone at sample " + std::to_string(i));
    }
    if (blow.size() >= 12 && !(blow.back().modulus > 1e3)) fail("strip derivative does not blow up");
    return o;
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry point

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical experiments on Rochberg spaces of the (l_inf, l_1) scale", "rlab"};
    app.require_subcommand(1);
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", output, "write the table here instead of stdout");
    app.add_option("--seed", seed, "random seed");

    LowerboundConfig lb;
    auto* c_lb = app.add_subcommand("lowerbound", "rho_{m+1}(0,...,0,s_N) against log^m N N^theta / m!");
    c_lb->add_option("--theta", lb.theta);
    c_lb->add_option("--m", lb.m);
    c_lb->add_option("--N", lb.N);

    Type2Config t2;
    auto* c_t2 = app.add_subcommand("type2", "witnessed type-2 constants by sign enumeration");
    c_t2->add_option("--m", t2.m);
    c_t2->add_option("--n", t2.n);
    c_t2->add_option("--N", t2.N, "coordinates available to the witnesses");
    c_t2->add_option("--ell2-max", t2.ell2_max);
    c_t2->add_option("--ell2-trials", t2.ell2_trials);
    c_t2->add_option("--spread", t2.spread, "allowed max/min of lower(n)/log2^m n over dyadic n >= 4");

    QuasilinConfig ql;
    auto* c_ql = app.add_subcommand("quasilin", "quasilinearity constants and exact quasinorm invariants");
    c_ql->add_option("--theta", ql.theta);
    c_ql->add_option("--n", ql.n);
    c_ql->add_option("--trials", ql.trials);
    c_ql->add_option("--support", ql.support);
    c_ql->add_option("--window", ql.window);
    c_ql->add_option("--exact-trials", ql.exact_trials);
    c_ql->add_option("--max-length", ql.max_length);

    FdbConfig fd;
    auto* c_fd = app.add_subcommand("fdb", "Faa di Bruno and Leibniz matrices against jet arithmetic");
    c_fd->add_option("--trials", fd.trials);
    c_fd->add_option("--max-order", fd.max_order);

    DualityConfig du;
    auto* c_du = app.add_subcommand("duality", "pairing bound and lower-bound certificates");
    c_du->add_option("--trials", du.trials);
    c_du->add_option("--c", du.c);
    c_du->add_option("--n-max", du.n_max);
    c_du->add_option("--N-max", du.N_max);

    DiagramsConfig dg;
    auto* c_dg = app.add_subcommand("diagrams", "commutativity residuals of the diagram suite");
    c_dg->add_option("--which", dg.which, "all or a comma list of poz,Fm2,F2m,FuGz,Tn,sigma");
    c_dg->add_option("--samples", dg.samples);
    c_dg->add_option("--max-m", dg.max_m);
    c_dg->add_option("--tolerance", dg.tolerance);

    ZomegaConfig zo;
    auto* c_zo = app.add_subcommand("zomega", "the omega = 1/2 + r z^k family");
    c_zo->add_option("--profiles", zo.profiles, "comma list of r:k");
    c_zo->add_option("--samples", zo.samples);
    c_zo->add_option("--trials", zo.trials);
    c_zo->add_option("--support", zo.support);

    AlgebraConfig al;
    auto* c_al = app.add_subcommand("algebra", "exact identity, Mobius coefficients, strip derivative");
    c_al->add_option("--n-max", al.n_max);
    c_al->add_option("--order", al.order);
    c_al->add_option("--strip-samples", al.strip_samples);

    std::vector<std::string> argv_store{"rlab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Outcome outcome;
    try {
        if (c_lb->parsed()) outcome = run_lowerbound(lb);
        else if (c_t2->parsed()) outcome = run_type2(t2, seed);
        else if (c_ql->parsed()) outcome = run_quasilin(ql, seed);
        else if (c_fd->parsed()) outcome = run_fdb(fd, seed);
        else if (c_du->parsed()) outcome = run_duality(du, seed);
        else if (c_dg->parsed()) outcome = run_diagrams(dg, seed);
        else if (c_zo->parsed()) outcome = run_zomega(zo, seed);
        else outcome = run_algebra(al);
    } catch (const std::invalid_argument& e) {
        err << "rlab: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string text = format == "json" ? to_json(outcome.table) : to_csv(outcome.table);
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            err << "rlab: cannot open " << output << "\n";
            return kExitUsage;
        }
        f << text;
    }
    for (const auto& v : outcome.violations) err << "violation: " << v << "\n";
    return outcome.violations.empty() ? kExitOk : kExitAssertion;
}

}  // namespace rlab::cli
