// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "rlab/algebra.hpp"
#include "rlab/duality.hpp"
#include "rlab/reparam.hpp"
#include "rlab/rochberg.hpp"
#include "rlab/sampling.hpp"
#include "rlab/type2.hpp"
#include "rlab/zomega.hpp"

using namespace rlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RochbergVector random_array(Rng& rng, std::size_t n) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.uniform() < 0.2 ? FiniteSequence{} : rng.sequence(1, 16, 16));
    return {c, 0.5};
}

ScalarJet random_jet(Rng& rng, Complex base, std::size_t order) {
    std::vector<Complex> c(order + 1);
    for (auto& v : c) v = rng.complex_in_disc();
    return {base, c};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Verdict {
    bool pass;
    std::string detail;
};

Verdict identity_exact() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (unsigned n = 1; n <= 20; ++n) ok = ok && exp_product_coefficient(n) == 0;
    const double s = seconds_since(t0);
    return {ok && s < 1.0, "n = 1..20 exact zero, " + num(s) + " s"};
}

Verdict lower_bound() {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst = 1e300;
    for (std::size_t m = 1; m <= 4; ++m) {
        double fact = 1.0;
        for (std::size_t k = 2; k <= m; ++k) fact *= double(k);
        for (std::size_t N : {4, 16, 64, 256, 1024}) {
            const double r = rho(bottom_vector(make_sn(N), m + 1, 0.5));
            const double bound = std::pow(std::log(double(N)), double(m)) * std::sqrt(double(N)) / fact;
            ok = ok && r >= bound;
            worst = std::min(worst, r / bound);
        }
    }
    const double s = seconds_since(t0);
    return {ok && s < 10.0, "min ratio " + num(worst) + ", " + num(s) + " s"};
}

Verdict quasilinearity() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto c = quasilinearity_constants(n, 0.5, 500, 64, splitmix64(0) ^ (std::uint64_t(n) << 40));
        const bool finite = std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); });
        const double global = *std::max_element(c.begin(), c.end());
        const double window = *std::max_element(c.end() - 100, c.end());
        ok = ok && finite && window >= 0.9 * global;
        detail += "n=" + std::to_string(n) + " C~" + num(global) + " (last100 " + num(window) + ") ";
    }
    const double s = seconds_since(t0);
    return {ok && s < 30.0, detail + num(s) + " s"};
}

Verdict exactness() {
    std::size_t fails = 0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        Rng rng = Rng::for_trial(0x5eedULL, t);
        const std::size_t total = 2 + rng.uniform_int(0, 4);
        const std::size_t n = 1 + rng.uniform_int(0, total - 2);
        const std::size_t k = total - n;
        const RochbergVector y = random_array(rng, n);
        fails += rho(iota(y, total)) != rho(y);
        const RochbergVector v = random_array(rng, total);
        fails += !(rho(project(v, k)) <= rho(v));
    }
    return {fails == 0, std::to_string(fails) + " failures in 1000 arrays"};
}

Verdict fdb_equivalence() {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = Rng::for_trial(0xfdbULL, t);
        const std::size_t order = 1 + rng.uniform_int(0, 5);
        const Complex u = rng.complex_in_disc();
        ScalarJet psi = random_jet(rng, rng.complex_in_disc(), order);
        psi.coeffs[0] = u;
        psi.coeffs[1] += 1.0;
        const ScalarJet f = random_jet(rng, u, order);
        const auto lhs = fdb_matrix(psi, order + 1).apply(tau_extract(f, order + 1, 0));
        const auto rhs = tau_extract(jet_compose(f, psi), order + 1, 0);
        for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
    return {worst <= 1e-10, "max residual " + num(worst)};
}

Verdict leibniz() {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = Rng::for_trial(0x1e1bULL, t);
        const std::size_t order = 1 + rng.uniform_int(0, 5);
        const Complex z = rng.complex_in_disc();
        const ScalarJet L = random_jet(rng, z, order);
        std::vector<FiniteSequence> c;
        for (std::size_t i = 0; i <= order; ++i) c.push_back(rng.sequence(1, 8, 8));
        const VectorJet f(z, c);
        const auto lhs = leibniz_matrix(L, order + 1).apply(tau_extract(f, order + 1, 0));
        const auto rhs = tau_extract(jet_mul(L, f), order + 1, 0);
        for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, sup_distance(lhs[i], rhs[i]));
    }
    return {worst <= 1e-12, "max residual " + num(worst)};
}

Verdict duality() {
    std::size_t fails = 0;
    std::size_t checks = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = Rng::for_trial(0xd0a1ULL, t);
        const FiniteSequence u = rng.sequence(1, 16, 16);
        const FiniteSequence v = rng.sequence(1, 16, 16);
        for (double c : {0.25, 0.5, 0.75}) {
            for (std::size_t n = 1; n <= 4; ++n) {
                const PairingBound b = pairing_bound(u, v, c, n);
                fails += !(b.coefficient <= b.bound);
                ++checks;
            }
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t N = 1; N <= 1024; ++N) {
            fails += !(lb_certificate(N, n, 0.5) <= rho(bottom_vector(make_sn(N), n, 0.5)));
            ++checks;
        }
    }
    return {fails == 0, std::to_string(fails) + " failures in " + std::to_string(checks) + " inequalities"};
}

Verdict diagrams() {
    double worst = 0.0;
    for (const char* name : {"Fm2", "F2m", "poz", "Tn", "sigma"}) {
        for (const auto& r : diagram_check(name, 100, 4, 0)) worst = std::max(worst, r.max_residual);
    }
    return {worst <= 1e-12, "max residual " + num(worst)};
}

Verdict zomega() {
    bool ok = true;
    double norm_err = 0.0;
    double kp_err = 0.0;
    for (const OmegaProfile& prof : {OmegaProfile(0.25, 2), OmegaProfile(0.3, 3)}) {
        for (std::uint64_t t = 0; t < 4; ++t) {
            Rng rng = Rng::for_trial(0x2e0ULL + prof.k, t);
            FiniteSequence f = rng.sequence(1, 64, 64, false).map([](Index, Complex v) { return Complex(std::abs(v)); });
            f = Complex(1.0 / lp_norm(f, 2.0)) * f;
            norm_err = std::max(norm_err, boundary_normalization_error(prof, f, 4096));
            for (std::size_t j = 1; j <= 2 * prof.k; ++j) {
                if (j % prof.k) ok = ok && differential_tau(prof, f, j).is_zero();
            }
            const FiniteSequence kp = f.map([&](Index, Complex v) { return 2.0 * prof.r * v * std::log(v.real()); });
            kp_err = std::max(kp_err, sup_distance(differential_tau(prof, f, prof.k), kp));
        }
    }
    ok = ok && norm_err <= 1e-8 && kp_err <= 1e-10;
    return {ok, "normalization " + num(norm_err) + ", order-k residual " + num(kp_err)};
}

Verdict type2() {
    bool ok = true;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::uint64_t t = 0; t < 10; ++t) {
            Rng rng = Rng::for_trial(0x7e2ULL + n, t);
            std::vector<RochbergVector> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(RochbergVector({rng.sequence(1, 16, 16)}, 0.5));
            ok = ok && std::abs(avg_sign_ratio(xs) - 1.0) <= 1e-9;
        }
    }
    std::vector<double> scaled;
    for (std::size_t n : {4, 8, 16}) scaled.push_back(an_lower(1, n, 64).lower_bound / std::log2(double(n)));
    const double c = *std::min_element(scaled.begin(), scaled.end());
    const double spread = *std::max_element(scaled.begin(), scaled.end()) / c;
    ok = ok && c > 0.0 && spread <= 1.5;
    return {ok, "fitted c " + num(c) + ", max/min " + num(spread)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"exact alternating factorial identity", identity_exact},
        {"lower bound on indicator arrays", lower_bound},
        {"quasilinearity constants stabilise", quasilinearity},
        {"inclusion isometry and projection contraction", exactness},
        {"Faa di Bruno matrix against composition", fdb_equivalence},
        {"Leibniz matrix against jet products", leibniz},
        {"pairing bound and lower-bound certificates", duality},
        {"diagram suite commutes", diagrams},
        {"omega = 1/2 + r z^k family", zomega},
        {"type-2 witnesses", type2},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("criterion %zu: %s (%s; %s)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    v.detail.c_str());
    }
    return failed ? 1 : 0;
}
