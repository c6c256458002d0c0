#include "rlab/zomega.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rlab/parallel.hpp"

namespace rlab {

OmegaProfile::OmegaProfile(double r_, std::size_t k_) : r(r_), k(k_) {
    if (!(r > 0.0 && r < 0.5)) throw std::invalid_argument("OmegaProfile: r must lie in (0, 1/2)");
    if (k < 1) throw std::invalid_argument("OmegaProfile: k must be positive");
}

Complex OmegaProfile::omega(Complex z) const {
    return 0.5 + r * std::pow(z, static_cast<int>(k));
}

double p_profile(const OmegaProfile& prof, double theta) {
    return 2.0 / (1.0 + 2.0 * prof.r * std::cos(double(prof.k) * theta));
}

void require_normalized(const FiniteSequence& f) {
    for (const auto& e : f.entries()) {
        if (e.second.imag() != 0.0 || e.second.real() < 0.0) {
            throw std::invalid_argument("zomega: f must be non-negative");
        }
    }
    if (std::abs(lp_norm(f, 2.0) - 1.0) > 1e-12) throw std::invalid_argument("zomega: f must have unit l2 norm");
}

FiniteSequence extremal_F(const OmegaProfile& prof, const FiniteSequence& f, Complex z) {
    require_normalized(f);
    const Complex w = prof.omega(z) / OmegaProfile::omega0();
    return f.map([w](Index, Complex v) { return std::exp(w * std::log(v.real())); });
}

double boundary_normalization_error(const OmegaProfile& prof, const FiniteSequence& f, std::size_t samples) {
    if (samples < 1) throw std::invalid_argument("boundary_normalization_error: need samples");
    require_normalized(f);
    std::vector<double> err(samples);
    parallel_for(samples, [&](std::size_t s) {
        const double t = 2.0 * std::numbers::pi * double(s) / double(samples);
        const FiniteSequence F = extremal_F(prof, f, std::polar(1.0, t));
        err[s] = std::abs(lp_norm(F, p_profile(prof, t)) - 1.0);
    });
    double m = 0.0;
    for (double e : err) m = std::max(m, e);
    return m;
}

FiniteSequence differential_tau(const OmegaProfile& prof, const FiniteSequence& f, std::size_t j) {
    require_normalized(f);
    std::vector<FiniteSequence::Entry> out;
    for (const auto& [i, v] : f.entries()) {
        // exponent jet a(z) log f_i at 0, a = 2 r z^k
        std::vector<Complex> a(j + 1);
        if (prof.k <= j) a[prof.k] = 2.0 * prof.r * std::log(v.real());
        const ScalarJet e = jet_exp(ScalarJet(Complex{}, std::move(a)));
        out.emplace_back(i, v * e.coeffs[j]);
    }
    return FiniteSequence::from_entries(std::move(out));
}

FiniteSequence differential_tau_closed(const OmegaProfile& prof, const FiniteSequence& f, std::size_t j) {
    require_normalized(f);
    if (j % prof.k != 0) return {};
    const std::size_t q = j / prof.k;
    return f.map([&](Index, Complex v) {
        const double l = 2.0 * prof.r * std::log(v.real());
        return v * std::pow(l, double(q)) / std::tgamma(double(q) + 1.0);
    });
}

RochbergVector zomega_omega_1n(const OmegaProfile& prof, const FiniteSequence& x, std::size_t n) {
    if (n < 1) throw std::invalid_argument("zomega_omega_1n: n must be positive");
    RochbergVector out = zero_vector(n, 0.5);
    if (x.is_zero()) return out;
    const double norm = lp_norm(x, 2.0);
    const FiniteSequence modulus = x.map([norm](Index, Complex v) { return Complex(std::abs(v) / norm); });
    for (std::size_t j = 1; j <= n; ++j) {
        const FiniteSequence t = differential_tau(prof, modulus, j);
        out.coords[n - j] = t.map([&](Index i, Complex v) {
            const Complex xi = x[i];
            return (xi / std::abs(xi)) * norm * v;
        });
    }
    return out;
}

double zomega_rho(const OmegaProfile& prof, const RochbergVector& v) {
    const std::size_t n = v.size();
    const FiniteSequence& x0 = v.coords.back();
    if (n == 1) return lp_norm(x0, 2.0);
    RochbergVector upper(std::vector<FiniteSequence>(v.coords.begin(), v.coords.end() - 1), v.theta);
    if (!x0.is_zero()) upper = upper - zomega_omega_1n(prof, x0, n - 1);
    return zomega_rho(prof, upper) + lp_norm(x0, 2.0);
}

double direct_sum_norm(const RochbergVector& v) {
    double s = lp_norm(v.coords.front(), 2.0);
    for (std::size_t i = 1; i < v.size(); ++i) s = s + lp_norm(v.coords[i], 2.0);
    return s;
}

}  // namespace rlab
