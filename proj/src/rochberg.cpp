#include "rlab/rochberg.hpp"

#include <cmath>
#include <numbers>

#include "rlab/discalg.hpp"
#include "rlab/parallel.hpp"
#include "rlab/sampling.hpp"

namespace rlab {

void check_theta(double theta) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("theta must lie in (0, 1)");
}

RochbergVector::RochbergVector(std::vector<FiniteSequence> c, double theta_)
    : coords(std::move(c)), theta(theta_) {
    if (coords.empty()) throw std::invalid_argument("RochbergVector: needs at least one coordinate");
    check_theta(theta);
}

bool RochbergVector::is_zero() const {
    for (const auto& c : coords) {
        if (!c.is_zero()) return false;
    }
    return true;
}

namespace {

void require_compatible(const RochbergVector& a, const RochbergVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RochbergVector: length mismatch");
    if (a.theta != b.theta) throw std::invalid_argument("RochbergVector: theta mismatch");
}

}  // namespace

RochbergVector operator+(const RochbergVector& a, const RochbergVector& b) {
    require_compatible(a, b);
    RochbergVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

RochbergVector operator-(const RochbergVector& a, const RochbergVector& b) {
    require_compatible(a, b);
    RochbergVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

RochbergVector operator*(Complex lambda, const RochbergVector& a) {
    RochbergVector out = a;
    for (auto& c : out.coords) c *= lambda;
    return out;
}

RochbergVector zero_vector(std::size_t n, double theta) {
    return {std::vector<FiniteSequence>(n), theta};
}

RochbergVector bottom_vector(const FiniteSequence& x, std::size_t n, double theta) {
    RochbergVector v = zero_vector(n, theta);
    v.coords.back() = x;
    return v;
}

RochbergVector iota(const RochbergVector& y, std::size_t m) {
    if (m < y.size()) throw std::invalid_argument("iota: target shorter than source");
    RochbergVector out = y;
    out.coords.resize(m);
    return out;
}

RochbergVector project(const RochbergVector& v, std::size_t k) {
    if (k < 1 || k > v.size()) throw std::invalid_argument("project: bad target length");
    return {std::vector<FiniteSequence>(v.coords.end() - static_cast<std::ptrdiff_t>(k), v.coords.end()), v.theta};
}

VectorJet extremal_jet(const FiniteSequence& x, std::size_t order, double theta) {
    check_theta(theta);
    if (x.is_zero()) throw std::domain_error("extremal_jet: zero input");
    const double p = 1.0 / theta;
    const double norm = lp_norm(x, p);
    std::vector<std::vector<FiniteSequence::Entry>> parts(order + 1);
    for (const auto& [i, value] : x.entries()) {
        const double pl = p * std::log(std::abs(value) / norm);
        // term_j = x (pL)^j / j!, built by the same recurrence for every order
        // so that lower coefficients never depend on the requested order.
        Complex term = value;
        parts[0].emplace_back(i, term);
        for (std::size_t j = 1; j <= order; ++j) {
            term *= pl / double(j);
            parts[j].emplace_back(i, term);
        }
    }
    std::vector<FiniteSequence> coeffs;
    coeffs.reserve(order + 1);
    for (auto& part : parts) coeffs.push_back(FiniteSequence::from_entries(std::move(part)));
    return {Complex(theta), std::move(coeffs)};
}

RochbergVector omega_1n(const FiniteSequence& x, std::size_t n, double theta) {
    if (n < 1) throw std::invalid_argument("omega_1n: n must be positive");
    const VectorJet f = extremal_jet(x, n, theta);
    return {tau_extract(f, n + 1, 1), theta};
}

ScalarJet strip_divisor_jet(double theta, std::size_t order) {
    check_theta(theta);
    const Complex ipi(0.0, std::numbers::pi);
    const Complex w0 = std::exp(ipi * theta);
    // e^{i pi z} at theta: coefficient k is w0 (i pi)^k / k!.
    std::vector<Complex> e(order + 1);
    e[0] = w0;
    for (std::size_t k = 1; k <= order; ++k) e[k] = e[k - 1] * ipi / double(k);
    std::vector<Complex> num = e;
    std::vector<Complex> den = e;
    num[0] = 0.0;
    den[0] = w0 - std::conj(w0);
    return {Complex(theta), series_divide(num, den, order)};
}

VectorJet array_extremal(const RochbergVector& v, std::size_t order) {
    const std::size_t k = v.size();
    if (order + 1 < k) throw std::invalid_argument("array_extremal: order too small for the array");
    const Complex base(v.theta);
    if (v.is_zero()) return {base, std::vector<FiniteSequence>(order + 1)};

    const FiniteSequence& x0 = v.coords.back();
    VectorJet f0 = x0.is_zero() ? VectorJet(base, std::vector<FiniteSequence>(order + 1))
                                : extremal_jet(x0, order, v.theta);
    if (k == 1) return f0;

    // Residual jet R with R_0 = 0 and R_j = v_j - f0_j for j < k; then f = f0 + phi g.
    std::vector<FiniteSequence> residual(k);
    for (std::size_t j = 1; j < k; ++j) residual[j] = v.degree(j) - f0.coeffs[j];
    const VectorJet r(base, std::move(residual));
    const ScalarJet phi = strip_divisor_jet(v.theta, order);
    const VectorJet quotient = jet_div_zero(r, phi.truncated(k - 1));
    const RochbergVector w(tau_extract(quotient, k - 1, 0), v.theta);
    const VectorJet g = array_extremal(w, order);
    return jet_add(f0, jet_mul(phi, g));
}

RochbergVector omega_kn(const RochbergVector& v, std::size_t n) {
    if (n < 1) throw std::invalid_argument("omega_kn: n must be positive");
    const std::size_t k = v.size();
    const VectorJet f = array_extremal(v, n + k - 1);
    return {tau_extract(f, n + k, k), v.theta};
}

double rho(const RochbergVector& v) {
    const double p = v.p();
    const std::size_t n = v.size();
    const FiniteSequence& x0 = v.coords.back();
    if (n == 1) return lp_norm(x0, p);
    RochbergVector upper(std::vector<FiniteSequence>(v.coords.begin(), v.coords.end() - 1), v.theta);
    if (!x0.is_zero()) upper = upper - omega_1n(x0, n - 1, v.theta);
    return rho(upper) + lp_norm(x0, p);
}

double kp_quasinorm(const FiniteSequence& y, const FiniteSequence& x) {
    if (x.is_zero()) return lp_norm(y, 2.0);
    // x log(||x|| / |x|) = -log_ratio(x, 2).
    return lp_norm(y + log_ratio(x, 2.0), 2.0) + lp_norm(x, 2.0);
}

std::vector<double> quasilinearity_constants(std::size_t n, double theta, std::size_t trials,
                                             std::size_t max_support, std::uint64_t seed) {
    check_theta(theta);
    const double p = 1.0 / theta;
    std::vector<double> out(trials);
    parallel_for(trials, [&](std::size_t t) {
        Rng rng = Rng::for_trial(seed, t);
        // Dense pairs: mixing in tiny supports gives a heavy upper tail that 500
        // trials do not resolve.
        auto dense = [&] {
            std::vector<Complex> v(max_support);
            for (auto& e : v) e = rng.complex_in_disc();
            return FiniteSequence::from_dense(v, 1);
        };
        const FiniteSequence x = dense();
        const FiniteSequence y = dense();
        const FiniteSequence s = x + y;
        RochbergVector defect = zero_vector(n, theta);
        if (!s.is_zero()) defect = omega_1n(s, n, theta);
        defect = defect - omega_1n(x, n, theta) - omega_1n(y, n, theta);
        out[t] = rho(defect) / (lp_norm(x, p) + lp_norm(y, p));
    });
    return out;
}

}  // namespace rlab
