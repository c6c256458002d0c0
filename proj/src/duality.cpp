#include "rlab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlab {

DualVector::DualVector(std::vector<FiniteSequence> c, double q_) : coords(std::move(c)), q(q_) {
    if (coords.empty()) throw std::invalid_argument("DualVector: needs at least one coordinate");
    if (!(q > 1.0)) throw std::invalid_argument("DualVector: q must exceed 1");
}

double conjugate_q(double theta) {
    check_theta(theta);
    return 1.0 / (1.0 - theta);
}

Complex t_n_pair(const DualVector& xi, const RochbergVector& x) {
    const std::size_t n = x.size();
    if (xi.size() != n) throw std::invalid_argument("t_n_pair: length mismatch");
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += pairing(xi.degree(j), x.degree(n - 1 - j));
    return s;
}

Complex signed_self_pair(const RochbergVector& y, const RochbergVector& x) {
    const std::size_t n = x.size();
    if (y.size() != n) throw std::invalid_argument("signed_self_pair: length mismatch");
    Complex s{};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex term = pairing(y.degree(i), x.degree(n - 1 - i));
        s += (i % 2 == 0) ? term : -term;
    }
    return s;
}

DualVector dual_iota(const DualVector& xi, std::size_t m) {
    if (m < xi.size()) throw std::invalid_argument("dual_iota: target shorter than source");
    DualVector out = xi;
    out.coords.resize(m);
    return out;
}

DualVector dual_project(const DualVector& eta, std::size_t k) {
    if (k < 1 || k > eta.size()) throw std::invalid_argument("dual_project: bad target length");
    return {std::vector<FiniteSequence>(eta.coords.end() - static_cast<std::ptrdiff_t>(k), eta.coords.end()), eta.q};
}

VectorJet dual_extremal_jet(const FiniteSequence& x, double c, std::size_t order) {
    const double q = conjugate_q(c);
    if (x.is_zero()) throw std::domain_error("dual_extremal_jet: zero input");
    const double norm = lp_norm(x, q);
    std::vector<std::vector<FiniteSequence::Entry>> parts(order + 1);
    for (const auto& [i, value] : x.entries()) {
        const double ql = -q * std::log(std::abs(value) / norm);
        Complex term = value;
        parts[0].emplace_back(i, term);
        for (std::size_t j = 1; j <= order; ++j) {
            term *= ql / double(j);
            parts[j].emplace_back(i, term);
        }
    }
    std::vector<FiniteSequence> coeffs;
    for (auto& part : parts) coeffs.push_back(FiniteSequence::from_entries(std::move(part)));
    return {Complex(c), std::move(coeffs)};
}

FiniteSequence dual_extremal_at(const FiniteSequence& x, double c, Complex z) {
    const double q = conjugate_q(c);
    const double norm = lp_norm(x, q);
    return x.map([&](Index, Complex v) { return v * std::exp(-q * (z - c) * std::log(std::abs(v) / norm)); });
}

FiniteSequence extremal_at(const FiniteSequence& x, double theta, Complex z) {
    check_theta(theta);
    const double p = 1.0 / theta;
    const double norm = lp_norm(x, p);
    return x.map([&](Index, Complex v) { return v * std::exp(p * (z - theta) * std::log(std::abs(v) / norm)); });
}

ScalarJet holo_pair(const VectorJet& h, const VectorJet& g) {
    detail::require_same_base(h.base, g.base, "holo_pair");
    const std::size_t n = std::min(h.order(), g.order());
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t j = 0; j <= k; ++j) c[k] += pairing(h.coeffs[j], g.coeffs[k - j]);
    }
    return {h.base, std::move(c)};
}

double lb_certificate(std::size_t N, std::size_t n, double c) {
    check_theta(c);
    if (N < 1 || n < 1) throw std::invalid_argument("lb_certificate: N and n must be positive");
    const double logn = std::log(double(N));
    double v = std::pow(double(N), c);
    for (std::size_t j = 1; j < n; ++j) v *= std::min(c, 1.0 - c) * logn / double(j);
    return v;
}

namespace {

constexpr double kSampleHeight = 8.0;

template <class Eval>
double boundary_sup(Eval&& eval, double left_p, double right_p, std::size_t samples) {
    double s = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = samples == 1 ? 0.0 : -kSampleHeight + 2.0 * kSampleHeight * double(k) / double(samples - 1);
        s = std::max(s, lp_norm(eval(Complex(0.0, t)), left_p));
        s = std::max(s, lp_norm(eval(Complex(1.0, t)), right_p));
    }
    return s;
}

}  // namespace

double boundary_sup_dual(const FiniteSequence& u, double c, std::size_t samples) {
    return boundary_sup([&](Complex z) { return dual_extremal_at(u, c, z); }, 1.0, kInfinity, samples);
}

double boundary_sup_primal(const FiniteSequence& v, double c, std::size_t samples) {
    return boundary_sup([&](Complex z) { return extremal_at(v, c, z); }, kInfinity, 1.0, samples);
}

PairingBound pairing_bound(const FiniteSequence& u, const FiniteSequence& v, double c, std::size_t n) {
    if (n < 1) throw std::invalid_argument("pairing_bound: n must be positive");
    const VectorJet h = dual_extremal_jet(u, c, n - 1);
    const VectorJet g = extremal_jet(v, n - 1, c);
    const ScalarJet f = holo_pair(h, g);
    const double r = std::min(c, 1.0 - c);
    return {std::abs(f.coeffs[n - 1]),
            boundary_sup_dual(u, c) * boundary_sup_primal(v, c) / std::pow(r, double(n - 1))};
}

}  // namespace rlab
