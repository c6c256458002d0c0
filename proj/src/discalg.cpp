#include "rlab/discalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rlab {

MobiusMap::MobiusMap(Complex lambda_, Complex a_) : lambda(lambda_), a(a_) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw std::invalid_argument("MobiusMap: |lambda| must be 1");
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("MobiusMap: |a| must be below 1");
}

Complex MobiusMap::operator()(Complex z) const {
    return lambda * (z - a) / (std::conj(a) * z - 1.0);
}

Complex MobiusMap::inverse(Complex w) const {
    return (w - lambda * a) / (w * std::conj(a) - lambda);
}

MobiusMap mobius_compose(const MobiusMap& outer, const MobiusMap& inner) {
    const Complex a = inner.inverse(outer.a);
    // Any z0 != a determines lambda; stay away from the zero for accuracy.
    const Complex z0 = std::abs(a) > 0.25 ? Complex{} : Complex(0.5);
    const Complex g = outer(inner(z0));
    Complex lambda = g * (std::conj(a) * z0 - 1.0) / (z0 - a);
    lambda /= std::abs(lambda);
    return {lambda, a};
}

std::vector<Complex> series_divide(const std::vector<Complex>& num, const std::vector<Complex>& den,
                                   std::size_t order) {
    if (den.empty() || den[0] == Complex{}) throw std::domain_error("series_divide: zero constant term");
    std::vector<Complex> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Complex acc = k < num.size() ? num[k] : Complex{};
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= den[i] * c[k - i];
        c[k] = acc / den[0];
    }
    return c;
}

ScalarJet mobius_jet(const MobiusMap& m, Complex base, std::size_t order) {
    const Complex abar = std::conj(m.a);
    const std::vector<Complex> num{m.lambda * (base - m.a), m.lambda};
    const std::vector<Complex> den{abar * base - 1.0, abar};
    return {base, series_divide(num, den, order)};
}

std::vector<Complex> mobius_coeffs(const MobiusMap& m, std::size_t order) {
    return mobius_jet(m, Complex{}, order).coeffs;
}

double decay_seminorm(const std::vector<Complex>& c, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("decay_seminorm: alpha must be positive");
    double s = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) s = std::max(s, std::abs(c[n]) * std::pow(double(n), alpha));
    return s;
}

double wiener_norm(const std::vector<Complex>& c) {
    double s = 0.0;
    for (const auto& v : c) s += std::abs(v);
    return s;
}

Complex strip_derivative(Complex z) {
    const Complex w = std::exp(z);
    return 2.0 * w / ((w + 1.0) * (w + 1.0));
}

std::vector<BlowupSample> strip_derivative_blowup(std::size_t samples, double pole_y) {
    if (samples < 1) throw std::invalid_argument("strip_derivative_blowup: need at least one sample");
    std::vector<BlowupSample> out;
    out.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double y = pole_y * (1.0 - std::ldexp(1.0, -static_cast<int>(k)));
        out.push_back({y, std::abs(strip_derivative(Complex(0.0, y)))});
    }
    return out;
}

std::vector<BlowupSample> strip_derivative_blowup(std::size_t samples) {
    return strip_derivative_blowup(samples, std::numbers::pi);
}

}  // namespace rlab
