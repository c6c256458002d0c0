#ifndef RLAB_JET_HPP
#define RLAB_JET_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "rlab/seqspace.hpp"

namespace rlab {

/// Truncated Taylor expansion at `base`. coeffs[k] = f^{(k)}(base) / k!.
/// V is either Complex (scalar jet) or FiniteSequence (vector-valued jet).
template <class V>
struct BasicJet {
    Complex base{};
    std::vector<V> coeffs;

    BasicJet() : coeffs(1) {}
    BasicJet(Complex b, std::vector<V> c) : base(b), coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("jet: needs at least one coefficient");
    }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs.size() - 1; }
    [[nodiscard]] const V& operator[](std::size_t k) const { return coeffs.at(k); }
    [[nodiscard]] BasicJet truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("jet: cannot extend order by truncation");
        return BasicJet(base, std::vector<V>(coeffs.begin(), coeffs.begin() + order + 1));
    }
};

using ScalarJet = BasicJet<Complex>;
using VectorJet = BasicJet<FiniteSequence>;

namespace detail {

inline double base_tolerance(Complex a, Complex b) {
    return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

inline void require_same_base(Complex a, Complex b, const char* what) {
    if (std::abs(a - b) > base_tolerance(a, b)) {
        throw std::invalid_argument(std::string(what) + ": base point mismatch");
    }
}

inline double magnitude(Complex v) { return std::abs(v); }
inline double magnitude(const FiniteSequence& v) { return lp_norm(v, kInfinity); }

}  // namespace detail

inline ScalarJet constant_jet(Complex base, Complex value, std::size_t order) {
    std::vector<Complex> c(order + 1);
    c[0] = value;
    return {base, std::move(c)};
}

/// The jet of w -> w at `base`.
inline ScalarJet identity_jet(Complex base, std::size_t order) {
    std::vector<Complex> c(order + 1);
    c[0] = base;
    if (order >= 1) c[1] = 1.0;
    return {base, std::move(c)};
}

template <class V>
BasicJet<V> jet_add(const BasicJet<V>& a, const BasicJet<V>& b) {
    detail::require_same_base(a.base, b.base, "jet_add");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<V> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs[k] + b.coeffs[k];
    return {a.base, std::move(c)};
}

template <class V>
BasicJet<V> jet_sub(const BasicJet<V>& a, const BasicJet<V>& b) {
    detail::require_same_base(a.base, b.base, "jet_sub");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<V> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeffs[k] - b.coeffs[k];
    return {a.base, std::move(c)};
}

template <class V>
BasicJet<V> jet_scale(const BasicJet<V>& a, Complex lambda) {
    BasicJet<V> out = a;
    for (auto& c : out.coeffs) c = lambda * c;
    return out;
}

/// Cauchy product truncated to the common order. At most one side may be vector-valued.
template <class A, class B>
auto jet_mul(const BasicJet<A>& a, const BasicJet<B>& b) {
    static_assert(std::is_same_v<A, Complex> || std::is_same_v<B, Complex>,
                  "jet_mul: at least one factor must be scalar-valued");
    using R = std::conditional_t<std::is_same_v<A, Complex>, B, A>;
    detail::require_same_base(a.base, b.base, "jet_mul");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        R acc{};
        for (std::size_t i = 0; i <= k; ++i) acc += a.coeffs[i] * b.coeffs[k - i];
        c[k] = std::move(acc);
    }
    return BasicJet<R>(a.base, std::move(c));
}

/// f o psi. f is expanded at w0 = psi(z); the result is expanded at psi.base.
/// Order of the result is min(f.order, psi.order).
template <class V>
BasicJet<V> jet_compose(const BasicJet<V>& f, const ScalarJet& psi) {
    const Complex w0 = psi.coeffs[0];
    if (std::abs(w0 - f.base) > 1e-10 * std::max({1.0, std::abs(w0), std::abs(f.base)})) {
        throw std::invalid_argument("jet_compose: psi(z) does not match the base of f");
    }
    const std::size_t n = std::min(f.order(), psi.order());
    // d = psi - w0, a jet with zero constant term; power holds d^k.
    std::vector<Complex> d(psi.coeffs.begin(), psi.coeffs.begin() + n + 1);
    d[0] = 0.0;
    std::vector<Complex> power(n + 1);
    power[0] = 1.0;
    std::vector<V> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t m = k; m <= n; ++m) {
            if (power[m] != Complex{}) out[m] += power[m] * f.coeffs[k];
        }
        std::vector<Complex> next(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (power[i] == Complex{}) continue;
            for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += power[i] * d[j];
        }
        power = std::move(next);
    }
    return {psi.base, std::move(out)};
}

/// g with phi * g = f, where phi has a simple zero at the base and f vanishes there.
/// Result order is min(f.order, phi.order) - 1.
template <class V>
BasicJet<V> jet_div_zero(const BasicJet<V>& f, const ScalarJet& phi) {
    detail::require_same_base(f.base, phi.base, "jet_div_zero");
    const std::size_t n = std::min(f.order(), phi.order());
    if (n < 1) throw std::invalid_argument("jet_div_zero: order must be at least 1");
    double scale = 0.0;
    for (const auto& c : phi.coeffs) scale = std::max(scale, detail::magnitude(c));
    if (std::abs(phi.coeffs[0]) > 1e-12 * std::max(1.0, scale)) {
        throw std::domain_error("jet_div_zero: divisor does not vanish at the base");
    }
    if (phi.coeffs[1] == Complex{}) throw std::domain_error("jet_div_zero: divisor has a multiple zero");
    double fscale = 0.0;
    for (const auto& c : f.coeffs) fscale = std::max(fscale, detail::magnitude(c));
    if (detail::magnitude(f.coeffs[0]) > 1e-12 * std::max(1.0, fscale)) {
        throw std::domain_error("jet_div_zero: dividend does not vanish at the base");
    }
    const Complex inv = 1.0 / phi.coeffs[1];
    std::vector<V> g(n);
    for (std::size_t k = 0; k < n; ++k) {
        V acc = f.coeffs[k + 1];
        for (std::size_t i = 1; i <= k; ++i) acc -= phi.coeffs[i + 1] * g[k - i];
        g[k] = inv * acc;
    }
    return {f.base, std::move(g)};
}

/// (coeffs[hi-1], ..., coeffs[lo]) in descending degree.
template <class V>
std::vector<V> tau_extract(const BasicJet<V>& f, std::size_t hi, std::size_t lo) {
    if (hi <= lo || hi > f.order() + 1) throw std::out_of_range("tau_extract: range outside stored order");
    std::vector<V> out;
    out.reserve(hi - lo);
    for (std::size_t k = hi; k-- > lo;) out.push_back(f.coeffs[k]);
    return out;
}

template <class V>
BasicJet<V> jet_derivative(const BasicJet<V>& f) {
    if (f.order() == 0) throw std::invalid_argument("jet_derivative: order 0 jet");
    std::vector<V> c(f.order());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = Complex(double(k + 1)) * f.coeffs[k + 1];
    return {f.base, std::move(c)};
}

/// Polynomial evaluation of the truncated series at w.
template <class V>
V jet_eval(const BasicJet<V>& f, Complex w) {
    const Complex h = w - f.base;
    V acc{};
    for (std::size_t k = f.order() + 1; k-- > 0;) acc = h * acc + f.coeffs[k];
    return acc;
}

ScalarJet jet_exp(const ScalarJet& f);
ScalarJet jet_log(const ScalarJet& f);
/// Principal-branch power f^alpha.
ScalarJet jet_pow(const ScalarJet& f, Complex alpha);

/// Coordinate-wise power of a vector jet. Coordinates whose jet is identically
/// zero stay zero (0^w := 0); a vanishing constant term with nonzero higher
/// terms is a domain error.
VectorJet jet_pow(const VectorJet& f, Complex alpha);
/// Coordinate-wise logarithm over the support of f.
VectorJet jet_log(const VectorJet& f);

/// Scalar jet of coordinate i of a vector jet.
ScalarJet jet_coordinate(const VectorJet& f, Index i);

/// Inverse series: for psi at z with psi'(z) != 0 returns the jet at psi(z) of
/// the local inverse, whose value there is z.
ScalarJet jet_revert(const ScalarJet& psi);

}  // namespace rlab

#endif  // RLAB_JET_HPP
