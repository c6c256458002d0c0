#ifndef RLAB_ROCHBERG_HPP
#define RLAB_ROCHBERG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "rlab/jet.hpp"

namespace rlab {

/// Array (x_{n-1}, ..., x_0) in descending Taylor degree, at strip point theta.
/// The exponent is p = 1/theta.
struct RochbergVector {
    std::vector<FiniteSequence> coords;
    double theta = 0.5;

    RochbergVector() = default;
    RochbergVector(std::vector<FiniteSequence> c, double theta_);

    [[nodiscard]] std::size_t size() const noexcept { return coords.size(); }
    [[nodiscard]] double p() const noexcept { return 1.0 / theta; }
    /// Coordinate of Taylor degree j (x_j).
    [[nodiscard]] const FiniteSequence& degree(std::size_t j) const { return coords.at(size() - 1 - j); }
    [[nodiscard]] bool is_zero() const;

    friend RochbergVector operator+(const RochbergVector& a, const RochbergVector& b);
    friend RochbergVector operator-(const RochbergVector& a, const RochbergVector& b);
    friend RochbergVector operator*(Complex lambda, const RochbergVector& a);
    friend bool operator==(const RochbergVector&, const RochbergVector&) = default;
};

void check_theta(double theta);

/// The zero array of length n.
RochbergVector zero_vector(std::size_t n, double theta);

/// (0, ..., 0, x) of length n.
RochbergVector bottom_vector(const FiniteSequence& x, std::size_t n, double theta);

/// Left inclusion into length m: (y_{n-1}, ..., y_0, 0, ..., 0). Kernel of the projection.
RochbergVector iota(const RochbergVector& y, std::size_t m);

/// Keeps the k lowest-degree coordinates (x_{k-1}, ..., x_0).
RochbergVector project(const RochbergVector& v, std::size_t k);

/// Jet at theta of the extremal f_x(z) = sgn(x) |x|^{pz} ||x||_p^{1-pz}:
/// coeffs[j] = (p^j / j!) x log^j(|x| / ||x||_p).
VectorJet extremal_jet(const FiniteSequence& x, std::size_t order, double theta);

/// (coeffs[n], ..., coeffs[1]) of the extremal jet.
RochbergVector omega_1n(const FiniteSequence& x, std::size_t n, double theta);

/// Identifier of the conformal divisor used by array_extremal.
inline constexpr std::string_view kDivisorName = "cayley-strip";

/// Jet at theta of the strip-to-disc map (e^{i pi z} - e^{i pi theta}) / (e^{i pi z} - e^{-i pi theta}).
/// It vanishes at theta with derivative pi e^{i pi theta} / (2 sin(pi theta)).
ScalarJet strip_divisor_jet(double theta, std::size_t order);

/// A jet f at theta with tau_{(k,0]} f = v, selected greedily through extremals
/// and division by strip_divisor_jet. Homogeneous of degree one; zero maps to zero.
VectorJet array_extremal(const RochbergVector& v, std::size_t order);

/// tau_{(n+k, k]} of array_extremal(v) for v of length k.
RochbergVector omega_kn(const RochbergVector& v, std::size_t n);

/// rho_1 = ||.||_p, rho_{n+1}(x_n..x_0) = rho_n((x_n..x_1) - Omega^{1,n}(x_0)) + ||x_0||_p.
double rho(const RochbergVector& v);

/// ||y - x log(||x||_2 / |x|)||_2 + ||x||_2.
double kp_quasinorm(const FiniteSequence& y, const FiniteSequence& x);

/// Empirical constants rho_n(Omega(x+y) - Omega(x) - Omega(y)) / (||x||_p + ||y||_p)
/// for seeded random pairs with i.i.d. entries uniform in the unit disc on all of
/// [1, max_support]. Trial t only depends on (seed, t).
std::vector<double> quasilinearity_constants(std::size_t n, double theta, std::size_t trials,
                                             std::size_t max_support, std::uint64_t seed);

}  // namespace rlab

#endif  // RLAB_ROCHBERG_HPP
