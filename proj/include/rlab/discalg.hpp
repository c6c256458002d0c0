#ifndef RLAB_DISCALG_HPP
#define RLAB_DISCALG_HPP

#include <cstddef>
#include <vector>

#include "rlab/jet.hpp"

namespace rlab {

/// Disc automorphism z -> lambda (z - a) / (conj(a) z - 1).
struct MobiusMap {
    Complex lambda{1.0};
    Complex a{};

    MobiusMap() = default;
    MobiusMap(Complex lambda_, Complex a_);

    [[nodiscard]] Complex operator()(Complex z) const;
    [[nodiscard]] Complex inverse(Complex w) const;
};

/// outer o inner, again a disc automorphism.
MobiusMap mobius_compose(const MobiusMap& outer, const MobiusMap& inner);

/// Taylor jet of the map at `base`, by formal division of the numerator by the denominator.
ScalarJet mobius_jet(const MobiusMap& m, Complex base, std::size_t order);

/// Taylor coefficients at 0 up to `order`.
std::vector<Complex> mobius_coeffs(const MobiusMap& m, std::size_t order);

/// Quotient of two power series truncated at `order`; den[0] must be nonzero.
std::vector<Complex> series_divide(const std::vector<Complex>& num, const std::vector<Complex>& den,
                                   std::size_t order);

/// sup_{n >= 1} |c_n| n^alpha. The constant term is deliberately left out.
double decay_seminorm(const std::vector<Complex>& c, double alpha);

/// sum_n |c_n|.
double wiener_norm(const std::vector<Complex>& c);

inline constexpr std::size_t kDefaultAlgebraOrder = 256;

/// Derivative of the strip-to-disc map (e^z - 1)/(e^z + 1), i.e. 2w/(w+1)^2 with w = e^z.
Complex strip_derivative(Complex z);

struct BlowupSample {
    double y;
    double modulus;  // |phi'(iy)|
};

/// |phi'(iy)| along the imaginary axis, y_k = pole_y (1 - 2^{-k}) for k < samples.
/// phi'(iy) = 1/(1 + cos y), so the poles sit at y = +-pi; near pi/2 the value is 1.
std::vector<BlowupSample> strip_derivative_blowup(std::size_t samples, double pole_y);
std::vector<BlowupSample> strip_derivative_blowup(std::size_t samples);

}  // namespace rlab

#endif  // RLAB_DISCALG_HPP
