#ifndef RLAB_ALGEBRA_HPP
#define RLAB_ALGEBRA_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace rlab {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient of t^n in e^{-t} e^{t}, i.e. sum_{i=0}^{n} (-1)^i / (i! (n-i)!),
/// in exact rational arithmetic. Vanishes for every n >= 1.
Rational exp_product_coefficient(unsigned n);

/// n! as an exact integer.
boost::multiprecision::cpp_int factorial(unsigned n);

}  // namespace rlab

#endif  // RLAB_ALGEBRA_HPP
