#include "rlab/algebra.hpp"

namespace rlab {

boost::multiprecision::cpp_int factorial(unsigned n) {
    boost::multiprecision::cpp_int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Rational exp_product_coefficient(unsigned n) {
    Rational sum = 0;
    for (unsigned i = 0; i <= n; ++i) {
        Rational term(boost::multiprecision::cpp_int(1), factorial(i) * factorial(n - i));
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

}  // namespace rlab
