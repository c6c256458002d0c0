#include <doctest.h>

#include "rlab/algebra.hpp"

using namespace rlab;

TEST_CASE("alternating factorial sum vanishes exactly") {
    CHECK(exp_product_coefficient(0) == 1);
    for (unsigned n = 1; n <= 40; ++n) CHECK(exp_product_coefficient(n) == 0);
}

TEST_CASE("partial sums are not zero") {
    // sanity: the identity is not a triviality of the summation code
    Rational half = 0;
    for (unsigned i = 0; i <= 3; ++i) {
        const Rational t = Rational(1) / (Rational(factorial(i)) * Rational(factorial(6 - i)));
        half += (i % 2 ? -t : t);
    }
    CHECK(half != 0);
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(20) == boost::multiprecision::cpp_int("2432902008176640000"));
}
