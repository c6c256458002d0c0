#include <doctest.h>

#include <cmath>

#include "rlab/sampling.hpp"
#include "rlab/type2.hpp"

using namespace rlab;

namespace {

// Brute-force sign average, written independently of the chunked enumeration.
double brute_ratio(const std::vector<RochbergVector>& xs) {
    const std::size_t n = xs.size();
    double num = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        RochbergVector s = zero_vector(xs[0].size(), xs[0].theta);
        for (std::size_t i = 0; i < n; ++i) s = s + ((mask >> i) & 1u ? Complex(-1.0) : Complex(1.0)) * xs[i];
        num += std::pow(rho(s), 2.0);
    }
    double den = 0.0;
    for (const auto& x : xs) den += std::pow(rho(x), 2.0);
    return std::sqrt(num / double(1u << n) / den);
}

}  // namespace

TEST_CASE("Hilbert tuples have ratio one") {
    Rng rng(21);
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<RochbergVector> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(RochbergVector({rng.sequence(1, 16, 16)}, 0.5));
        CHECK(std::abs(avg_sign_ratio(xs) - 1.0) <= 1e-9);
    }
}

TEST_CASE("sign average matches brute force on two-term arrays") {
    Rng rng(22);
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<RochbergVector> xs;
        for (std::size_t i = 0; i < n; ++i) {
            xs.push_back(RochbergVector({rng.sequence(1, 8, 8), rng.sequence(1, 8, 8)}, 0.5));
        }
        CHECK(avg_sign_ratio(xs) == doctest::Approx(brute_ratio(xs)).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)avg_sign_ratio({}), std::invalid_argument);
}

TEST_CASE("witnessed lower bound for two-term arrays is log n + 1") {
    // n disjoint unit vectors (0, e_i): every signed sum is (0, +-s_n).
    double previous = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const Type2Report r = an_lower(1, n, 64);
        CHECK(r.lower_bound == doctest::Approx(std::log(double(n)) + 1.0).epsilon(1e-13));
        CHECK(r.lower_bound >= previous);
        CHECK(r.witness.size() <= n);
        previous = r.lower_bound;
    }
}

TEST_CASE("the Hilbert level is flat") {
    for (std::size_t n = 2; n <= 8; ++n) CHECK(an_lower(0, n, 64).lower_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("preconditions and the recursion bound") {
    CHECK_THROWS_AS((void)an_lower(5, 4, 64), std::invalid_argument);
    CHECK_THROWS_AS((void)an_lower(1, 8, 4), std::invalid_argument);
    CHECK(recursion_upper(0, 1.5, 3.0, 10) == 1.5);
    CHECK(recursion_upper(1, 1.0, 0.5, 4) == doctest::Approx(1.0 + 2.0 * 0.5 * 4.0));
    CHECK(recursion_upper(2, 1.0, 0.5, 3) == doctest::Approx(1.0 + 2.0 * 0.5 * 6.0));
}
