#include <doctest.h>

#include <cmath>

#include "rlab/seqspace.hpp"

using namespace rlab;

TEST_CASE("canonical form drops zeros and sums duplicates") {
    const auto x = FiniteSequence::from_entries({{3, 1.0}, {1, 2.0}, {3, -1.0}, {5, 0.0}});
    CHECK(x.support_size() == 1);
    CHECK(x[1] == Complex(2.0));
    CHECK(x[3] == Complex(0.0));
    CHECK(x.max_index() == 1);
    CHECK(FiniteSequence{}.max_index() == 0);
    CHECK((x - x).is_zero());
    CHECK(FiniteSequence{{2, 1.0}, {1, 1.0}} == FiniteSequence{{1, 1.0}, {2, 1.0}});
}

TEST_CASE("dense constructor offsets indices") {
    const std::vector<Complex> v{1.0, 0.0, Complex(0, 2)};
    const auto x = FiniteSequence::from_dense(v, 4);
    CHECK(x.support_size() == 2);
    CHECK(x[4] == Complex(1.0));
    CHECK(x[6] == Complex(0, 2));
}

TEST_CASE("lp norms against hand values") {
    const FiniteSequence x{{1, 3.0}, {2, Complex(0, -4)}};
    CHECK(lp_norm(x, 2.0) == doctest::Approx(5.0));
    CHECK(lp_norm(x, 1.0) == doctest::Approx(7.0));
    CHECK(lp_norm(x, kInfinity) == doctest::Approx(4.0));
    CHECK(lp_norm(x, 3.0) == doctest::Approx(std::cbrt(91.0)));
    CHECK(lp_norm(FiniteSequence{}, 2.0) == 0.0);
    CHECK_THROWS_AS((void)lp_norm(x, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)lp_norm(x, -1.0), std::invalid_argument);
}

TEST_CASE("norm of the indicator is exact") {
    for (Index n : {1, 4, 16, 64, 256, 1024}) {
        CHECK(lp_norm(make_sn(n), 2.0) == std::sqrt(double(n)));
        CHECK(make_sn(n).support_size() == n);
    }
}

TEST_CASE("log ratio") {
    // every entry of s_N carries log(1/sqrt N)
    const auto l = log_ratio(make_sn(16), 2.0);
    for (Index i = 1; i <= 16; ++i) CHECK(l[i].real() == doctest::Approx(-0.5 * std::log(16.0)));
    const FiniteSequence x{{1, 3.0}, {2, -4.0}};
    const auto lx = log_ratio(x, 2.0);
    CHECK(lx[1].real() == doctest::Approx(3.0 * std::log(0.6)));
    CHECK(lx[2].real() == doctest::Approx(-4.0 * std::log(0.8)));
    CHECK_THROWS_AS((void)log_ratio(FiniteSequence{}, 2.0), std::domain_error);
}

TEST_CASE("pairing, distances, restriction, shifts") {
    const FiniteSequence a{{1, Complex(0, 1)}, {2, 2.0}};
    const FiniteSequence b{{1, Complex(0, 1)}, {3, 5.0}};
    CHECK(pairing(a, b) == Complex(-1.0));  // bilinear, no conjugation
    CHECK(sup_distance(a, b) == doctest::Approx(5.0));
    CHECK(restrict_to(make_sn(10), 3, 5) == FiniteSequence{{3, 1.0}, {4, 1.0}, {5, 1.0}});
    CHECK(shift_support(a, 2) == FiniteSequence{{3, Complex(0, 1)}, {4, 2.0}});
    CHECK(FiniteSequence::unit(7)[7] == Complex(1.0));
}

TEST_CASE("map prunes zero images") {
    const auto x = make_sn(5).map([](Index i, Complex v) { return i % 2 ? v : Complex{}; });
    CHECK(x.support_size() == 3);
}
