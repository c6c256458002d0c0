#include <doctest.h>

#include <cmath>

#include "rlab/reparam.hpp"
#include "rlab/sampling.hpp"

using namespace rlab;

namespace {

// [z^m] (psi - psi_0)^k through partial Bell polynomials: k!/m! B_{m,k}(1! psi_1, 2! psi_2, ...).
Complex bell_entry(const ScalarJet& psi, std::size_t m, std::size_t k) {
    std::vector<double> fact(m + 2, 1.0);
    for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * double(i);
    auto binom = [&](std::size_t a, std::size_t b) { return fact[a] / (fact[b] * fact[a - b]); };
    std::vector<std::vector<Complex>> B(m + 1, std::vector<Complex>(m + 1));
    B[0][0] = 1.0;
    for (std::size_t r = 1; r <= m; ++r) {
        for (std::size_t s = 1; s <= r; ++s) {
            Complex acc{};
            for (std::size_t i = 1; i <= r - s + 1; ++i) acc += binom(r - 1, i - 1) * fact[i] * psi.coeffs[i] * B[r - i][s - 1];
            B[r][s] = acc;
        }
    }
    return fact[k] / fact[m] * B[m][k];
}

ScalarJet random_psi(Rng& rng, std::size_t order, Complex value) {
    std::vector<Complex> c(order + 1);
    for (auto& v : c) v = rng.complex_in_disc();
    c[0] = value;
    c[1] += 1.5;
    return {rng.complex_in_disc(), c};
}

RochbergVector random_vector(Rng& rng, std::size_t n) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.sequence(1, 10, 10));
    return {c, 0.5};
}

}  // namespace

TEST_CASE("FdB matrix entries are Bell polynomial coefficients") {
    Rng rng(51);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.uniform_int(0, 6);
        const ScalarJet psi = random_psi(rng, n - 1 + rng.uniform_int(0, 2), rng.complex_in_disc());
        const TriangularMatrix M = fdb_matrix(psi, n);
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex expect = k > m ? Complex{} : bell_entry(psi, m, k);
                CHECK(std::abs(M.by_degree(m, k) - expect) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS((void)fdb_matrix(ScalarJet(0.0, {0.0, 1.0}), 3), std::invalid_argument);
}

TEST_CASE("FdB matrices are multiplicative and invert through reversion") {
    Rng rng(52);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.uniform_int(0, 5);
        const ScalarJet inner = random_psi(rng, n, 0.0);
        const ScalarJet outer = random_psi(rng, n, rng.complex_in_disc());
        ScalarJet outer_at(inner.coeffs[0], outer.coeffs);
        const TriangularMatrix lhs = fdb_matrix(jet_compose(outer_at, inner), n);
        const TriangularMatrix rhs = fdb_matrix(inner, n) * fdb_matrix(outer_at, n);
        CHECK(lhs.max_abs_diff(rhs) < 1e-11);
        const TriangularMatrix inv = fdb_matrix(inner, n).inverse();
        CHECK((inv * fdb_matrix(inner, n)).max_abs_diff(TriangularMatrix::identity(n)) < 1e-11);
        CHECK(inv.max_abs_diff(fdb_matrix(jet_revert(inner), n)) < 1e-9);
    }
}

TEST_CASE("Leibniz matrix is the convolution") {
    const ScalarJet L(0.0, {2.0, 3.0, 5.0});
    const TriangularMatrix M = leibniz_matrix(L, 3);
    CHECK(M.by_degree(2, 0) == Complex(5.0));
    CHECK(M.by_degree(2, 1) == Complex(3.0));
    CHECK(M.by_degree(1, 1) == Complex(2.0));
    CHECK(M.by_degree(0, 2) == Complex(0.0));
    const VectorJet f(0.0, {FiniteSequence{{1, 1.0}}, FiniteSequence{{2, 1.0}}, FiniteSequence{{1, 4.0}}});
    const auto lhs = M.apply(tau_extract(f, 3, 0));
    const auto rhs = tau_extract(jet_mul(L, f), 3, 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == rhs[i]);
}

TEST_CASE("binomial grid") {
    const RochbergVector x({FiniteSequence{{1, 1.0}}, FiniteSequence{{1, 2.0}}, FiniteSequence{{1, 3.0}},
                            FiniteSequence{{1, 4.0}}},
                           0.5);  // x_3 .. x_0 = 1, 2, 3, 4
    const BinomialArray e = e_mn(x, 2, 3);
    CHECK(e.rows == 3);
    CHECK(e.cols == 2);
    CHECK(e.at(0, 0)[1] == Complex(4.0));
    CHECK(e.at(1, 1)[1] == Complex(2.0 * 2.0));  // C(2,1) x_2
    CHECK(e.at(2, 1)[1] == Complex(3.0 * 1.0));  // C(3,2) x_3
    CHECK(grid_row(e, 0, 0.5) == project(x, 2));
    CHECK(grid_column(e, 0, 0.5) == project(x, 3));
    CHECK_THROWS_AS((void)e_mn(x, 2, 2), std::invalid_argument);
}

TEST_CASE("pushout maps are mutually inverse") {
    Rng rng(53);
    for (PushoutShape shape : {PushoutShape::Fm2, PushoutShape::F2m}) {
        for (std::size_t m = 2; m <= 5; ++m) {
            const Pushout po(shape, m);
            const RochbergVector ybar = random_vector(rng, m - 1);
            const RochbergVector z = random_vector(rng, m + 1);
            const auto [y2, z2] = po.V(u_iso(po, ybar, z));
            CHECK(sup_distance(y2.coords[0], ybar.coords[0]) < 1e-14);
            for (std::size_t i = 0; i <= m; ++i) CHECK(sup_distance(z2.coords[i], z.coords[i]) < 1e-14);
            CHECK(po.Q(po.E(z)) == project(z, m));
        }
    }
}

TEST_CASE("diagram suite commutes") {
    for (const auto& name : kDiagramNames) {
        for (const auto& r : diagram_check(name, 30, 4, 1)) {
            INFO(r.square);
            CHECK(r.max_residual <= 1e-12);
        }
    }
    CHECK_THROWS_AS((void)diagram_check("nope", 1, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)diagram_check("poz", 1, 1, 0), std::invalid_argument);
}

TEST_CASE("sigma embedding") {
    const RochbergVector s = sigma_embed(FiniteSequence{{3, 2.0}}, 3, 0.5);
    CHECK(s.size() == 4);
    CHECK(s.degree(2) == FiniteSequence{{3, 2.0}});
    CHECK(s.degree(0).is_zero());
}

TEST_CASE("differentials are intertwined by reparametrization") {
    Rng rng(54);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.uniform_int(0, 2);
        const std::size_t k = 1 + rng.uniform_int(0, 2);
        const ScalarJet psi = random_psi(rng, n + k - 1, 0.5);
        CHECK(intertwining_residual(random_vector(rng, n), k, psi) < 1e-9);
    }
    CHECK_THROWS_AS((void)intertwining_residual(random_vector(rng, 1), 1, ScalarJet(0.0, {0.3, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("self-extension report") {
    Rng rng(55);
    const RochbergVector x = random_vector(rng, 3);
    const SelfExtensionReport r = self_extension_report(x);
    CHECK(r.omega_nn.size() == 3);
    CHECK(r.phi_11.size() == 3);
    CHECK(r.phi_11.coords[1] == Complex(2.0) * x.degree(2));
    CHECK(r.phi_11.coords[2] == x.degree(1));
    CHECK(r.omega_nn == omega_kn(x, 3));
}

TEST_CASE("stroke components undo the accumulated array") {
    Rng rng(56);
    std::vector<VectorJet> h;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<FiniteSequence> c;
        for (std::size_t j = 0; j <= 8; ++j) c.push_back(rng.sequence(1, 6, 6));
        h.emplace_back(Complex(0.5), c);
    }
    const auto g = stroke_components(and_also_array(h));
    REQUIRE(g.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j <= g[i].order(); ++j) CHECK(sup_distance(g[i].coeffs[j], h[i].coeffs[j]) < 1e-12);
    }
}
