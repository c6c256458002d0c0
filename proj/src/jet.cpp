#include "rlab/jet.hpp"

#include <map>
#include <set>

namespace rlab {

ScalarJet jet_exp(const ScalarJet& f) {
    const std::size_t n = f.order();
    std::vector<Complex> g(n + 1);
    g[0] = std::exp(f.coeffs[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc{};
        for (std::size_t l = 1; l <= m; ++l) acc += double(l) * f.coeffs[l] * g[m - l];
        g[m] = acc / double(m);
    }
    return {f.base, std::move(g)};
}

ScalarJet jet_log(const ScalarJet& f) {
    const Complex f0 = f.coeffs[0];
    if (f0 == Complex{}) throw std::domain_error("jet_log: vanishing constant term");
    const std::size_t n = f.order();
    std::vector<Complex> g(n + 1);
    g[0] = std::log(f0);
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = double(m) * f.coeffs[m];
        for (std::size_t l = 1; l < m; ++l) acc -= double(l) * g[l] * f.coeffs[m - l];
        g[m] = acc / (double(m) * f0);
    }
    return {f.base, std::move(g)};
}

ScalarJet jet_pow(const ScalarJet& f, Complex alpha) {
    const Complex f0 = f.coeffs[0];
    if (f0 == Complex{}) throw std::domain_error("jet_pow: vanishing constant term");
    const std::size_t n = f.order();
    std::vector<Complex> g(n + 1);
    g[0] = std::exp(alpha * std::log(f0));
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += (alpha * double(j) - double(k - j)) * f.coeffs[j] * g[k - j];
        }
        g[k] = acc / (double(k) * f0);
    }
    return {f.base, std::move(g)};
}

ScalarJet jet_coordinate(const VectorJet& f, Index i) {
    std::vector<Complex> c(f.order() + 1);
    for (std::size_t k = 0; k <= f.order(); ++k) c[k] = f.coeffs[k][i];
    return {f.base, std::move(c)};
}

namespace {

template <class Fn>
VectorJet lift(const VectorJet& f, Fn&& fn) {
    std::set<Index> support;
    for (const auto& c : f.coeffs) {
        for (const auto& e : c.entries()) support.insert(e.first);
    }
    std::vector<std::vector<FiniteSequence::Entry>> parts(f.order() + 1);
    for (Index i : support) {
        const ScalarJet s = jet_coordinate(f, i);
        bool all_zero = true;
        for (const auto& c : s.coeffs) all_zero = all_zero && c == Complex{};
        if (all_zero) continue;
        const ScalarJet r = fn(s);
        for (std::size_t k = 0; k <= f.order(); ++k) parts[k].emplace_back(i, r.coeffs[k]);
    }
    std::vector<FiniteSequence> coeffs;
    coeffs.reserve(parts.size());
    for (auto& p : parts) coeffs.push_back(FiniteSequence::from_entries(std::move(p)));
    return {f.base, std::move(coeffs)};
}

}  // namespace

VectorJet jet_pow(const VectorJet& f, Complex alpha) {
    return lift(f, [alpha](const ScalarJet& s) { return jet_pow(s, alpha); });
}

VectorJet jet_log(const VectorJet& f) {
    return lift(f, [](const ScalarJet& s) { return jet_log(s); });
}

ScalarJet jet_revert(const ScalarJet& psi) {
    const std::size_t n = psi.order();
    if (n >= 1 && psi.coeffs[1] == Complex{}) throw std::domain_error("jet_revert: psi'(z) vanishes");
    // Solve d(h(t)) = t for h with h(0) = 0, where d = psi - psi(z).
    std::vector<Complex> d(psi.coeffs);
    d[0] = 0.0;
    std::vector<Complex> h(n + 1);
    if (n >= 1) h[1] = 1.0 / d[1];
    for (std::size_t m = 2; m <= n; ++m) {
        // Coefficient m of sum_k d_k h^k with h_m still unset; only d_1 h_m is missing.
        std::vector<Complex> power(n + 1);
        power[0] = 1.0;
        Complex coeff{};
        for (std::size_t k = 1; k <= m; ++k) {
            std::vector<Complex> next(n + 1);
            for (std::size_t i = 0; i <= m; ++i) {
                if (power[i] == Complex{}) continue;
                for (std::size_t j = 1; i + j <= m; ++j) next[i + j] += power[i] * h[j];
            }
            power = std::move(next);
            coeff += d[k] * power[m];
        }
        h[m] = -coeff / d[1];
    }
    h[0] = psi.base;
    return {psi.coeffs[0], std::move(h)};
}

}  // namespace rlab
