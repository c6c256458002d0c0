#ifndef RLAB_DUALITY_HPP
#define RLAB_DUALITY_HPP

#include <vector>

#include "rlab/rochberg.hpp"

namespace rlab {

/// Functional array (xi_{n-1}, ..., xi_0), paired with sequences coordinate-wise.
struct DualVector {
    std::vector<FiniteSequence> coords;
    double q = 2.0;

    DualVector() = default;
    DualVector(std::vector<FiniteSequence> c, double q_);

    [[nodiscard]] std::size_t size() const noexcept { return coords.size(); }
    [[nodiscard]] const FiniteSequence& degree(std::size_t j) const { return coords.at(size() - 1 - j); }
};

/// Conjugate exponent of p = 1/theta.
double conjugate_q(double theta);

/// sum_j <xi_j, x_{n-1-j}>.
Complex t_n_pair(const DualVector& xi, const RochbergVector& x);

/// sum_{i+j=n-1} (-1)^i <y_i, x_j>.
Complex signed_self_pair(const RochbergVector& y, const RochbergVector& x);

/// Dual map of the projection onto the lowest n coordinates: pads zeros below.
DualVector dual_iota(const DualVector& xi, std::size_t m);
/// Dual map of the left inclusion: keeps the lowest k coordinates.
DualVector dual_project(const DualVector& eta, std::size_t k);

/// Jet at c of h(z) = x exp(-q (z - c) log(|x| / ||x||_q)), q = 1/(1-c):
/// coeffs[n] = ((-q)^n / n!) x log^n(|x| / ||x||_q).
VectorJet dual_extremal_jet(const FiniteSequence& x, double c, std::size_t order);

/// Closed forms of the two extremals at an arbitrary strip point.
FiniteSequence dual_extremal_at(const FiniteSequence& x, double c, Complex z);
FiniteSequence extremal_at(const FiniteSequence& x, double theta, Complex z);

/// Scalar jet of z -> <h(z), g(z)>; coefficient k is sum_j <h_j, g_{k-j}>.
ScalarJet holo_pair(const VectorJet& h, const VectorJet& g);

/// min(c, 1-c)^{n-1} N^c log^{n-1}(N) / (n-1)!.
double lb_certificate(std::size_t N, std::size_t n, double c);

inline constexpr std::size_t kBoundarySamples = 1024;

/// Sampled boundary sup of the dual extremal: l1 norm on Re z = 0, l_inf on Re z = 1.
double boundary_sup_dual(const FiniteSequence& u, double c, std::size_t samples = kBoundarySamples);
/// Sampled boundary sup of the extremal: l_inf norm on Re z = 0, l1 on Re z = 1.
double boundary_sup_primal(const FiniteSequence& v, double c, std::size_t samples = kBoundarySamples);

struct PairingBound {
    double coefficient;  // |tau_{n-1} <h, g>(c)|
    double bound;        // sup(h) sup(g) / min(c, 1-c)^{n-1}
};

PairingBound pairing_bound(const FiniteSequence& u, const FiniteSequence& v, double c, std::size_t n);

}  // namespace rlab

#endif  // RLAB_DUALITY_HPP
