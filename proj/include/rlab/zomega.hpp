#ifndef RLAB_ZOMEGA_HPP
#define RLAB_ZOMEGA_HPP

#include <vector>

#include "rlab/rochberg.hpp"

namespace rlab {

/// omega(z) = 1/2 + r z^k on the disc; p(z) = 1 / Re omega(z).
struct OmegaProfile {
    double r = 0.25;
    std::size_t k = 1;

    OmegaProfile(double r_, std::size_t k_);
    [[nodiscard]] Complex omega(Complex z) const;
    [[nodiscard]] static constexpr double omega0() { return 0.5; }
};

/// Exponent on the boundary point e^{i theta}: 2 / (1 + 2 r cos(k theta)).
double p_profile(const OmegaProfile& prof, double theta);

/// Checks f >= 0 and ||f||_2 = 1 (the exponent at the centre is 2).
void require_normalized(const FiniteSequence& f);

/// F(z) = f^{omega(z)/omega0} entry-wise, with 0^w = 0.
FiniteSequence extremal_F(const OmegaProfile& prof, const FiniteSequence& f, Complex z);

/// max over `samples` equispaced boundary points of | ||F(e^{i t})||_{p(t)} - 1 |.
double boundary_normalization_error(const OmegaProfile& prof, const FiniteSequence& f, std::size_t samples);

/// tau_j F(0) by exponentiating the jet of a(z) log f with a(z) = 2 r z^k.
FiniteSequence differential_tau(const OmegaProfile& prof, const FiniteSequence& f, std::size_t j);

/// Closed form: f (2r log f)^{j/k} / (j/k)! when k divides j, zero otherwise.
FiniteSequence differential_tau_closed(const OmegaProfile& prof, const FiniteSequence& f, std::size_t j);

/// Differential of order n at the centre for arbitrary x: sgn(x) ||x||_2 (tau_n, ..., tau_1) of the
/// extremal of |x| / ||x||_2, in descending order.
RochbergVector zomega_omega_1n(const OmegaProfile& prof, const FiniteSequence& x, std::size_t n);

/// Recursive quasinorm of the Rochberg spaces of the family at the centre.
double zomega_rho(const OmegaProfile& prof, const RochbergVector& v);

/// ((||x_{n-1}|| + ||x_{n-2}||) + ...) + ||x_0||, l2 norms.
double direct_sum_norm(const RochbergVector& v);

}  // namespace rlab

#endif  // RLAB_ZOMEGA_HPP
