#ifndef RLAB_TYPE2_HPP
#define RLAB_TYPE2_HPP

#include <optional>
#include <vector>

#include "rlab/rochberg.hpp"

namespace rlab {

struct Type2Report {
    std::size_t m = 0;  // the space is Z_{m+1}
    std::size_t n = 0;  // tuple length
    double lower_bound = 0.0;
    std::size_t block_size = 0;  // support size of each witness atom
    std::vector<RochbergVector> witness;
    std::optional<double> recursion_upper;
};

inline constexpr std::size_t kMaxSignTuple = 16;

/// sqrt( Average_{signs} rho(sum +-x_i)^2 / sum rho(x_i)^2 ) by full 2^n enumeration.
double avg_sign_ratio(const std::vector<RochbergVector>& tuple);

/// Best ratio over tuples of up to n disjoint copies of (0, ..., 0, s_b) in Z_{m+1}
/// at theta, for b a power of two with n b <= N. Shorter tuples count as
/// zero-padded n-tuples, so the result is non-decreasing in n.
Type2Report an_lower(std::size_t m, std::size_t n, std::size_t N, double theta = 0.5);

/// a2 + (1 + a2) C sum_{i=1}^{K} i^{m-1}; for m = 0 the bound is a2.
double recursion_upper(std::size_t m, double a2, double C, std::size_t K);

}  // namespace rlab

#endif  // RLAB_TYPE2_HPP
