#ifndef RLAB_REPARAM_HPP
#define RLAB_REPARAM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/rochberg.hpp"

namespace rlab {

/// Upper-triangular matrix acting on descending arrays: row/column r stands
/// for Taylor degree dim-1-r.
class TriangularMatrix {
public:
    explicit TriangularMatrix(std::size_t dim);
    /// Row-major dense entries; anything below the diagonal must be zero.
    TriangularMatrix(std::size_t dim, std::vector<Complex> entries);
    static TriangularMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
    /// Entry coupling output degree `out` with input degree `in` (zero unless in <= out).
    [[nodiscard]] Complex by_degree(std::size_t out, std::size_t in) const;
    void set(std::size_t r, std::size_t c, Complex v);
    void set_by_degree(std::size_t out, std::size_t in, Complex v);

    [[nodiscard]] std::vector<FiniteSequence> apply(const std::vector<FiniteSequence>& x) const;
    [[nodiscard]] RochbergVector apply(const RochbergVector& x) const;
    [[nodiscard]] std::vector<Complex> apply(const std::vector<Complex>& x) const;
    [[nodiscard]] bool invertible() const;
    /// Inverse by back-substitution; throws when a diagonal entry vanishes.
    [[nodiscard]] TriangularMatrix inverse() const;
    [[nodiscard]] double max_abs_diff(const TriangularMatrix& other) const;

    friend TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b);

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Matrix M with M tau_{(n,0]} f(psi(z)) = tau_{(n,0]}(f o psi)(z). Needs psi of order >= n-1.
TriangularMatrix fdb_matrix(const ScalarJet& psi, std::size_t n);

/// Matrix of f -> L f on descending arrays: entry (degree k, degree i) is tau_{k-i} L.
TriangularMatrix leibniz_matrix(const ScalarJet& L, std::size_t n);

/// Grid of sequences with `rows` derivative orders (index i) and `cols` columns (index j).
struct BinomialArray {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FiniteSequence> cells;

    BinomialArray(std::size_t rows_, std::size_t cols_);
    [[nodiscard]] FiniteSequence& at(std::size_t i, std::size_t j) { return cells.at(i * cols + j); }
    [[nodiscard]] const FiniteSequence& at(std::size_t i, std::size_t j) const { return cells.at(i * cols + j); }
    friend bool operator==(const BinomialArray&, const BinomialArray&) = default;
};

/// max over cells of the sup distance.
double max_distance(const BinomialArray& a, const BinomialArray& b);
BinomialArray operator+(const BinomialArray& a, const BinomialArray& b);
BinomialArray operator-(const BinomialArray& a, const BinomialArray& b);

/// cell(i, j) = C(i+j, i) x_{i+j}, for x of length m+n-1, n rows and m columns.
BinomialArray e_mn(const RochbergVector& x, std::size_t m, std::size_t n);

/// Row i of the grid as a descending array indexed by column (j = cols-1 first).
RochbergVector grid_row(const BinomialArray& a, std::size_t i, double theta);
/// Column j of the grid as a descending array indexed by row.
RochbergVector grid_column(const BinomialArray& a, std::size_t j, double theta);

/// The two pushout squares built on E_{m,2} (grid 2 x m) and E_{2,m} (grid m x 2).
/// Z is the array space of length m+1, K its top coordinate, Y the arrays of
/// length m sitting in Z through the left inclusion, and Y/K is represented by
/// the lowest m-1 coordinates.
enum class PushoutShape { Fm2, F2m };

class Pushout {
public:
    Pushout(PushoutShape shape, std::size_t m, double theta = 0.5);

    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] BinomialArray E(const RochbergVector& z) const;
    /// m times the inclusion of Y into the "free" row (Fm2) or column (F2m).
    [[nodiscard]] BinomialArray J(const RochbergVector& y) const;
    /// The complementary row or column, as an array of length m.
    [[nodiscard]] RochbergVector Q(const BinomialArray& a) const;
    /// U(y + K, z) = J(y~) + E(z - y~) with the lift y~ = (0, y_{m-2}, ..., y_0).
    [[nodiscard]] BinomialArray U(const RochbergVector& y_mod_k, const RochbergVector& z) const;
    /// Inverse of U: writes a = J(y) + E(z) with z_m = 0 and returns (y + K, z + y).
    [[nodiscard]] std::pair<RochbergVector, RochbergVector> V(const BinomialArray& a) const;

private:
    PushoutShape shape_;
    std::size_t m_;
    double theta_;
};

BinomialArray u_iso(const Pushout& maps, const RochbergVector& y_mod_k, const RochbergVector& z);

struct DiagramResidual {
    std::string square;
    double max_residual = 0.0;
};

inline const std::vector<std::string> kDiagramNames = {"poz", "Fm2", "F2m", "FuGz", "Tn", "sigma"};

/// Evaluates both paths of every square of the named diagram on `samples`
/// seeded random inputs, for all sizes up to max_m, and reports max residuals.
std::vector<DiagramResidual> diagram_check(const std::string& which, std::size_t samples,
                                           std::size_t max_m, std::uint64_t seed);

/// sigma(x) = (0, x, 0, ..., 0) of length m+1 (x in the slot of degree m-1).
RochbergVector sigma_embed(const FiniteSequence& x, std::size_t m, double theta);

/// Residual of FdB[n+k] (Omega(x), x) against the tau data of the composed
/// extremal, where Omega = omega_kn at psi(z) and x has length n.
double intertwining_residual(const RochbergVector& x, std::size_t k, const ScalarJet& psi);

/// The two self-extension differentials of an array x of length n:
/// omega_nn = tau_{(2n,n]} f and phi_11 = (n tau_n f, (n-1) x_{n-1}, ..., x_1).
struct SelfExtensionReport {
    RochbergVector omega_nn;
    RochbergVector phi_11;
};
SelfExtensionReport self_extension_report(const RochbergVector& x);

/// F_i = sum_{j<=i} h_j^{(i-j)} / (i-j)!, for h = (h_0, ..., h_{n-1}); returned as (F_{n-1}, ..., F_0).
std::vector<VectorJet> and_also_array(const std::vector<VectorJet>& h);
/// g_i = F_i + sum_{1<=k<=i} (-1)^k F_{i-k}^{(k)} / k!, for F given as (F_{n-1}, ..., F_0);
/// returned as (g_0, ..., g_{n-1}).
std::vector<VectorJet> stroke_components(const std::vector<VectorJet>& F);

}  // namespace rlab

#endif  // RLAB_REPARAM_HPP
