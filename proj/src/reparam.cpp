#include "rlab/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rlab/duality.hpp"
#include "rlab/sampling.hpp"

namespace rlab {

// ---------------------------------------------------------------------------
// TriangularMatrix

TriangularMatrix::TriangularMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim < 1) throw std::invalid_argument("TriangularMatrix: dimension must be positive");
}

TriangularMatrix::TriangularMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1 || entries_.size() != dim * dim) throw std::invalid_argument("TriangularMatrix: bad shape");
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
            if (entries_[r * dim + c] != Complex{}) throw std::invalid_argument("TriangularMatrix: entry below diagonal");
        }
    }
}

TriangularMatrix TriangularMatrix::identity(std::size_t dim) {
    TriangularMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) m.entries_[r * dim + r] = 1.0;
    return m;
}

Complex TriangularMatrix::by_degree(std::size_t out, std::size_t in) const {
    return (*this)(dim_ - 1 - out, dim_ - 1 - in);
}

void TriangularMatrix::set(std::size_t r, std::size_t c, Complex v) {
    if (c < r && v != Complex{}) throw std::invalid_argument("TriangularMatrix: entry below diagonal");
    entries_.at(r * dim_ + c) = v;
}

void TriangularMatrix::set_by_degree(std::size_t out, std::size_t in, Complex v) {
    set(dim_ - 1 - out, dim_ - 1 - in, v);
}

std::vector<FiniteSequence> TriangularMatrix::apply(const std::vector<FiniteSequence>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("TriangularMatrix::apply: length mismatch");
    std::vector<FiniteSequence> y(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            const Complex a = entries_[r * dim_ + c];
            if (a != Complex{}) y[r] += a * x[c];
        }
    }
    return y;
}

RochbergVector TriangularMatrix::apply(const RochbergVector& x) const {
    return {apply(x.coords), x.theta};
}

std::vector<Complex> TriangularMatrix::apply(const std::vector<Complex>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("TriangularMatrix::apply: length mismatch");
    std::vector<Complex> y(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) y[r] += entries_[r * dim_ + c] * x[c];
    }
    return y;
}

bool TriangularMatrix::invertible() const {
    for (std::size_t r = 0; r < dim_; ++r) {
        if (entries_[r * dim_ + r] == Complex{}) return false;
    }
    return true;
}

TriangularMatrix TriangularMatrix::inverse() const {
    if (!invertible()) throw std::domain_error("TriangularMatrix::inverse: singular matrix");
    TriangularMatrix inv(dim_);
    // Solve A X = I column by column, bottom row first.
    for (std::size_t c = 0; c < dim_; ++c) {
        for (std::size_t r = c + 1; r-- > 0;) {
            Complex acc = (r == c) ? Complex(1.0) : Complex{};
            for (std::size_t k = r + 1; k <= c; ++k) acc -= entries_[r * dim_ + k] * inv.entries_[k * dim_ + c];
            inv.entries_[r * dim_ + c] = acc / entries_[r * dim_ + r];
        }
    }
    return inv;
}

double TriangularMatrix::max_abs_diff(const TriangularMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("TriangularMatrix: dimension mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
    return d;
}

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("TriangularMatrix: dimension mismatch");
    const std::size_t n = a.dim_;
    TriangularMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            Complex acc{};
            for (std::size_t k = r; k <= c; ++k) acc += a.entries_[r * n + k] * b.entries_[k * n + c];
            out.entries_[r * n + c] = acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reparametrization matrices

TriangularMatrix fdb_matrix(const ScalarJet& psi, std::size_t n) {
    if (n < 1) throw std::invalid_argument("fdb_matrix: n must be positive");
    if (psi.order() + 1 < n) throw std::invalid_argument("fdb_matrix: psi jet order too small");
    const ScalarJet p = psi.truncated(n - 1);
    TriangularMatrix m(n);
    // Column of degree k: compose the monomial (w - w0)^k with psi.
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Complex> mono(n);
        mono[k] = 1.0;
        const ScalarJet g = jet_compose(ScalarJet(p.coeffs[0], std::move(mono)), p);
        for (std::size_t d = k; d < n; ++d) m.set_by_degree(d, k, g.coeffs[d]);
    }
    return m;
}

TriangularMatrix leibniz_matrix(const ScalarJet& L, std::size_t n) {
    if (n < 1) throw std::invalid_argument("leibniz_matrix: n must be positive");
    if (L.order() + 1 < n) throw std::invalid_argument("leibniz_matrix: L jet order too small");
    TriangularMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i <= k; ++i) m.set_by_degree(k, i, L.coeffs[k - i]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Binomial arrays

BinomialArray::BinomialArray(std::size_t rows_, std::size_t cols_) : rows(rows_), cols(cols_), cells(rows_ * cols_) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("BinomialArray: dimensions must be positive");
}

double max_distance(const BinomialArray& a, const BinomialArray& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("BinomialArray: shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.cells.size(); ++i) d = std::max(d, sup_distance(a.cells[i], b.cells[i]));
    return d;
}

BinomialArray operator+(const BinomialArray& a, const BinomialArray& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("BinomialArray: shape mismatch");
    BinomialArray out = a;
    for (std::size_t i = 0; i < out.cells.size(); ++i) out.cells[i] += b.cells[i];
    return out;
}

BinomialArray operator-(const BinomialArray& a, const BinomialArray& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("BinomialArray: shape mismatch");
    BinomialArray out = a;
    for (std::size_t i = 0; i < out.cells.size(); ++i) out.cells[i] -= b.cells[i];
    return out;
}

namespace {

double binomial(std::size_t n, std::size_t k) {
    double b = 1.0;
    for (std::size_t i = 1; i <= k; ++i) b = b * double(n - k + i) / double(i);
    return std::round(b);
}

}  // namespace

BinomialArray e_mn(const RochbergVector& x, std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("e_mn: m and n must be positive");
    if (x.size() != m + n - 1) throw std::invalid_argument("e_mn: array length must be m+n-1");
    BinomialArray a(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = Complex(binomial(i + j, i)) * x.degree(i + j);
    }
    return a;
}

RochbergVector grid_row(const BinomialArray& a, std::size_t i, double theta) {
    std::vector<FiniteSequence> c;
    for (std::size_t j = a.cols; j-- > 0;) c.push_back(a.at(i, j));
    return {std::move(c), theta};
}

RochbergVector grid_column(const BinomialArray& a, std::size_t j, double theta) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = a.rows; i-- > 0;) c.push_back(a.at(i, j));
    return {std::move(c), theta};
}

// ---------------------------------------------------------------------------
// Pushout isomorphism

Pushout::Pushout(PushoutShape shape, std::size_t m, double theta) : shape_(shape), m_(m), theta_(theta) {
    if (m < 1) throw std::invalid_argument("Pushout: m must be positive");
    check_theta(theta);
}

BinomialArray Pushout::E(const RochbergVector& z) const {
    return shape_ == PushoutShape::Fm2 ? e_mn(z, m_, 2) : e_mn(z, 2, m_);
}

BinomialArray Pushout::J(const RochbergVector& y) const {
    if (y.size() != m_) throw std::invalid_argument("Pushout::J: expected an array of length m");
    const Complex scale{static_cast<double>(m_)};
    if (shape_ == PushoutShape::Fm2) {
        BinomialArray a(2, m_);
        for (std::size_t j = 0; j < m_; ++j) a.at(1, j) = scale * y.degree(j);
        return a;
    }
    BinomialArray a(m_, 2);
    for (std::size_t i = 0; i < m_; ++i) a.at(i, 1) = scale * y.degree(i);
    return a;
}

RochbergVector Pushout::Q(const BinomialArray& a) const {
    return shape_ == PushoutShape::Fm2 ? grid_row(a, 0, theta_) : grid_column(a, 0, theta_);
}

BinomialArray Pushout::U(const RochbergVector& y_mod_k, const RochbergVector& z) const {
    if (m_ < 2) throw std::invalid_argument("Pushout::U: needs m >= 2");
    if (y_mod_k.size() != m_ - 1 || z.size() != m_ + 1) throw std::invalid_argument("Pushout::U: shape mismatch");
    std::vector<FiniteSequence> lift{FiniteSequence{}};
    lift.insert(lift.end(), y_mod_k.coords.begin(), y_mod_k.coords.end());
    const RochbergVector y(std::move(lift), theta_);
    return J(y) + E(z - iota(y, m_ + 1));
}

std::pair<RochbergVector, RochbergVector> Pushout::V(const BinomialArray& a) const {
    if (m_ < 2) throw std::invalid_argument("Pushout::V: needs m >= 2");
    const RochbergVector low = Q(a);
    std::vector<FiniteSequence> zc{FiniteSequence{}};
    zc.insert(zc.end(), low.coords.begin(), low.coords.end());
    const RochbergVector z(std::move(zc), theta_);
    const BinomialArray rest = a - E(z);
    const RochbergVector free_part =
        shape_ == PushoutShape::Fm2 ? grid_row(rest, 1, theta_) : grid_column(rest, 1, theta_);
    const RochbergVector y = Complex(1.0 / double(m_)) * free_part;
    return {project(y, m_ - 1), z + iota(y, m_ + 1)};
}

BinomialArray u_iso(const Pushout& maps, const RochbergVector& y_mod_k, const RochbergVector& z) {
    return maps.U(y_mod_k, z);
}

// ---------------------------------------------------------------------------
// Diagram checks

RochbergVector sigma_embed(const FiniteSequence& x, std::size_t m, double theta) {
    RochbergVector v = zero_vector(m + 1, theta);
    v.coords[1] = x;
    return v;
}

namespace {

constexpr double kTheta = 0.5;
constexpr Index kSpan = 16;

double distance(const RochbergVector& a, const RochbergVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, sup_distance(a.coords[i], b.coords[i]));
    return d;
}

RochbergVector random_vector(Rng& rng, std::size_t n) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.sequence(1, kSpan, kSpan));
    return {std::move(c), kTheta};
}

ScalarJet random_psi(Rng& rng, std::size_t order) {
    const Complex z = rng.complex_in_disc(0.5);
    std::vector<Complex> c(order + 1);
    c[0] = rng.complex_in_disc();
    for (std::size_t k = 1; k <= order; ++k) c[k] = rng.complex_in_disc();
    c[1] += std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());  // keep psi' away from 0
    return {z, std::move(c)};
}

struct Tracker {
    std::vector<DiagramResidual> rows;
    void record(const std::string& name, double r) {
        for (auto& row : rows) {
            if (row.square == name) {
                row.max_residual = std::max(row.max_residual, r);
                return;
            }
        }
        rows.push_back({name, r});
    }
};

void check_poz(Tracker& t, Rng& rng, std::size_t max_len) {
    const std::size_t m = 1 + rng.uniform_int(0, max_len - 1);
    const RochbergVector v = random_vector(rng, m);
    const std::size_t i = 1 + rng.uniform_int(0, m - 1);
    const std::size_t k = 1 + rng.uniform_int(0, i - 1);
    t.record("poz:projections", distance(project(project(v, i), k), project(v, k)));
    const std::size_t j = 1 + rng.uniform_int(0, m - 1);
    const std::size_t n = j + rng.uniform_int(0, max_len - j);
    const std::size_t mm = n + rng.uniform_int(0, max_len - n);
    const RochbergVector y = random_vector(rng, j);
    t.record("poz:inclusions", distance(iota(iota(y, n), mm), iota(y, mm)));
    if (mm > j) {
        const RochbergVector img = project(iota(y, mm), mm - j);
        t.record("poz:exactness", distance(img, zero_vector(mm - j, kTheta)));
    }
}

void check_fm2(Tracker& t, Rng& rng, std::size_t m) {
    const Pushout po(PushoutShape::Fm2, m, kTheta);
    const FiniteSequence x = rng.sequence(1, kSpan, kSpan);
    // Left square: E_{m,2} iota_{1,m+1} = m iota^m_{1,2} iota_{1,m}.
    const RochbergVector x1({x}, kTheta);
    t.record("Fm2:left", max_distance(po.E(iota(x1, m + 1)), po.J(iota(x1, m))));
    // Right square: bottom row of E_{m,2} is the projection.
    const RochbergVector z = random_vector(rng, m + 1);
    t.record("Fm2:right", distance(po.Q(po.E(z)), project(z, m)));
    if (m >= 2) {
        const RochbergVector ybar = random_vector(rng, m - 1);
        const auto [yv, zv] = po.V(po.U(ybar, z));
        t.record("Fm2:VU", std::max(distance(yv, ybar), distance(zv, z)));
        const BinomialArray a = po.U(random_vector(rng, m - 1), random_vector(rng, m + 1)) + po.J(random_vector(rng, m));
        const auto [ya, za] = po.V(a);
        t.record("Fm2:UV", max_distance(po.U(ya, za), a));
    }
}

void check_f2m(Tracker& t, Rng& rng, std::size_t m) {
    const Pushout po(PushoutShape::F2m, m, kTheta);
    const FiniteSequence x = rng.sequence(1, kSpan, kSpan);
    const RochbergVector x1({x}, kTheta);
    t.record("F2m:left", max_distance(po.E(iota(x1, m + 1)), po.J(iota(x1, m))));
    const RochbergVector z = random_vector(rng, m + 1);
    t.record("F2m:right", distance(po.Q(po.E(z)), project(z, m)));
    if (m >= 2) {
        const RochbergVector ybar = random_vector(rng, m - 1);
        const auto [yv, zv] = po.V(po.U(ybar, z));
        t.record("F2m:VU", std::max(distance(yv, ybar), distance(zv, z)));
        const BinomialArray a = po.U(random_vector(rng, m - 1), random_vector(rng, m + 1)) + po.J(random_vector(rng, m));
        const auto [ya, za] = po.V(a);
        t.record("F2m:UV", max_distance(po.U(ya, za), a));
    }
}

void check_fugz(Tracker& t, Rng& rng, std::size_t max_len) {
    const std::size_t total = 2 + rng.uniform_int(0, max_len - 2);
    const std::size_t n = 1 + rng.uniform_int(0, total - 2);
    const std::size_t k = total - n;
    const ScalarJet psi = random_psi(rng, total - 1);
    const TriangularMatrix big = fdb_matrix(psi, total);
    const TriangularMatrix small = fdb_matrix(psi, n);
    const RochbergVector x = random_vector(rng, total);
    t.record("FuGz:right", distance(project(big.apply(x), n), small.apply(project(x, n))));
    // The kernel of the projection is mapped into itself.
    const RochbergVector y = random_vector(rng, k);
    t.record("FuGz:left", distance(project(big.apply(iota(y, total)), n), zero_vector(n, kTheta)));
}

DualVector random_dual(Rng& rng, std::size_t n) {
    std::vector<FiniteSequence> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.sequence(1, kSpan, kSpan));
    return {std::move(c), conjugate_q(kTheta)};
}

void check_tn(Tracker& t, Rng& rng, std::size_t max_len) {
    const std::size_t total = 2 + rng.uniform_int(0, max_len - 2);
    const std::size_t n = 1 + rng.uniform_int(0, total - 2);
    const std::size_t k = total - n;
    const DualVector xi = random_dual(rng, n);
    const RochbergVector x = random_vector(rng, total);
    t.record("Tn:projection", std::abs(t_n_pair(dual_iota(xi, total), x) - t_n_pair(xi, project(x, n))));
    const DualVector eta = random_dual(rng, total);
    const RochbergVector y = random_vector(rng, k);
    t.record("Tn:inclusion", std::abs(t_n_pair(dual_project(eta, k), y) - t_n_pair(eta, iota(y, total))));
    const RochbergVector yn = random_vector(rng, n);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    t.record("Tn:signed-inclusion",
             std::abs(signed_self_pair(iota(yn, total), x) - sign * signed_self_pair(yn, project(x, n))));
    const RochbergVector v = random_vector(rng, total);
    t.record("Tn:signed-projection",
             std::abs(signed_self_pair(project(v, k), y) - signed_self_pair(v, iota(y, total))));
}

void check_sigma(Tracker& t, Rng& rng, std::size_t m) {
    const FiniteSequence x = rng.sequence(1, kSpan, kSpan);
    const BinomialArray e = e_mn(sigma_embed(x, m, kTheta), m, 2);
    t.record("sigma", distance(grid_row(e, 0, kTheta), iota(RochbergVector({x}, kTheta), m)));
}

}  // namespace

std::vector<DiagramResidual> diagram_check(const std::string& which, std::size_t samples, std::size_t max_m,
                                           std::uint64_t seed) {
    if (max_m < 2) throw std::invalid_argument("diagram_check: max_m must be at least 2");
    Tracker t;
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng = Rng::for_trial(seed, s);
        if (which == "poz") {
            check_poz(t, rng, max_m + 1);
        } else if (which == "Fm2") {
            for (std::size_t m = 1; m <= max_m; ++m) check_fm2(t, rng, m);
        } else if (which == "F2m") {
            for (std::size_t m = 1; m <= max_m; ++m) check_f2m(t, rng, m);
        } else if (which == "FuGz") {
            check_fugz(t, rng, max_m + 2);
        } else if (which == "Tn") {
            check_tn(t, rng, max_m + 2);
        } else if (which == "sigma") {
            for (std::size_t m = 2; m <= max_m; ++m) check_sigma(t, rng, m);
        } else {
            throw std::invalid_argument("diagram_check: unknown diagram '" + which + "'");
        }
    }
    return t.rows;
}

double intertwining_residual(const RochbergVector& x, std::size_t k, const ScalarJet& psi) {
    const std::size_t n = x.size();
    if (std::abs(psi.coeffs[0] - Complex(x.theta)) > 1e-12) {
        throw std::invalid_argument("intertwining_residual: psi(z) must equal theta");
    }
    const VectorJet f = array_extremal(x, n + k - 1);
    std::vector<FiniteSequence> stacked = omega_kn(x, k).coords;
    stacked.insert(stacked.end(), x.coords.begin(), x.coords.end());
    const std::vector<FiniteSequence> lhs = fdb_matrix(psi, n + k).apply(stacked);
    const VectorJet g = jet_compose(f, psi.truncated(n + k - 1));
    const std::vector<FiniteSequence> rhs = tau_extract(g, n + k, 0);
    double d = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) d = std::max(d, sup_distance(lhs[i], rhs[i]));
    // The lower block must be FdB[n] x.
    const std::vector<FiniteSequence> low = fdb_matrix(psi, n).apply(x.coords);
    for (std::size_t i = 0; i < n; ++i) d = std::max(d, sup_distance(low[i], rhs[k + i]));
    return d;
}

SelfExtensionReport self_extension_report(const RochbergVector& x) {
    const std::size_t n = x.size();
    const VectorJet f = array_extremal(x, 2 * n - 1);
    RochbergVector omega(tau_extract(f, 2 * n, n), x.theta);
    std::vector<FiniteSequence> phi;
    phi.push_back(Complex(double(n)) * f.coeffs[n]);
    for (std::size_t j = n - 1; j >= 1; --j) phi.push_back(Complex(double(j)) * x.degree(j));
    return {std::move(omega), RochbergVector(std::move(phi), x.theta)};
}

namespace {

/// Jet of f^{(k)} / k!: coefficient m is C(m+k, k) f_{m+k}.
VectorJet tau_derivative(const VectorJet& f, std::size_t k) {
    if (k > f.order()) throw std::invalid_argument("tau_derivative: order too small");
    std::vector<FiniteSequence> c(f.order() - k + 1);
    for (std::size_t m = 0; m < c.size(); ++m) c[m] = Complex(binomial(m + k, k)) * f.coeffs[m + k];
    return {f.base, std::move(c)};
}

VectorJet sum_truncated(const std::vector<VectorJet>& terms) {
    std::size_t order = terms.front().order();
    for (const auto& t : terms) order = std::min(order, t.order());
    VectorJet acc = terms.front().truncated(order);
    for (std::size_t i = 1; i < terms.size(); ++i) acc = jet_add(acc, terms[i].truncated(order));
    return acc;
}

}  // namespace

std::vector<VectorJet> and_also_array(const std::vector<VectorJet>& h) {
    const std::size_t n = h.size();
    if (n < 1) throw std::invalid_argument("and_also_array: empty input");
    std::vector<VectorJet> out;
    for (std::size_t i = n; i-- > 0;) {
        std::vector<VectorJet> terms;
        for (std::size_t j = 0; j <= i; ++j) terms.push_back(tau_derivative(h[j], i - j));
        out.push_back(sum_truncated(terms));
    }
    return out;
}

std::vector<VectorJet> stroke_components(const std::vector<VectorJet>& F) {
    const std::size_t n = F.size();
    if (n < 1) throw std::invalid_argument("stroke_components: empty input");
    auto comp = [&](std::size_t i) -> const VectorJet& { return F[n - 1 - i]; };
    std::vector<VectorJet> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<VectorJet> terms{comp(i)};
        for (std::size_t k = 1; k <= i; ++k) {
            const VectorJet d = tau_derivative(comp(i - k), k);
            terms.push_back(k % 2 == 0 ? d : jet_scale(d, -1.0));
        }
        out.push_back(sum_truncated(terms));
    }
    return out;
}

}  // namespace rlab
