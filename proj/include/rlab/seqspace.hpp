#ifndef RLAB_SEQSPACE_HPP
#define RLAB_SEQSPACE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace rlab {

using Complex = std::complex<double>;
using Index = std::uint64_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Finitely supported complex sequence (x_i)_{i >= 1} in canonical sparse form.
///
/// Entries are kept sorted by coordinate index and exact zeros are never
/// stored, so two sequences compare equal iff they have the same support and
/// the same values there.
class FiniteSequence {
public:
    using Entry = std::pair<Index, Complex>;

    FiniteSequence() = default;
    FiniteSequence(std::initializer_list<Entry> entries);

    /// Builds from arbitrary (index, value) pairs; duplicates are summed.
    static FiniteSequence from_entries(std::vector<Entry> entries);
    /// Dense constructor: values[k] becomes coordinate first_index + k.
    static FiniteSequence from_dense(std::span<const Complex> values, Index first_index = 1);
    static FiniteSequence unit(Index i);

    [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::size_t support_size() const noexcept { return entries_.size(); }
    [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
    [[nodiscard]] Complex operator[](Index i) const;
    /// Largest index in the support, 0 for the zero sequence.
    [[nodiscard]] Index max_index() const noexcept;

    /// Applies fn(index, value) to every stored entry; zero results are pruned.
    [[nodiscard]] FiniteSequence map(const std::function<Complex(Index, Complex)>& fn) const;

    FiniteSequence& operator+=(const FiniteSequence& rhs);
    FiniteSequence& operator-=(const FiniteSequence& rhs);
    FiniteSequence& operator*=(Complex lambda);

    friend FiniteSequence operator+(FiniteSequence lhs, const FiniteSequence& rhs) { return lhs += rhs; }
    friend FiniteSequence operator-(FiniteSequence lhs, const FiniteSequence& rhs) { return lhs -= rhs; }
    friend FiniteSequence operator*(Complex lambda, FiniteSequence x) { return x *= lambda; }
    friend FiniteSequence operator*(FiniteSequence x, Complex lambda) { return x *= lambda; }
    friend FiniteSequence operator-(FiniteSequence x) { return x *= Complex(-1.0); }
    friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

private:
    std::vector<Entry> entries_;
};

/// (sum |x_i|^p)^{1/p}, or max |x_i| when p is infinite. Throws for p <= 0.
double lp_norm(const FiniteSequence& x, double p);

/// Entry-wise x_i * log(|x_i| / ||x||_p), with 0 log 0 = 0. Throws std::domain_error for x = 0.
FiniteSequence log_ratio(const FiniteSequence& x, double p);

/// Indicator of {1, ..., N}.
FiniteSequence make_sn(Index n);

/// Coordinate bilinear pairing sum_i a_i b_i (no conjugation).
Complex pairing(const FiniteSequence& a, const FiniteSequence& b);

/// max_i |a_i - b_i|.
double sup_distance(const FiniteSequence& a, const FiniteSequence& b);

/// Restriction of x to the coordinates in [first, last].
FiniteSequence restrict_to(const FiniteSequence& x, Index first, Index last);

/// Translates the support by `offset` coordinates.
FiniteSequence shift_support(const FiniteSequence& x, Index offset);

}  // namespace rlab

#endif  // RLAB_SEQSPACE_HPP
