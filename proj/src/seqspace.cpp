#include "rlab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rlab {

namespace {

template <class Op>
std::vector<FiniteSequence::Entry> merge(const std::vector<FiniteSequence::Entry>& a,
                                         const std::vector<FiniteSequence::Entry>& b, Op op) {
    std::vector<FiniteSequence::Entry> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        Index idx;
        Complex value;
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            idx = ia->first;
            value = op(ia->second, Complex{});
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            idx = ib->first;
            value = op(Complex{}, ib->second);
            ++ib;
        } else {
            idx = ia->first;
            value = op(ia->second, ib->second);
            ++ia;
            ++ib;
        }
        if (value != Complex{}) out.emplace_back(idx, value);
    }
    return out;
}

}  // namespace

FiniteSequence::FiniteSequence(std::initializer_list<Entry> entries)
    : FiniteSequence(from_entries(std::vector<Entry>(entries))) {}

FiniteSequence FiniteSequence::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    FiniteSequence out;
    for (const auto& [idx, value] : entries) {
        if (!out.entries_.empty() && out.entries_.back().first == idx) {
            out.entries_.back().second += value;
        } else {
            out.entries_.emplace_back(idx, value);
        }
    }
    std::erase_if(out.entries_, [](const Entry& e) { return e.second == Complex{}; });
    return out;
}

FiniteSequence FiniteSequence::from_dense(std::span<const Complex> values, Index first_index) {
    FiniteSequence out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] != Complex{}) out.entries_.emplace_back(first_index + k, values[k]);
    }
    return out;
}

FiniteSequence FiniteSequence::unit(Index i) {
    FiniteSequence out;
    out.entries_.emplace_back(i, Complex(1.0));
    return out;
}

Complex FiniteSequence::operator[](Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index key) { return e.first < key; });
    if (it != entries_.end() && it->first == i) return it->second;
    return {};
}

Index FiniteSequence::max_index() const noexcept {
    return entries_.empty() ? 0 : entries_.back().first;
}

FiniteSequence FiniteSequence::map(const std::function<Complex(Index, Complex)>& fn) const {
    FiniteSequence out;
    out.entries_.reserve(entries_.size());
    for (const auto& [idx, value] : entries_) {
        Complex v = fn(idx, value);
        if (v != Complex{}) out.entries_.emplace_back(idx, v);
    }
    return out;
}

FiniteSequence& FiniteSequence::operator+=(const FiniteSequence& rhs) {
    entries_ = merge(entries_, rhs.entries_, [](Complex a, Complex b) { return a + b; });
    return *this;
}

FiniteSequence& FiniteSequence::operator-=(const FiniteSequence& rhs) {
    entries_ = merge(entries_, rhs.entries_, [](Complex a, Complex b) { return a - b; });
    return *this;
}

FiniteSequence& FiniteSequence::operator*=(Complex lambda) {
    if (lambda == Complex{}) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= lambda;
    std::erase_if(entries_, [](const Entry& e) { return e.second == Complex{}; });
    return *this;
}

double lp_norm(const FiniteSequence& x, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: exponent must be positive");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& e : x.entries()) m = std::max(m, std::abs(e.second));
        return m;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (const auto& e : x.entries()) s += std::norm(e.second);
        return std::sqrt(s);
    }
    if (p == 1.0) {
        double s = 0.0;
        for (const auto& e : x.entries()) s += std::abs(e.second);
        return s;
    }
    // Scale by the max modulus to keep pow() in range.
    double scale = 0.0;
    for (const auto& e : x.entries()) scale = std::max(scale, std::abs(e.second));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (const auto& e : x.entries()) s += std::pow(std::abs(e.second) / scale, p);
    return scale * std::pow(s, 1.0 / p);
}

FiniteSequence log_ratio(const FiniteSequence& x, double p) {
    if (x.is_zero()) throw std::domain_error("log_ratio: zero input");
    const double norm = lp_norm(x, p);
    return x.map([norm](Index, Complex v) { return v * std::log(std::abs(v) / norm); });
}

FiniteSequence make_sn(Index n) {
    if (n < 1) throw std::invalid_argument("make_sn: N must be positive");
    std::vector<FiniteSequence::Entry> entries;
    entries.reserve(n);
    for (Index i = 1; i <= n; ++i) entries.emplace_back(i, Complex(1.0));
    return FiniteSequence::from_entries(std::move(entries));
}

Complex pairing(const FiniteSequence& a, const FiniteSequence& b) {
    Complex s{};
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

double sup_distance(const FiniteSequence& a, const FiniteSequence& b) {
    return lp_norm(a - b, kInfinity);
}

FiniteSequence restrict_to(const FiniteSequence& x, Index first, Index last) {
    return x.map([first, last](Index i, Complex v) { return (i >= first && i <= last) ? v : Complex{}; });
}

FiniteSequence shift_support(const FiniteSequence& x, Index offset) {
    std::vector<FiniteSequence::Entry> entries = x.entries();
    for (auto& e : entries) e.first += offset;
    return FiniteSequence::from_entries(std::move(entries));
}

}  // namespace rlab
