#include "rlab/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace rlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ index));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + r % span;
}

Complex Rng::complex_in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, t);
}

FiniteSequence Rng::sequence(Index first, Index span, std::size_t max_support, bool complex_entries) {
    const std::size_t size = static_cast<std::size_t>(
        uniform_int(1, std::min<std::uint64_t>(max_support, span)));
    std::vector<Index> pool(span);
    for (Index i = 0; i < span; ++i) pool[i] = first + i;
    // Partial Fisher-Yates picks `size` distinct coordinates.
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t j = static_cast<std::size_t>(uniform_int(i, span - 1));
        std::swap(pool[i], pool[j]);
    }
    std::vector<FiniteSequence::Entry> entries;
    entries.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        Complex v;
        do {
            v = complex_entries ? complex_in_disc() : Complex(uniform(-1.0, 1.0));
        } while (v == Complex{});
        entries.emplace_back(pool[i], v);
    }
    return FiniteSequence::from_entries(std::move(entries));
}

}  // namespace rlab
