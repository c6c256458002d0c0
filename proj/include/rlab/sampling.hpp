#ifndef RLAB_SAMPLING_HPP
#define RLAB_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "rlab/seqspace.hpp"

namespace rlab {

/// Seeded generator with platform-independent conversions (the standard
/// distributions are implementation-defined, this is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Independent stream for trial `index` of an experiment seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
    Complex complex_in_disc(double radius = 1.0);

    /// Random sequence supported in [first, first + span), support size in
    /// [1, max_support], real or complex entries of modulus <= 1.
    FiniteSequence sequence(Index first, Index span, std::size_t max_support, bool complex_entries = true);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace rlab

#endif  // RLAB_SAMPLING_HPP
