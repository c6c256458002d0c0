#include "rlab/type2.hpp"

#include <cmath>
#include <stdexcept>

#include "rlab/parallel.hpp"

namespace rlab {

double avg_sign_ratio(const std::vector<RochbergVector>& tuple) {
    const std::size_t n = tuple.size();
    if (n < 1 || n > kMaxSignTuple) throw std::invalid_argument("avg_sign_ratio: tuple length must be in [1, 16]");
    double denom = 0.0;
    for (const auto& v : tuple) {
        const double r = rho(v);
        denom += r * r;
    }
    if (denom == 0.0) throw std::domain_error("avg_sign_ratio: all vectors are zero");

    const std::size_t patterns = std::size_t{1} << n;
    const std::size_t chunk = 256;
    const std::size_t chunks = (patterns + chunk - 1) / chunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_for(chunks, [&](std::size_t c) {
        double acc = 0.0;
        const std::size_t end = std::min(patterns, (c + 1) * chunk);
        for (std::size_t mask = c * chunk; mask < end; ++mask) {
            RochbergVector s = zero_vector(tuple.front().size(), tuple.front().theta);
            for (std::size_t i = 0; i < n; ++i) s = (mask >> i & 1U) ? s - tuple[i] : s + tuple[i];
            const double r = rho(s);
            acc += r * r;
        }
        partial[c] = acc;
    });
    double total = 0.0;
    for (double v : partial) total += v;
    return std::sqrt(total / double(patterns) / denom);
}

namespace {

std::vector<RochbergVector> block_witness(std::size_t m, std::size_t count, std::size_t b, double theta) {
    std::vector<RochbergVector> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const FiniteSequence block = shift_support(make_sn(b), i * b);
        out.push_back(bottom_vector(block, m + 1, theta));
    }
    return out;
}

}  // namespace

Type2Report an_lower(std::size_t m, std::size_t n, std::size_t N, double theta) {
    if (n < 1 || n > kMaxSignTuple) throw std::invalid_argument("an_lower: n must be in [1, 16]");
    if (m > 4) throw std::invalid_argument("an_lower: m must be at most 4");
    if (N < n) throw std::invalid_argument("an_lower: N must be at least n");
    Type2Report report;
    report.m = m;
    report.n = n;
    for (std::size_t count = 1; count <= n; ++count) {
        for (std::size_t b = 1; count * b <= N; b *= 2) {
            auto witness = block_witness(m, count, b, theta);
            const double r = avg_sign_ratio(witness);
            if (r > report.lower_bound) {
                report.lower_bound = r;
                report.block_size = b;
                witness.resize(n, zero_vector(m + 1, theta));
                report.witness = std::move(witness);
            }
        }
    }
    return report;
}

double recursion_upper(std::size_t m, double a2, double C, std::size_t K) {
    if (!(a2 >= 1.0) || !(C > 0.0) || K < 1) throw std::invalid_argument("recursion_upper: need a2 >= 1, C > 0, K >= 1");
    if (m == 0) return a2;
    double s = 0.0;
    for (std::size_t i = 1; i <= K; ++i) s += std::pow(double(i), double(m) - 1.0);
    return a2 + (1.0 + a2) * C * s;
}

}  // namespace rlab
