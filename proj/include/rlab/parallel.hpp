#ifndef RLAB_PARALLEL_HPP
#define RLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace rlab {

/// Worker count: hardware concurrency, capped by RLAB_THREADS when set (>= 1).
unsigned worker_count();

/// Runs body(i) for i in [0, count). Each index is handled by exactly one
/// worker; callers write results into index-addressed slots so the outcome
/// does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rlab

#endif  // RLAB_PARALLEL_HPP
