/* exec.hpp -- serial/OpenMP execution of the data-parallel kernels.
 *
 * Every kernel is deterministic under both policies: parallel loops write to
 * disjoint slots, and searches reduce to the smallest matching index, so the
 * serial path is a bit-exact reference for the parallel one.
 */

#ifndef GFGCANON_EXEC_HPP_
#define GFGCANON_EXEC_HPP_

#include <cstdint>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gfgcanon {

enum class ExecPolicy { Serial, Parallel };

#ifdef _OPENMP
inline constexpr ExecPolicy kDefaultExecPolicy = ExecPolicy::Parallel;
#else
inline constexpr ExecPolicy kDefaultExecPolicy = ExecPolicy::Serial;
#endif

// Runs fn(i) for i in [0, n). Iterations must be independent.
template <typename Fn>
void parallel_for(std::int64_t n, ExecPolicy policy, Fn&& fn) {
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)policy;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

// Smallest i in [0, n) with pred(i), or -1. Shards report local minima and
// the reduction keeps the global one, so the result does not depend on the
// schedule.
template <typename Pred>
std::int64_t find_first_index(std::int64_t n, ExecPolicy policy, Pred&& pred) {
#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
    std::int64_t best = n;
#pragma omp parallel
    {
      std::int64_t local = n;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::int64_t i = 0; i < n; ++i) {
        if (i < local && pred(i)) local = i;
      }
#pragma omp critical
      if (local < best) best = local;
    }
    return best == n ? -1 : best;
  }
#else
  (void)policy;
#endif
  for (std::int64_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return -1;
}

}  // namespace gfgcanon

#endif  // GFGCANON_EXEC_HPP_
