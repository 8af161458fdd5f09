#pragma once

#include <cstddef>
#include <utility>

#include "polystab/ints.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polystab::kernels {

// Bulk loops over exact integers. Every operation ships as a serial
// reference plus an OpenMP variant that returns bit-identical results; the
// unsuffixed name dispatches on the runtime switch. Chunking is by
// contiguous index ranges combined in range order, so results never depend
// on scheduling.

struct LinearCondition {
  IntVec normal;
  Int offset;
};

void set_parallel(bool on);
bool parallel_enabled();
int worker_count();

// <n,p> >= off for every inequality and <n,p> == off for every equality,
// for every point.
bool points_satisfy_serial(const std::vector<IntVec>& pts,
                           const std::vector<LinearCondition>& ineqs,
                           const std::vector<LinearCondition>& eqs);
bool points_satisfy_parallel(const std::vector<IntVec>& pts,
                             const std::vector<LinearCondition>& ineqs,
                             const std::vector<LinearCondition>& eqs);
bool points_satisfy(const std::vector<IntVec>& pts, const std::vector<LinearCondition>& ineqs,
                    const std::vector<LinearCondition>& eqs);

// min over pts of <l, p>; pts must be nonempty.
Int min_dot_serial(const std::vector<IntVec>& pts, const IntVec& l);
Int min_dot_parallel(const std::vector<IntVec>& pts, const IntVec& l);
Int min_dot(const std::vector<IntVec>& pts, const IntVec& l);

// All sums a + b in row-major (a-index major) order.
std::vector<IntVec> pairwise_sums_serial(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b);
std::vector<IntVec> pairwise_sums_parallel(const std::vector<IntVec>& a,
                                           const std::vector<IntVec>& b);
std::vector<IntVec> pairwise_sums(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

// Keeps the candidates satisfying all conditions, preserving input order.
std::vector<IntVec> filter_satisfying_serial(const std::vector<IntVec>& cand,
                                             const std::vector<LinearCondition>& ineqs,
                                             const std::vector<LinearCondition>& eqs);
std::vector<IntVec> filter_satisfying_parallel(const std::vector<IntVec>& cand,
                                               const std::vector<LinearCondition>& ineqs,
                                               const std::vector<LinearCondition>& eqs);
std::vector<IntVec> filter_satisfying(const std::vector<IntVec>& cand,
                                      const std::vector<LinearCondition>& ineqs,
                                      const std::vector<LinearCondition>& eqs);

// Contiguous index range assigned to worker t of n over `total` items.
inline std::pair<std::size_t, std::size_t> worker_range(int t, int n, std::size_t total) {
  const std::size_t lo = total * static_cast<std::size_t>(t) / static_cast<std::size_t>(n);
  const std::size_t hi = total * (static_cast<std::size_t>(t) + 1) / static_cast<std::size_t>(n);
  return {lo, hi};
}

// Ordered map: out[i] = f(in[i]); f must be pure.
template <class R, class T, class F>
std::vector<R> map_ordered(const std::vector<T>& in, F&& f) {
  std::vector<R> out(in.size());
#ifdef _OPENMP
  if (parallel_enabled()) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(in.size()); ++i)
      out[static_cast<std::size_t>(i)] = f(in[static_cast<std::size_t>(i)]);
    return out;
  }
#endif
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
  return out;
}

}  // namespace polystab::kernels
