#include "polystab/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace polystab::kernels {

namespace {

bool initial_parallel() {
#ifdef _OPENMP
  if (const char* env = std::getenv("POLYSTAB_THREADS")) {
    const int n = std::atoi(env);
    if (n <= 1) return false;
    omp_set_num_threads(n);
    return true;
  }
  return omp_get_max_threads() > 1;
#else
  return false;
#endif
}

std::atomic<bool>& parallel_flag() {
  static std::atomic<bool> flag{initial_parallel()};
  return flag;
}

// No-throw inner products so conditions can be evaluated inside parallel
// regions; dimensions are validated once up front.
Int dot_unchecked(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool satisfies(const IntVec& p, const std::vector<LinearCondition>& ineqs,
               const std::vector<LinearCondition>& eqs) {
  for (const auto& c : ineqs)
    if (dot_unchecked(c.normal, p) < c.offset) return false;
  for (const auto& c : eqs)
    if (dot_unchecked(c.normal, p) != c.offset) return false;
  return true;
}

void check_conditions(const std::vector<IntVec>& pts, const std::vector<LinearCondition>& ineqs,
                      const std::vector<LinearCondition>& eqs) {
  if (pts.empty()) return;
  const std::size_t d = pts[0].size();
  for (const auto& p : pts)
    if (p.size() != d) throw DimensionError("kernels: ragged point set");
  for (const auto& c : ineqs)
    if (c.normal.size() != d) throw DimensionError("kernels: condition dimension mismatch");
  for (const auto& c : eqs)
    if (c.normal.size() != d) throw DimensionError("kernels: condition dimension mismatch");
}

}  // namespace

void set_parallel(bool on) { parallel_flag().store(on); }

bool parallel_enabled() {
#ifdef _OPENMP
  return parallel_flag().load();
#else
  return false;
#endif
}

int worker_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

bool points_satisfy_serial(const std::vector<IntVec>& pts,
                           const std::vector<LinearCondition>& ineqs,
                           const std::vector<LinearCondition>& eqs) {
  check_conditions(pts, ineqs, eqs);
  for (const auto& p : pts)
    if (!satisfies(p, ineqs, eqs)) return false;
  return true;
}

bool points_satisfy_parallel(const std::vector<IntVec>& pts,
                             const std::vector<LinearCondition>& ineqs,
                             const std::vector<LinearCondition>& eqs) {
#ifdef _OPENMP
  check_conditions(pts, ineqs, eqs);
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pts.size()); ++i)
    ok = ok && satisfies(pts[static_cast<std::size_t>(i)], ineqs, eqs);
  return ok;
#else
  return points_satisfy_serial(pts, ineqs, eqs);
#endif
}

bool points_satisfy(const std::vector<IntVec>& pts, const std::vector<LinearCondition>& ineqs,
                    const std::vector<LinearCondition>& eqs) {
  return parallel_enabled() ? points_satisfy_parallel(pts, ineqs, eqs)
                            : points_satisfy_serial(pts, ineqs, eqs);
}

namespace {

void check_min_dot_args(const std::vector<IntVec>& pts, const IntVec& l) {
  if (pts.empty()) throw InternalError("min_dot: empty point set");
  for (const auto& p : pts)
    if (p.size() != l.size()) throw DimensionError("min_dot: dimension mismatch");
}

}  // namespace

Int min_dot_serial(const std::vector<IntVec>& pts, const IntVec& l) {
  check_min_dot_args(pts, l);
  Int best = dot_unchecked(l, pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Int v = dot_unchecked(l, pts[i]);
    if (v < best) best = std::move(v);
  }
  return best;
}

Int min_dot_parallel(const std::vector<IntVec>& pts, const IntVec& l) {
#ifdef _OPENMP
  check_min_dot_args(pts, l);
  const int nw = omp_get_max_threads();
  std::vector<Int> local(static_cast<std::size_t>(nw));
  std::vector<char> used(static_cast<std::size_t>(nw), 0);
#pragma omp parallel num_threads(nw)
  {
    const int t = omp_get_thread_num();
    auto [lo, hi] = worker_range(t, nw, pts.size());
    if (lo < hi) {
      Int best = dot_unchecked(l, pts[lo]);
      for (std::size_t i = lo + 1; i < hi; ++i) {
        Int v = dot_unchecked(l, pts[i]);
        if (v < best) best = std::move(v);
      }
      local[static_cast<std::size_t>(t)] = std::move(best);
      used[static_cast<std::size_t>(t)] = 1;
    }
  }
  Int best;
  bool have = false;
  for (std::size_t t = 0; t < local.size(); ++t) {
    if (!used[t]) continue;
    if (!have || local[t] < best) {
      best = local[t];
      have = true;
    }
  }
  if (!have) throw InternalError("min_dot: no worker produced a value");
  return best;
#else
  return min_dot_serial(pts, l);
#endif
}

Int min_dot(const std::vector<IntVec>& pts, const IntVec& l) {
  return parallel_enabled() ? min_dot_parallel(pts, l) : min_dot_serial(pts, l);
}

namespace {

// Exceptions must not escape a parallel region, so dimensions are checked
// before any loop starts.
void check_same_dim(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.size() != y.size()) throw DimensionError("pairwise_sums: dimension mismatch");
      return;
    }
}

}  // namespace

std::vector<IntVec> pairwise_sums_serial(const std::vector<IntVec>& a,
                                         const std::vector<IntVec>& b) {
  check_same_dim(a, b);
  std::vector<IntVec> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      IntVec s(x.size());
      for (std::size_t d = 0; d < x.size(); ++d) s[d] = x[d] + y[d];
      out.push_back(std::move(s));
    }
  return out;
}

std::vector<IntVec> pairwise_sums_parallel(const std::vector<IntVec>& a,
                                           const std::vector<IntVec>& b) {
#ifdef _OPENMP
  check_same_dim(a, b);
  const std::size_t nb = b.size();
  std::vector<IntVec> out(a.size() * nb);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(out.size()); ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / nb;
    const std::size_t j = static_cast<std::size_t>(k) % nb;
    const IntVec& x = a[i];
    const IntVec& y = b[j];
    IntVec s(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) s[d] = x[d] + y[d];
    out[static_cast<std::size_t>(k)] = std::move(s);
  }
  return out;
#else
  return pairwise_sums_serial(a, b);
#endif
}

std::vector<IntVec> pairwise_sums(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  return parallel_enabled() ? pairwise_sums_parallel(a, b) : pairwise_sums_serial(a, b);
}

std::vector<IntVec> filter_satisfying_serial(const std::vector<IntVec>& cand,
                                             const std::vector<LinearCondition>& ineqs,
                                             const std::vector<LinearCondition>& eqs) {
  check_conditions(cand, ineqs, eqs);
  std::vector<IntVec> out;
  for (const auto& p : cand)
    if (satisfies(p, ineqs, eqs)) out.push_back(p);
  return out;
}

std::vector<IntVec> filter_satisfying_parallel(const std::vector<IntVec>& cand,
                                               const std::vector<LinearCondition>& ineqs,
                                               const std::vector<LinearCondition>& eqs) {
#ifdef _OPENMP
  check_conditions(cand, ineqs, eqs);
  const int nw = omp_get_max_threads();
  std::vector<std::vector<IntVec>> parts(static_cast<std::size_t>(nw));
#pragma omp parallel num_threads(nw)
  {
    const int t = omp_get_thread_num();
    auto [lo, hi] = worker_range(t, nw, cand.size());
    auto& mine = parts[static_cast<std::size_t>(t)];
    for (std::size_t i = lo; i < hi; ++i)
      if (satisfies(cand[i], ineqs, eqs)) mine.push_back(cand[i]);
  }
  std::vector<IntVec> out;
  for (auto& part : parts)
    for (auto& p : part) out.push_back(std::move(p));
  return out;
#else
  return filter_satisfying_serial(cand, ineqs, eqs);
#endif
}

std::vector<IntVec> filter_satisfying(const std::vector<IntVec>& cand,
                                      const std::vector<LinearCondition>& ineqs,
                                      const std::vector<LinearCondition>& eqs) {
  return parallel_enabled() ? filter_satisfying_parallel(cand, ineqs, eqs)
                            : filter_satisfying_serial(cand, ineqs, eqs);
}

}  // namespace polystab::kernels
