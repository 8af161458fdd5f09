#pragma once

#include <random>

#include "polystab/polytope.hpp"
#include "polystab/sympoly.hpp"

// Shared test utilities. Everything here is deliberately independent of the
// library's own algorithms so it can serve as an oracle: membership goes
// through barycentric solves, determinants through rational elimination.

namespace testutil {

using polystab::Int;
using polystab::IntMat;
using polystab::IntVec;
using polystab::Rat;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Inclusive range; plain modulo keeps the stream platform-independent.
  long range(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Int int_range(long lo, long hi) { return Int(range(lo, hi)); }

  IntVec vec(std::size_t dim, long lo, long hi) {
    IntVec v(dim);
    for (auto& x : v) x = int_range(lo, hi);
    return v;
  }

  IntVec sum_zero_vec(std::size_t dim, long lo, long hi) {
    for (;;) {
      IntVec v = vec(dim, lo, hi);
      Int s = 0;
      for (std::size_t i = 0; i + 1 < dim; ++i) s += v[i];
      v[dim - 1] = -s;
      if (v[dim - 1] >= lo && v[dim - 1] <= hi) return v;
    }
  }

  IntMat points(std::size_t n, std::size_t dim, long lo, long hi) {
    IntMat m(n);
    for (auto& p : m) p = vec(dim, lo, hi);
    return m;
  }

  IntMat nonneg_points(std::size_t n, std::size_t dim, long hi) {
    return points(n, dim, 0, hi);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Exact determinant by rational Gaussian elimination (no Bareiss, no
// shortcuts shared with the library).
inline Rat gauss_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Numeric Sylvester determinant of concrete coefficient vectors a (degree
// m) and b (degree n), coefficients listed a[0]..a[m] by ascending degree.
inline Rat numeric_resultant(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t sz = m + n;
  std::vector<std::vector<Rat>> mat(sz, std::vector<Rat>(sz, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) mat[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) mat[n + i][i + j] = b[n - j];
  return gauss_det(std::move(mat));
}

// Solve sum t_i q_i = p, sum t_i = 1 exactly; nonnegative solution means p
// lies in the simplex spanned by qs. Gaussian elimination on the augmented
// system, then a free check of the residual.
inline bool in_simplex(const IntMat& qs, const IntVec& p) {
  const std::size_t k = qs.size(), d = p.size();
  std::vector<std::vector<Rat>> m(d + 1, std::vector<Rat>(k + 1, Rat(0)));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = Rat(qs[c][r]);
    m[r][k] = Rat(p[r]);
  }
  for (std::size_t c = 0; c < k; ++c) m[d][c] = 1;
  m[d][k] = 1;

  const std::size_t rows = d + 1, cols = k;
  std::vector<std::size_t> pivot_col;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t piv = rr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rr]);
    Rat lead = m[rr][c];
    for (std::size_t j = c; j <= cols; ++j) m[rr][j] /= lead;
    for (std::size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == rr || m[r2][c] == 0) continue;
      Rat f = m[r2][c];
      for (std::size_t j = c; j <= cols; ++j) m[r2][j] -= f * m[rr][j];
    }
    pivot_col.push_back(c);
    ++rr;
  }
  for (std::size_t r2 = rr; r2 < rows; ++r2)
    if (m[r2][cols] != 0) return false;  // inconsistent
  // Unique-solution check only on pivot variables; free variables set to 0.
  std::vector<Rat> t(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) t[pivot_col[i]] = m[i][cols];
  for (const Rat& x : t)
    if (x < 0) return false;
  return true;
}

// p in conv(points)? Caratheodory: try every subset of size <= dim+1.
// Exponential, fine at test sizes; wholly independent of the hull code.
inline bool hull_membership(const IntMat& points, const IntVec& p) {
  const std::size_t n = points.size(), dim = p.size();
  const std::size_t kmax = std::min(n, dim + 1);
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, std::size_t need) -> bool {
    if (need == 0) {
      IntMat sub;
      for (auto i : idx) sub.push_back(points[i]);
      return in_simplex(sub, p);
    }
    for (std::size_t i = start; i + need <= n; ++i) {
      idx.push_back(i);
      if (self(self, i + 1, need - 1)) {
        idx.pop_back();
        return true;
      }
      idx.pop_back();
    }
    return false;
  };
  for (std::size_t k = 1; k <= kmax; ++k)
    if (rec(rec, 0, k)) return true;
  return false;
}

// Equality up to an overall sign flip; resultant/discriminant conventions
// differ by (-1) factors between sources.
template <class P>
bool equal_up_to_sign(const P& a, const P& b) {
  return a == b || a == -b;
}

// Evaluate an integer-coefficient grid polynomial at a concrete value per
// variable.
inline Rat eval_poly(const polystab::IntPoly& p, const std::vector<Rat>& vals) {
  Rat acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat t(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::int32_t k = 0; k < e[i]; ++k) t *= vals[i];
    acc += t;
  }
  return acc;
}

}  // namespace testutil
