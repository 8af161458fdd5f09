#include "polystab/linalg.hpp"

#include <algorithm>

namespace polystab {

namespace {

std::size_t first_nonzero(const IntVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

Int det(IntMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionError("det: matrix not square");
  if (n == 0) return 1;

  // Bareiss: division-free pivoting with exact interior divisions.
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank(IntMat a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw DimensionError("rank: ragged matrix");

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Int f1 = a[r][c], f2 = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * f1 - f2 * a[r][j];
      reduce_by_gcd(a[i]);
    }
    ++r;
  }
  return static_cast<int>(r);
}

IntMat hnf_row_basis(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != cols) throw DimensionError("hnf_row_basis: ragged matrix");

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // Gcd-combine the not-yet-pivoted rows until one nonzero entry remains
    // in this column.
    for (;;) {
      std::size_t m = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (m == rows.size() ||
            boost::multiprecision::abs(rows[i][col]) < boost::multiprecision::abs(rows[m][col]))
          m = i;
      }
      if (m == rows.size()) break;  // column is clear
      bool others = false;
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (i == m || rows[i][col] == 0) continue;
        others = true;
        Int q = rows[i][col] / rows[m][col];  // truncated: remainder shrinks
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[m][j];
      }
      if (!others) {
        std::swap(rows[m], rows[pivot_row]);
        break;
      }
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (Int& x : rows[pivot_row]) x = -x;
    const Int& piv = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(rows[i][col], piv);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntMat integer_kernel(const IntMat& a, std::size_t dim) {
  const std::size_t r = a.size();
  for (const auto& row : a)
    if (row.size() != dim) throw DimensionError("integer_kernel: ragged matrix");

  // Row-reduce [A^T | I]; rows whose A^T-part vanishes carry kernel vectors.
  IntMat m(dim, IntVec(r + dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[j][i];
    m[i][r + i] = 1;
  }
  m = hnf_row_basis(std::move(m));
  IntMat kernel;
  for (const auto& row : m) {
    bool zero_head = true;
    for (std::size_t j = 0; j < r && zero_head; ++j) zero_head = (row[j] == 0);
    if (!zero_head) continue;
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
  }
  return hnf_row_basis(std::move(kernel));
}

std::optional<IntVec> solve_in_row_lattice(const IntMat& hnf_basis, const IntVec& target) {
  IntVec residual = target;
  IntVec y(hnf_basis.size(), 0);
  for (std::size_t i = 0; i < hnf_basis.size(); ++i) {
    const IntVec& row = hnf_basis[i];
    if (row.size() != target.size())
      throw DimensionError("solve_in_row_lattice: dimension mismatch");
    std::size_t p = first_nonzero(row);
    if (p == row.size()) throw InternalError("solve_in_row_lattice: zero basis row");
    if (residual[p] % row[p] != 0) return std::nullopt;
    y[i] = residual[p] / row[p];
    if (y[i] != 0)
      for (std::size_t j = 0; j < row.size(); ++j) residual[j] -= y[i] * row[j];
  }
  for (const Int& x : residual)
    if (x != 0) return std::nullopt;
  return y;
}

std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("solve_rational: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionError("solve_rational: matrix not square");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw InternalError("solve_rational: singular matrix");
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace polystab
