#include "polystab/sympoly.hpp"

#include <bit>

namespace polystab {

namespace {

// One Sylvester-style matrix entry: an integer multiple of a single grid
// variable, or empty.
struct Entry {
  Int coeff;
  std::size_t var = 0;
};

ExpVec unit_exp(std::size_t count, std::size_t var) {
  ExpVec e(count, 0);
  e[var] = 1;
  return e;
}

// Determinant by expansion along the last column of each submatrix,
// memoized on the surviving row set. Works because every submatrix seen
// uses the column prefix 0..popcount(mask)-1.
class MinorEngine {
 public:
  MinorEngine(std::vector<std::vector<Entry>> m, VarGrid grid)
      : m_(std::move(m)), grid_(grid) {}

  IntPoly run() {
    const std::uint32_t full = (m_.size() == 32) ? 0xffffffffu
                                                 : ((std::uint32_t{1} << m_.size()) - 1);
    return det(full);
  }

 private:
  IntPoly det(std::uint32_t mask) {
    if (mask == 0) return IntPoly::monomial(grid_, ExpVec(grid_.count(), 0), Int(1));
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    const int col = std::popcount(mask) - 1;
    IntPoly acc(grid_);
    int pos = 0;
    for (std::size_t row = 0; row < m_.size(); ++row) {
      if (!(mask & (std::uint32_t{1} << row))) continue;
      const Entry& e = m_[row][static_cast<std::size_t>(col)];
      if (e.coeff != 0) {
        IntPoly sub = det(mask & ~(std::uint32_t{1} << row));
        Int c = ((pos + col) % 2 == 0) ? e.coeff : -e.coeff;
        acc = acc + sub.times_monomial(unit_exp(grid_.count(), e.var), c);
      }
      ++pos;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  std::vector<std::vector<Entry>> m_;
  VarGrid grid_;
  std::map<std::uint32_t, IntPoly> memo_;
};

// Sylvester matrix of generic P (degree m) and Q (degree n) with entries
// taken from the given grid; arow/brow select the variable rows, acoef
// scales the P coefficients (used for derivative rows).
std::vector<std::vector<Entry>> sylvester_matrix(int m, int n, VarGrid grid,
                                                 std::int32_t arow, std::int32_t brow,
                                                 bool derivative_b) {
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Entry>> mat(size, std::vector<Entry>(size));
  auto var_at = [&](std::int32_t row, int idx) {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(grid.cols) +
           static_cast<std::size_t>(idx);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j <= i + m; ++j)
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Entry{Int(1), var_at(arow, m - (j - i))};
  for (int i = 0; i < m; ++i)
    for (int j = i; j <= i + n; ++j) {
      int k = n - (j - i);  // degree-k coefficient of the second form
      Entry e;
      if (derivative_b) {
        // Second form is P' with coefficient (k+1) a_{k+1} in degree k.
        e = Entry{Int(k + 1), var_at(brow, k + 1)};
      } else {
        e = Entry{Int(1), var_at(brow, k)};
      }
      mat[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(j)] = e;
    }
  return mat;
}

IntPoly sylvester_uncapped(int m, int n) {
  VarGrid grid{2, static_cast<std::int32_t>(std::max(m, n) + 1)};
  return MinorEngine(sylvester_matrix(m, n, grid, 0, 1, false), grid).run();
}

}  // namespace

IntPoly sylvester_resultant(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("sylvester_resultant: degrees must be at least 1");
  if (m + n > 10)
    throw CapError("sylvester_resultant: refusing symbolic determinant larger than 10x10");
  return sylvester_uncapped(m, n);
}

IntPoly discriminant(int d) {
  if (d < 2 || d > 6) throw ValidationError("discriminant: degree must be between 2 and 6");
  VarGrid grid{1, static_cast<std::int32_t>(d + 1)};
  IntPoly res = MinorEngine(sylvester_matrix(d, d - 1, grid, 0, 0, true), grid).run();

  // Every monomial of R(P, P') carries at least one factor of the leading
  // coefficient; strip exactly one.
  const std::size_t lead = static_cast<std::size_t>(d);
  IntPoly out(grid);
  for (const auto& [e, c] : res.terms()) {
    if (e[lead] < 1) throw InternalError("discriminant: monomial without leading coefficient");
    ExpVec ne(e);
    --ne[lead];
    out.add_term(ne, c);
  }
  return out;
}

Rat rat_pow(const Rat& base, const Int& exp) {
  if (base == 0) {
    if (exp <= 0) throw ValidationError("rat_pow: zero base with nonpositive exponent");
    return Rat(0);
  }
  if (abs(exp) > Int(1) << 24) throw CapError("rat_pow: exponent too large");
  long e = static_cast<long>(exp);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int num = pow(numerator(base), k);
  Int den = pow(denominator(base), k);
  return invert ? Rat(den) / Rat(num) : Rat(num) / Rat(den);
}

}  // namespace polystab
