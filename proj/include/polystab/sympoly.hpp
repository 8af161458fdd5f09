#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "polystab/lattice.hpp"
#include "polystab/polytope.hpp"

namespace polystab {

// Variables arranged as a rows x cols grid, flattened row-major. Rows
// correspond to generic forms, columns to coefficient indices 0..cols-1;
// the torus acts through the columns.
struct VarGrid {
  std::int32_t rows = 1;
  std::int32_t cols = 1;
  std::size_t count() const {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  friend bool operator==(const VarGrid&, const VarGrid&) = default;
};

using ExpVec = std::vector<std::int32_t>;

// Sparse exact-coefficient polynomial over the grid variables. Terms are
// kept in lexicographic exponent order with no stored zeros, so equality
// and serialization are canonical.
template <class C>
class BasicPoly {
 public:
  explicit BasicPoly(VarGrid grid) : grid_(grid) {
    if (grid.rows < 1 || grid.cols < 1) throw ValidationError("polynomial grid must be positive");
  }

  static BasicPoly monomial(VarGrid grid, ExpVec exps, C coeff) {
    BasicPoly p(grid);
    p.add_term(exps, coeff);
    return p;
  }

  const VarGrid& grid() const { return grid_; }
  const std::map<ExpVec, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const ExpVec& exps, const C& coeff) {
    if (exps.size() != grid_.count()) throw DimensionError("polynomial term: exponent length");
    for (auto e : exps)
      if (e < 0) throw ValidationError("polynomial term: negative exponent");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exps, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    a.check_grid(b);
    BasicPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
    a.check_grid(b);
    BasicPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_grid(b);
    BasicPoly out(a.grid_);
    const std::size_t n = a.grid_.count();
    ExpVec e(n);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  BasicPoly operator-() const {
    BasicPoly out(grid_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  BasicPoly scaled(const C& s) const {
    BasicPoly out(grid_);
    if (s == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  // Multiply by coeff * x^exps without building a temporary polynomial.
  BasicPoly times_monomial(const ExpVec& exps, const C& coeff) const {
    if (exps.size() != grid_.count()) throw DimensionError("times_monomial: exponent length");
    BasicPoly out(grid_);
    if (coeff == 0) return out;
    for (const auto& [e, c] : terms_) {
      ExpVec ne(e);
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += exps[i];
      out.terms_.emplace(std::move(ne), c * coeff);
    }
    return out;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.grid_ == b.grid_ && a.terms_ == b.terms_;
  }

 private:
  void check_grid(const BasicPoly& other) const {
    if (!(grid_ == other.grid_)) throw DimensionError("polynomial grids differ");
  }
  VarGrid grid_;
  std::map<ExpVec, C> terms_;
};

using IntPoly = BasicPoly<Int>;
using RatPoly = BasicPoly<Rat>;

// Character of one monomial: entry j is the total exponent of column j
// across all grid rows.
template <class C>
Character character_of(const BasicPoly<C>& p, const ExpVec& exps) {
  const auto g = p.grid();
  Character chi(static_cast<std::size_t>(g.cols), Int(0));
  for (std::int32_t r = 0; r < g.rows; ++r)
    for (std::int32_t c = 0; c < g.cols; ++c)
      chi[static_cast<std::size_t>(c)] +=
          exps[static_cast<std::size_t>(r) * static_cast<std::size_t>(g.cols) +
               static_cast<std::size_t>(c)];
  return chi;
}

// Set of characters of a vector with multiplicities (monomial counts).
struct WeightSupport {
  std::size_t dim = 0;
  std::map<Character, Int> points;
};

template <class C>
WeightSupport weight_support(const BasicPoly<C>& p) {
  if (p.is_zero()) throw ValidationError("weight_support: zero polynomial");
  WeightSupport s;
  s.dim = static_cast<std::size_t>(p.grid().cols);
  for (const auto& [e, c] : p.terms()) ++s.points[character_of(p, e)];
  return s;
}

template <class C>
LatticePolytope newton_polytope(const BasicPoly<C>& p) {
  WeightSupport s = weight_support(p);
  std::vector<Character> pts;
  pts.reserve(s.points.size());
  for (const auto& [chi, mult] : s.points) pts.push_back(chi);
  return LatticePolytope::hull(pts);
}

// Determinant of the Sylvester matrix of generic P (degree m, row-0
// variables a_0..a_m) and Q (degree n, row-1 variables b_0..b_n).
IntPoly sylvester_resultant(int m, int n);

// R_{d,d-1}(P, P') divided exactly by a_d; single-row grid a_0..a_d.
IntPoly discriminant(int d);

template <class C>
Int total_degree(const BasicPoly<C>& p) {
  if (p.is_zero()) throw ValidationError("total_degree: zero polynomial");
  Int best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Int s = 0;
    for (auto x : e) s += x;
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

// Per-row exponent totals; requires them constant across monomials.
template <class C>
std::vector<Int> row_degrees(const BasicPoly<C>& p) {
  if (p.is_zero()) throw ValidationError("row_degrees: zero polynomial");
  const auto g = p.grid();
  std::vector<Int> deg(static_cast<std::size_t>(g.rows), Int(0));
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::vector<Int> cur(static_cast<std::size_t>(g.rows), Int(0));
    for (std::int32_t r = 0; r < g.rows; ++r)
      for (std::int32_t c2 = 0; c2 < g.cols; ++c2)
        cur[static_cast<std::size_t>(r)] +=
            e[static_cast<std::size_t>(r) * static_cast<std::size_t>(g.cols) +
              static_cast<std::size_t>(c2)];
    if (first)
      deg = cur;
    else if (cur != deg)
      throw ValidationError("row_degrees: polynomial is not multihomogeneous");
    first = false;
  }
  return deg;
}

Rat rat_pow(const Rat& base, const Int& exp);

template <class C>
RatPoly act_diagonal(const BasicPoly<C>& p, const Rat& t, const OneParamSubgroup& lambda) {
  if (t == 0) throw ValidationError("act_diagonal: t must be nonzero");
  if (lambda.size() != static_cast<std::size_t>(p.grid().cols))
    throw DimensionError("act_diagonal: cocharacter rank differs from column count");
  RatPoly out(p.grid());
  for (const auto& [e, c] : p.terms()) {
    Int w = pairing(lambda, character_of(p, e));
    out.add_term(e, Rat(c) * rat_pow(t, w));
  }
  return out;
}

template <class C>
RatPoly act_linear(const BasicPoly<C>& p, const std::vector<std::vector<Rat>>& sigma) {
  const auto g = p.grid();
  const std::size_t cols = static_cast<std::size_t>(g.cols);
  if (sigma.size() != cols) throw DimensionError("act_linear: matrix size differs from columns");
  for (const auto& row : sigma)
    if (row.size() != cols) throw DimensionError("act_linear: ragged matrix");

  // Row vector of variables maps to its right product with sigma: the
  // variable at (r, j) becomes sum_k sigma[k][j] * x_{r,k}.
  std::vector<RatPoly> images;
  images.reserve(p.grid().count());
  for (std::int32_t r = 0; r < g.rows; ++r)
    for (std::int32_t j = 0; j < g.cols; ++j) {
      RatPoly lin(g);
      for (std::int32_t k = 0; k < g.cols; ++k) {
        const Rat& s = sigma[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (s == 0) continue;
        ExpVec e(p.grid().count(), 0);
        e[static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(k)] = 1;
        lin.add_term(e, s);
      }
      images.push_back(std::move(lin));
    }

  RatPoly out(g);
  const ExpVec unit(p.grid().count(), 0);
  for (const auto& [e, c] : p.terms()) {
    RatPoly acc = RatPoly::monomial(g, unit, Rat(c));
    for (std::size_t v = 0; v < e.size(); ++v)
      for (std::int32_t k = 0; k < e[v]; ++k) acc = acc * images[v];
    out = out + acc;
  }
  return out;
}

template <class C>
RatPoly to_rational(const BasicPoly<C>& p) {
  RatPoly out(p.grid());
  for (const auto& [e, c] : p.terms()) out.add_term(e, Rat(c));
  return out;
}

enum class MonomialNorm { Unit, FactorialWeighted };

// Squared norms of the weight components: for each character, the sum of
// squared coefficients of the monomials mapping to it (optionally divided
// by the product of exponent factorials).
template <class C>
std::map<Character, Rat> component_norms(const BasicPoly<C>& p, MonomialNorm norm) {
  if (p.is_zero()) throw ValidationError("component_norms: zero polynomial");
  std::map<Character, Rat> out;
  for (const auto& [e, c] : p.terms()) {
    Rat n2 = Rat(c) * Rat(c);
    if (norm == MonomialNorm::FactorialWeighted) {
      Int f = 1;
      for (auto x : e)
        for (std::int32_t i = 2; i <= x; ++i) f *= i;
      n2 /= Rat(f);
    }
    out[character_of(p, e)] += n2;
  }
  return out;
}

}  // namespace polystab
