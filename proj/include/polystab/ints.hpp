#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
// Dynamic-precision float for the energy functional; precision is set per
// computation in bits, never relied on globally.
using Real = boost::multiprecision::mpfr_float;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

// Base class for all input/validation failures surfaced to callers.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : ValidationError {
  using ValidationError::ValidationError;
};

// A documented size cap was exceeded (degrees, dimensions, enumeration caps).
struct CapError : ValidationError {
  using ValidationError::ValidationError;
};

// Internal invariant broke; a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw InternalError("floor_div: zero divisor");
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int vec_gcd(std::span<const Int> v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

// Divides v by its gcd, keeping orientation (facet normals stay inward).
// Zero vectors pass through. Returns the positive factor divided out.
inline Int reduce_by_gcd(IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) return 1;
  for (Int& x : v) x /= g;
  return g;
}

// reduce_by_gcd plus a canonical sign: first nonzero entry positive.
inline void make_primitive(IntVec& v) {
  reduce_by_gcd(v);
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : v) y = -y;
      break;
    }
  }
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace polystab
