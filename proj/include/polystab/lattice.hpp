#pragma once

#include "polystab/ints.hpp"

namespace polystab {

// Exponent vector of a Laurent monomial on the diagonal torus of GL(D).
using Character = IntVec;

// Integer cocharacter of the torus, constrained to the SL slice: the
// coordinates sum to zero. Construct through validated() so the invariant
// holds everywhere downstream.
class OneParamSubgroup {
 public:
  static OneParamSubgroup validated(IntVec coords);

  std::size_t size() const { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  const IntVec& coords() const { return coords_; }

  friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;

 private:
  explicit OneParamSubgroup(IntVec c) : coords_(std::move(c)) {}
  IntVec coords_;
};

// <lambda, chi> = sum_i lambda_i chi_i.
Int pairing(const OneParamSubgroup& lambda, const Character& chi);

// Same bilinear form on raw integer vectors; used for facet functionals that
// are not themselves sum-zero.
Int pairing_raw(const IntVec& l, const IntVec& chi);

// Characters are identified when they differ by an integer multiple of
// (1,...,1): the diagonal acts trivially on the projectivization.
bool quotient_equal(const Character& a, const Character& b);

// Orthogonal-free canonical form: subtract chi_last * (1,...,1) so the last
// coordinate is zero. Two characters are quotient_equal iff their canonical
// forms coincide.
Character quotient_canonical(const Character& chi);

}  // namespace polystab
