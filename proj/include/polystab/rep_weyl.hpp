#pragma once

#include "polystab/polytope.hpp"
#include "polystab/sympoly.hpp"

namespace polystab {

// Weakly decreasing nonnegative integer vector.
class Partition {
 public:
  static Partition validated(IntVec parts);
  const IntVec& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

 private:
  IntVec parts_;
};

// Convex hull of all coordinate permutations of the partition.
LatticePolytope orbit_polytope(const Partition& lam);

// Hull of the 0/1 vectors in Z^l with exactly k ones.
LatticePolytope hypersimplex(const Int& k, const Int& l);

// Dominance order: every prefix sum of lam is at most the matching prefix
// sum of mu (shorter vector padded with zeros).
bool dominance_leq(const Partition& lam, const Partition& mu);

// Smallest k >= 0 with poly contained in k times the standard simplex up
// to translation by the diagonal.
Int q_degree(const LatticePolytope& poly);

// The support spans the expected module polytope.
bool is_generic(const WeightSupport& support, const LatticePolytope& module_polytope);

// Every permutation of lam appears in the support.
bool genericity_certificate(const WeightSupport& support, const Partition& lam);

}  // namespace polystab
