#pragma once

#include <cstdint>
#include <vector>

#include "polystab/kernels.hpp"
#include "polystab/lattice.hpp"
#include "polystab/linalg.hpp"

namespace polystab {

// Inward halfspace <normal, x> >= offset. Normals are primitive and lie in
// the direction space of the affine hull, lifted canonically (row space of
// the vertex-difference lattice), so the representation is unique.
struct Facet {
  IntVec normal;
  Int offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

// Affine-hull equation <normal, x> == offset. The normals are the rows of
// the Hermite basis of the integral kernel of the direction space.
struct HullEquation {
  IntVec normal;
  Int offset;
  friend bool operator==(const HullEquation&, const HullEquation&) = default;
};

// Convex hull of finitely many lattice points, kept in a canonical exact
// form: lex-sorted vertices, a complete facet/equation description, and the
// Hermite basis of the vertex-difference lattice.
class LatticePolytope {
 public:
  static LatticePolytope hull(const std::vector<Character>& points);

  std::size_t ambient_dim() const { return base_point_.size(); }
  int dim() const { return static_cast<int>(affine_basis_.size()); }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<HullEquation>& equations() const { return equations_; }
  const IntMat& affine_basis() const { return affine_basis_; }
  const IntVec& base_point() const { return base_point_; }

  bool contains(const IntVec& p) const;
  // Membership of the line p + t(1,...,1): the quotient-by-diagonal reading.
  bool contains_quotient(const IntVec& p) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;
  std::vector<IntVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<HullEquation> equations_;
  IntMat affine_basis_;
  IntVec base_point_;
  friend LatticePolytope scale(const LatticePolytope&, const Int&);
};

// k >= 0; k = 0 collapses to the origin.
LatticePolytope scale(const LatticePolytope& p, const Int& k);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

// min over P of <lambda, x>; equals the support function value at -lambda up
// to sign and is attained at a vertex.
Int support_min(const LatticePolytope& p, const OneParamSubgroup& lambda);
Int support_min_raw(const LatticePolytope& p, const IntVec& l);

enum class InclusionMode { Ambient, Quotient };

// inner subset of outer, either literally or after adding R(1,...,1) to both.
bool includes(const LatticePolytope& outer, const LatticePolytope& inner, InclusionMode mode);

// All lattice points of P in lex order. Throws CapError when the result (or
// the bounding-box enumeration) would exceed cap.
std::vector<IntVec> lattice_points(const LatticePolytope& p, std::uint64_t cap = 1000000);

// A complete system of sum-zero conditions cutting out P + R(1,...,1):
// every sum-zero functional l has min over P of <l,x> equal to the best
// bound implied by these rows, so they decide quotient inclusion questions.
struct QuotientConstraint {
  IntVec functional;
  Int offset;
  bool is_equality = false;
};
std::vector<QuotientConstraint> quotient_constraints(const LatticePolytope& p);

// Hull of the unit vectors e_1..e_D: weight polytope of the defining torus
// action on a D-dimensional space.
LatticePolytope standard_simplex(std::size_t dim);

}  // namespace polystab
