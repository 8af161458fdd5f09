#pragma once

#include <optional>
#include <string>

#include "polystab/polytope.hpp"
#include "polystab/sympoly.hpp"

namespace polystab {

// A pair of torus-weighted vectors, each known through its character
// support (with multiplicities) and its degree.
class StabilityPair {
 public:
  static StabilityPair validated(WeightSupport support_v, Int deg_v, WeightSupport support_w,
                                 Int deg_w, std::string label);

  const WeightSupport& support_v() const { return support_v_; }
  const WeightSupport& support_w() const { return support_w_; }
  const Int& deg_v() const { return deg_v_; }
  const Int& deg_w() const { return deg_w_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return support_v_.dim; }

 private:
  WeightSupport support_v_, support_w_;
  Int deg_v_ = 0, deg_w_ = 0;
  std::string label_;
};

enum class Verdict { SemistableAlong, Destabilizing };

struct DegenerationReport {
  IntVec lambda;  // coordinates of a validated sum-zero cocharacter
  Int weight_v = 0;
  Int weight_w = 0;
  Int futaki_value = 0;
  Verdict verdict = Verdict::SemistableAlong;
};

// Minimum pairing of the cocharacter against the support points.
Int weight(const WeightSupport& support, const OneParamSubgroup& lambda);

// deg_v * weight(w) - deg_w * weight(v); positive means lambda
// destabilizes the pair.
Int futaki(const StabilityPair& pair, const OneParamSubgroup& lambda);

DegenerationReport degeneration_report(const StabilityPair& pair, const OneParamSubgroup& lambda);

struct SemistabilityResult {
  bool semistable = false;
  std::optional<DegenerationReport> certificate;  // present iff destabilized
};

// Polytope criterion: deg_w * N(v) inside deg_v * N(w) modulo the
// diagonal; on failure returns a destabilizing cocharacter.
SemistabilityResult is_semistable(const StabilityPair& pair);

// Smallest m >= 1 such that for all m' >= m
//   (m'-1) deg_w N(v) + deg_v deg_w S  is inside  m' deg_v N(w)
// modulo the diagonal, where S is the standard simplex; nullopt when no
// such m exists.
std::optional<Int> find_m0(const StabilityPair& pair);

// Reports for every nonzero sum-zero cocharacter with coordinates in
// [-radius, radius], in lexicographic order.
std::vector<DegenerationReport> scan_box(const StabilityPair& pair, const Int& radius);

// Radius sufficient for scan_box to witness any destabilization: the
// largest coordinate magnitude over the inclusion constraints.
Int certificate_radius(const StabilityPair& pair);

// Fitted slope of log squared-norm decay along lambda(t): finite
// difference of log E(t) against log t^2 between the last two grid
// points, computed with the given mantissa precision.
Rat energy_slope(const std::map<Character, Rat>& norms2, const OneParamSubgroup& lambda,
                 const std::vector<Rat>& t_grid, unsigned precision_bits);

template <class C>
Rat energy_slope(const BasicPoly<C>& p, const OneParamSubgroup& lambda,
                 const std::vector<Rat>& t_grid, MonomialNorm norm, unsigned precision_bits) {
  return energy_slope(component_norms(p, norm), lambda, t_grid, precision_bits);
}

// Slope of the pair energy deg_v log E_w - deg_w log E_v with support
// multiplicities as squared norms; approaches the futaki value.
Rat pair_energy_slope(const StabilityPair& pair, const OneParamSubgroup& lambda,
                      const std::vector<Rat>& t_grid, unsigned precision_bits);

// Re-derives the per-monomial torus exponents and confirms that, after
// shifting by weight(), they are all nonnegative with at least one zero.
template <class C>
bool weight_limit_check(const BasicPoly<C>& p, const OneParamSubgroup& lambda) {
  const Int w = weight(weight_support(p), lambda);
  bool hit = false;
  for (const auto& [e, c] : p.terms()) {
    Int shifted = pairing(lambda, character_of(p, e)) - w;
    if (shifted < 0) return false;
    if (shifted == 0) hit = true;
  }
  return hit;
}

// deg of the hyperdiscriminant of an n-fold of degree d with given d*mu.
Rat hyperdiscriminant_degree(const Int& n, const Int& d, const Rat& mu_times_d);

Rat veronese_mu_times_d(const Int& n);
Rat curve_mu_times_d(const Int& genus);
Rat complete_intersection_mu_times_d(const Int& n, const IntVec& degrees);

Rat veronese_hyperdiscriminant_degree(const Int& n, const Int& d);
Rat curve_hyperdiscriminant_degree(const Int& d, const Int& genus);
Rat complete_intersection_hyperdiscriminant_degree(const Int& n, const IntVec& degrees);

// (resultant, discriminant) pair of the degree-d rational normal curve.
StabilityPair curve_pair(int d);

}  // namespace polystab
