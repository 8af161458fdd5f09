#include "polystab/rep_weyl.hpp"

#include <algorithm>
#include <map>

namespace polystab {

namespace {

constexpr std::size_t kMaxOrbit = 200000;

// Number of distinct permutations, bailing out early past the cap.
std::size_t orbit_size_capped(const IntVec& parts) {
  std::map<Int, int> mult;
  for (const auto& x : parts) ++mult[x];
  Int count = 1;
  int placed = 0;
  for (const auto& [value, m] : mult) {
    for (int i = 1; i <= m; ++i) {
      ++placed;
      count = count * placed / i;  // running multinomial, always exact
      if (count > Int(kMaxOrbit)) return kMaxOrbit + 1;
    }
  }
  return static_cast<std::size_t>(count);
}

std::vector<IntVec> distinct_permutations(IntVec sorted_ascending) {
  std::vector<IntVec> out;
  do {
    out.push_back(sorted_ascending);
  } while (std::next_permutation(sorted_ascending.begin(), sorted_ascending.end()));
  return out;
}

}  // namespace

Partition Partition::validated(IntVec parts) {
  if (parts.empty()) throw ValidationError("partition: empty");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw ValidationError("partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw ValidationError("partition: parts must be weakly decreasing");
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

LatticePolytope orbit_polytope(const Partition& lam) {
  const IntVec& parts = lam.parts();
  if (parts.size() > 10) throw CapError("orbit_polytope: dimension above 10");
  if (orbit_size_capped(parts) > kMaxOrbit)
    throw CapError("orbit_polytope: orbit larger than 200000 points");
  IntVec asc(parts.rbegin(), parts.rend());
  return LatticePolytope::hull(distinct_permutations(std::move(asc)));
}

LatticePolytope hypersimplex(const Int& k, const Int& l) {
  if (!(k > 0 && k < l)) throw ValidationError("hypersimplex: need 0 < k < l");
  if (l > 10) throw CapError("hypersimplex: dimension above 10");
  IntVec parts(static_cast<std::size_t>(l), Int(0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) parts[i] = 1;
  return orbit_polytope(Partition::validated(std::move(parts)));
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
  const std::size_t n = std::max(lam.size(), mu.size());
  Int sl = 0, sm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < lam.size()) sl += lam.parts()[i];
    if (i < mu.size()) sm += mu.parts()[i];
    if (sl > sm) return false;
  }
  return true;
}

Int q_degree(const LatticePolytope& poly) {
  const LatticePolytope simplex = standard_simplex(poly.ambient_dim());
  auto fits = [&](const Int& k) {
    return includes(scale(simplex, k), poly, InclusionMode::Quotient);
  };
  if (fits(0)) return 0;
  Int hi = 1;
  while (!fits(hi)) {
    hi *= 2;
    if (hi > (Int(1) << 32)) throw InternalError("q_degree: no bound found");
  }
  Int lo = hi / 2;  // fits(lo) is false, fits(hi) is true
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    (fits(mid) ? hi : lo) = mid;
  }
  if (fits(hi - 1)) throw InternalError("q_degree: containment not monotone");
  return hi;
}

bool is_generic(const WeightSupport& support, const LatticePolytope& module_polytope) {
  if (support.dim != module_polytope.ambient_dim())
    throw DimensionError("is_generic: dimension mismatch");
  std::vector<Character> pts;
  pts.reserve(support.points.size());
  for (const auto& [chi, mult] : support.points) pts.push_back(chi);
  return LatticePolytope::hull(pts) == module_polytope;
}

bool genericity_certificate(const WeightSupport& support, const Partition& lam) {
  if (support.dim != lam.size())
    throw DimensionError("genericity_certificate: dimension mismatch");
  if (orbit_size_capped(lam.parts()) > kMaxOrbit)
    throw CapError("genericity_certificate: orbit larger than 200000 points");
  IntVec asc(lam.parts().rbegin(), lam.parts().rend());
  for (const IntVec& perm : distinct_permutations(std::move(asc)))
    if (!support.points.contains(perm)) return false;
  return true;
}

}  // namespace polystab
