// Standalone acceptance gate: one line per criterion, exit 0 only if every
// criterion passes inside its time budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "polystab/rep_weyl.hpp"
#include "polystab/stability.hpp"

using namespace polystab;
using testutil::Rng;

namespace {

struct Criterion {
  std::string name;
  long budget_ms;  // 0 = no budget enforced
  std::function<std::optional<std::string>()> check;
};

std::optional<std::string> fail(const std::string& msg) { return msg; }

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

WeightSupport make_support(std::size_t dim, const std::vector<std::pair<IntVec, long>>& pts) {
  WeightSupport s;
  s.dim = dim;
  for (const auto& [chi, mult] : pts) s.points[chi] = Int(mult);
  return s;
}

// Up to npts distinct characters of the given total degree; collisions
// merge, so low degrees in low dimensions may yield fewer points.
WeightSupport random_support(Rng& rng, std::size_t dim, long deg, std::size_t npts) {
  WeightSupport s;
  s.dim = dim;
  for (std::size_t k = 0; k < npts; ++k) {
    IntVec chi(dim, Int(0));
    for (long u = 0; u < deg; ++u)
      ++chi[static_cast<std::size_t>(rng.range(0, static_cast<long>(dim) - 1))];
    s.points[chi] = rng.int_range(1, 3);
  }
  return s;
}

LatticePolytope hull_of_support(const WeightSupport& s) {
  std::vector<Character> pts;
  for (const auto& [chi, mult] : s.points) pts.push_back(chi);
  return LatticePolytope::hull(pts);
}

// Weakly decreasing nonnegative length-len vectors with the given total.
void padded_partitions(long total, std::size_t len, long maxpart, IntVec& acc,
                       std::vector<IntVec>& out) {
  if (acc.size() == len) {
    if (total == 0) out.push_back(acc);
    return;
  }
  for (long p = std::min(maxpart, total); p >= 0; --p) {
    acc.push_back(Int(p));
    padded_partitions(total - p, len, p, acc, out);
    acc.pop_back();
  }
}

std::optional<std::string> discriminant_degrees() {
  for (int d = 2; d <= 5; ++d) {
    Int got = total_degree(discriminant(d));
    if (got != Int(2 * d - 2))
      return fail("degree " + std::to_string(d) + ": total_degree " + got.str());
  }
  return std::nullopt;
}

std::optional<std::string> resultant_degrees() {
  for (int d = 2; d <= 4; ++d) {
    IntPoly r = sylvester_resultant(d, d);
    if (total_degree(r) != Int(2 * d))
      return fail("degree " + std::to_string(d) + ": wrong total degree");
    if (row_degrees(r) != std::vector<Int>{Int(d), Int(d)})
      return fail("degree " + std::to_string(d) + ": wrong row degrees");
  }
  return std::nullopt;
}

std::optional<std::string> scaled_hull_inclusion() {
  for (int d = 2; d <= 3; ++d) {
    auto nd = newton_polytope(discriminant(d));
    auto nr = newton_polytope(sylvester_resultant(d, d));
    bool ok = includes(scale(nd, Int(2 * d)), scale(nr, Int(2 * d - 2)), InclusionMode::Quotient);
    if (!ok) return fail("inclusion fails at degree " + std::to_string(d));
  }
  return std::nullopt;
}

std::optional<std::string> hypersimplex_inclusion() {
  const std::vector<std::pair<long, long>> cases{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}};
  for (auto [n, N] : cases) {
    auto outer = scale(hypersimplex(Int(n), Int(N + 1)), Int(n + 1));
    auto inner = scale(hypersimplex(Int(n + 1), Int(N + 1)), Int(n));
    if (!includes(outer, inner, InclusionMode::Ambient))
      return fail("fails at n=" + std::to_string(n) + " N=" + std::to_string(N));
    if (!includes(outer, inner, InclusionMode::Quotient))
      return fail("quotient reading fails at n=" + std::to_string(n));
  }
  return std::nullopt;
}

std::optional<std::string> dominance_equivalence() {
  long checked = 0;
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (long total = 0; total <= 6; ++total) {
      std::vector<IntVec> parts;
      IntVec acc;
      padded_partitions(total, dim, total, acc, parts);
      std::vector<LatticePolytope> orbits;
      std::vector<Partition> ps;
      for (const auto& p : parts) {
        ps.push_back(Partition::validated(p));
        orbits.push_back(orbit_polytope(ps.back()));
      }
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
          bool dom = dominance_leq(ps[i], ps[j]);
          bool inc = includes(orbits[j], orbits[i], InclusionMode::Ambient);
          if (dom != inc) {
            std::ostringstream ss;
            ss << "disagreement at dim " << dim << " total " << total << " pair " << i << ","
               << j;
            return fail(ss.str());
          }
          ++checked;
        }
    }
  }
  if (checked < 100) return fail("too few pairs enumerated");
  return std::nullopt;
}

std::optional<std::string> weight_limit_consistency() {
  Rng rng(900);
  for (int it = 0; it < 100; ++it) {
    std::size_t dim = static_cast<std::size_t>(rng.range(2, 5));
    VarGrid g{1, static_cast<std::int32_t>(dim)};
    IntPoly p(g);
    int terms = static_cast<int>(rng.range(1, 6));
    for (int t = 0; t < terms; ++t) {
      ExpVec e(dim);
      for (auto& x : e) x = static_cast<std::int32_t>(rng.range(0, 6));
      Int c = rng.int_range(1, 9);
      if (rng.range(0, 1) == 1) c = -c;
      p.add_term(e, c);
    }
    if (p.is_zero()) p.add_term(ExpVec(dim, 1), Int(1));
    auto lam = OneParamSubgroup::validated(rng.sum_zero_vec(dim, -5, 5));

    Int direct = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      Int v = pairing(lam, character_of(p, e));
      if (first || v < direct) direct = v;
      first = false;
    }
    if (weight(weight_support(p), lam) != direct) return fail("weight disagrees with direct scan");
    if (!weight_limit_check(p, lam)) return fail("limit certificate rejected");
  }
  return std::nullopt;
}

std::optional<std::string> slope_asymptotics() {
  const std::vector<Rat> grid{Rat(1) / 1000, Rat(1) / 10000, Rat(1) / 100000, Rat(1) / 1000000};
  Rng rng(901);
  for (int d : {2, 3}) {
    auto pair = curve_pair(d);
    for (int it = 0; it < 10; ++it) {
      auto lam = OneParamSubgroup::validated(rng.sum_zero_vec(pair.dim(), -3, 3));
      Rat slope = pair_energy_slope(pair, lam, grid, 256);
      Rat diff = slope - Rat(futaki(pair, lam));
      if (diff < 0) diff = -diff;
      if (diff >= Rat(1) / 100) {
        std::ostringstream ss;
        ss << "slope off by " << static_cast<double>(diff) << " at degree " << d;
        return fail(ss.str());
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> sign_equivalence() {
  Rng rng(902);
  int semistable_seen = 0, destabilized_seen = 0, attempts = 0;
  while ((semistable_seen < 10 || destabilized_seen < 10) && attempts < 500) {
    ++attempts;
    std::size_t dim = static_cast<std::size_t>(rng.range(2, 4));
    long deg_v = rng.range(1, 3), deg_w = rng.range(1, 3);
    StabilityPair pair = StabilityPair::validated(
        random_support(rng, dim, deg_v, static_cast<std::size_t>(rng.range(1, 4))), Int(deg_v),
        random_support(rng, dim, deg_w, static_cast<std::size_t>(rng.range(1, 4))), Int(deg_w),
        "case");
    if (certificate_radius(pair) > 12) continue;  // keep the exhaustive scan cheap
    auto res = is_semistable(pair);
    if (res.semistable && semistable_seen >= 10) continue;
    if (!res.semistable && destabilized_seen >= 10) continue;

    if (!res.semistable) {
      if (!res.certificate.has_value()) return fail("missing certificate");
      const auto& c = *res.certificate;
      Int sum = 0;
      for (const auto& x : c.lambda) sum += x;
      if (sum != 0) return fail("certificate is not sum-zero");
      if (c.futaki_value <= 0) return fail("certificate does not destabilize");
      if (futaki(pair, OneParamSubgroup::validated(c.lambda)) != c.futaki_value)
        return fail("certificate values do not recompute");
    }

    bool any_positive = false;
    for (const auto& rep : scan_box(pair, certificate_radius(pair)))
      if (rep.futaki_value > 0) any_positive = true;
    if (any_positive == res.semistable) return fail("box scan contradicts verdict");

    (res.semistable ? semistable_seen : destabilized_seen) += 1;
  }
  if (semistable_seen < 10 || destabilized_seen < 10)
    return fail("could not construct 10 pairs of each kind");
  return std::nullopt;
}

std::optional<std::string> threshold_oracle() {
  std::vector<StabilityPair> pairs;
  // second member spanning the full simplex (threshold 1)
  for (std::size_t dim : {2, 3, 4}) {
    WeightSupport sw;
    sw.dim = dim;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec corner(dim, Int(0));
      corner[i] = Int(2);
      sw.points[corner] = 1;
    }
    WeightSupport sv;
    sv.dim = dim;
    IntVec mid(dim, Int(0));
    mid[0] = mid[dim - 1] = Int(1);
    sv.points[mid] = 1;
    sv.points[sw.points.begin()->first] = 1;
    pairs.push_back(StabilityPair::validated(sv, Int(2), sw, Int(2), "wide"));
  }
  // thin second members force larger thresholds
  pairs.push_back(StabilityPair::validated(make_support(2, {{iv({1, 1}), 1}}), Int(2),
                                           make_support(2, {{iv({2, 1}), 1}, {iv({1, 2}), 1}}),
                                           Int(3), "thin-a"));
  pairs.push_back(StabilityPair::validated(make_support(2, {{iv({2, 2}), 1}}), Int(4),
                                           make_support(2, {{iv({2, 1}), 1}, {iv({1, 2}), 1}}),
                                           Int(3), "thin-b"));
  pairs.push_back(StabilityPair::validated(
      make_support(2, {{iv({1, 1}), 1}}), Int(2),
      make_support(2, {{iv({3, 1}), 1}, {iv({1, 3}), 1}, {iv({2, 2}), 1}}), Int(4), "thin-c"));
  pairs.push_back(StabilityPair::validated(
      make_support(3, {{iv({1, 1, 1}), 1}}), Int(3),
      make_support(3, {{iv({2, 1, 0}), 1}, {iv({0, 2, 1}), 1}, {iv({1, 0, 2}), 1}}), Int(3),
      "thin-d"));
  pairs.push_back(StabilityPair::validated(
      make_support(2, {{iv({1, 1}), 1}}), Int(2),
      make_support(2, {{iv({2, 0}), 1}, {iv({0, 2}), 1}}), Int(2), "segment"));
  pairs.push_back(StabilityPair::validated(
      make_support(3, {{iv({1, 1, 0}), 1}, {iv({0, 1, 1}), 1}}), Int(2),
      make_support(3, {{iv({2, 0, 0}), 1}, {iv({0, 2, 0}), 1}, {iv({0, 0, 2}), 1}}), Int(2),
      "edges"));
  pairs.push_back(StabilityPair::validated(
      make_support(4, {{iv({1, 1, 0, 0}), 1}, {iv({0, 0, 1, 1}), 1}}), Int(2),
      make_support(4, {{iv({2, 0, 0, 0}), 1},
                       {iv({0, 2, 0, 0}), 1},
                       {iv({0, 0, 2, 0}), 1},
                       {iv({0, 0, 0, 2}), 1}}),
      Int(2), "edges-4"));
  if (pairs.size() != 10) return fail("expected 10 constructed pairs");

  int with_threshold = 0;
  for (const auto& pair : pairs) {
    auto m0 = find_m0(pair);
    if (!m0.has_value()) return fail("pair '" + pair.label() + "' has no threshold");
    ++with_threshold;
    auto pv = hull_of_support(pair.support_v());
    auto pw = hull_of_support(pair.support_w());
    const Int a = pair.deg_w(), b = pair.deg_v();
    auto simplex = standard_simplex(pair.dim());
    auto holds_at = [&](const Int& m) {
      auto lhs = minkowski_sum(scale(pv, (m - 1) * a), scale(simplex, a * b));
      return includes(scale(pw, m * b), lhs, InclusionMode::Quotient);
    };
    const std::vector<Int> above{*m0, Int(*m0 + 1), Int(*m0 + 7)};
    for (const Int& m : above)
      if (!holds_at(m)) return fail("pair '" + pair.label() + "' fails at m >= m0");
    if (*m0 > 1 && holds_at(*m0 - 1))
      return fail("pair '" + pair.label() + "' already holds below m0");
  }
  if (with_threshold != 10) return fail("not all pairs produced thresholds");
  return std::nullopt;
}

std::optional<std::string> degree_formulas(const char* stage) {
  if (std::string(stage) == "veronese") {
    for (long n : {1L, 2L, 3L, 4L, 5L})
      for (long d : {2L, 3L})
        if (veronese_hyperdiscriminant_degree(Int(n), Int(d)) != Rat(n * (n + 1) * (d - 1)))
          return fail("veronese mismatch");
    return std::nullopt;
  }
  if (std::string(stage) == "curve") {
    for (long d : {2L, 3L, 4L, 5L, 6L})
      for (long g : {0L, 1L})
        if (curve_hyperdiscriminant_degree(Int(d), Int(g)) != Rat(2 * d - 2 + 2 * g))
          return fail("curve mismatch");
    for (int d = 2; d <= 5; ++d)
      if (curve_hyperdiscriminant_degree(Int(d), Int(0)) != Rat(total_degree(discriminant(d))))
        return fail("curve g=0 disagrees with the symbolic degree");
    return std::nullopt;
  }
  const std::vector<std::pair<long, std::vector<long>>> ci_cases{
      {1, {2}}, {1, {3}}, {1, {2, 2}}, {2, {2}}, {2, {3}},
      {2, {2, 2}}, {2, {2, 3}}, {3, {2}}, {3, {2, 2}}, {3, {2, 2, 2}}};
  for (const auto& [n, ds] : ci_cases) {
    Int prod = 1, sum = 0;
    IntVec degs;
    for (long d : ds) {
      prod *= d;
      sum += d;
      degs.push_back(Int(d));
    }
    Rat expect(Int(n) * prod * (sum - Int(static_cast<long>(ds.size()))));
    if (complete_intersection_hyperdiscriminant_degree(Int(n), degs) != expect)
      return fail("complete intersection mismatch");
  }
  return std::nullopt;
}

std::optional<std::string> property_suites() {
  // support-function additivity under Minkowski sums and scaling
  Rng rng(903);
  for (int it = 0; it < 200; ++it) {
    std::size_t dim = static_cast<std::size_t>(rng.range(1, 4));
    auto a = LatticePolytope::hull(rng.points(static_cast<std::size_t>(rng.range(1, 6)), dim, -5, 5));
    auto b = LatticePolytope::hull(rng.points(static_cast<std::size_t>(rng.range(1, 6)), dim, -5, 5));
    IntVec l = rng.vec(dim, -6, 6);
    if (support_min_raw(minkowski_sum(a, b), l) != support_min_raw(a, l) + support_min_raw(b, l))
      return fail("additivity fails at case " + std::to_string(it));
    Int k = rng.int_range(0, 5);
    if (support_min_raw(scale(a, k), l) != k * support_min_raw(a, l))
      return fail("scaling fails at case " + std::to_string(it));
  }

  // conjugation covariance under coordinate relabeling
  Rng rng2(904);
  for (int it = 0; it < 200; ++it) {
    std::size_t dim = static_cast<std::size_t>(rng2.range(2, 4));
    long deg_v = rng2.range(1, 3), deg_w = rng2.range(1, 3);
    auto pair = StabilityPair::validated(
        random_support(rng2, dim, deg_v, static_cast<std::size_t>(rng2.range(1, 3))), Int(deg_v),
        random_support(rng2, dim, deg_w, static_cast<std::size_t>(rng2.range(1, 3))), Int(deg_w),
        "case");

    std::vector<std::size_t> perm(dim);
    for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
    for (std::size_t i = dim; i > 1; --i) std::swap(perm[i - 1], perm[rng2.raw() % i]);
    auto relabel = [&](const WeightSupport& s) {
      WeightSupport out;
      out.dim = s.dim;
      for (const auto& [chi, mult] : s.points) {
        IntVec moved(dim);
        for (std::size_t i = 0; i < dim; ++i) moved[perm[i]] = chi[i];
        out.points[moved] = mult;
      }
      return out;
    };
    auto moved = StabilityPair::validated(relabel(pair.support_v()), pair.deg_v(),
                                          relabel(pair.support_w()), pair.deg_w(), "moved");

    IntVec l = rng2.sum_zero_vec(dim, -4, 4);
    IntVec lmoved(dim);
    for (std::size_t i = 0; i < dim; ++i) lmoved[perm[i]] = l[i];
    if (futaki(moved, OneParamSubgroup::validated(lmoved)) !=
        futaki(pair, OneParamSubgroup::validated(l)))
      return fail("pairing covariance fails at case " + std::to_string(it));
    if (is_semistable(moved).semistable != is_semistable(pair).semistable)
      return fail("verdict covariance fails at case " + std::to_string(it));
  }
  return std::nullopt;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 discriminant total degrees 2d-2 (d=2..5)", 10000, discriminant_degrees},
      {"2 resultant degrees 2d with row degrees (d,d) (d=2..4)", 30000, resultant_degrees},
      {"3 scaled exponent-hull inclusion (d=2,3)", 60000, scaled_hull_inclusion},
      {"4 rescaled hypersimplex inclusions (5 cases)", 5000, hypersimplex_inclusion},
      {"5 dominance matches orbit-hull inclusion (exhaustive)", 60000, dominance_equivalence},
      {"6 weight limit consistency (100 seeded cases)", 0, weight_limit_consistency},
      {"7 energy slope matches the invariant within 1e-2", 10000, slope_asymptotics},
      {"8 box-scan sign equivalence (10 + 10 pairs)", 0, sign_equivalence},
      {"9 stepwise threshold oracle (10 constructed pairs)", 0, threshold_oracle},
      {"10a closed degree formulas: veronese", 0, [] { return degree_formulas("veronese"); }},
      {"10b closed degree formulas: curves", 0, [] { return degree_formulas("curve"); }},
      {"10c closed degree formulas: complete intersections", 0, [] { return degree_formulas("ci"); }},
      {"11 additivity and covariance property suites (200 cases each)", 0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> err;
    try {
      err = c.check();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!err && c.budget_ms > 0 && ms > c.budget_ms)
      err = "exceeded budget of " + std::to_string(c.budget_ms) + " ms";
    if (err) {
      ++failures;
      std::printf("FAIL %s: %s (%lld ms)\n", c.name.c_str(), err->c_str(),
                  static_cast<long long>(ms));
    } else {
      std::printf("PASS %s (%lld ms)\n", c.name.c_str(), static_cast<long long>(ms));
    }
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
