#include "polystab/stability.hpp"

#include <mpfr.h>

#include "polystab/kernels.hpp"

namespace polystab {

namespace {

LatticePolytope hull_of(const WeightSupport& s) {
  std::vector<Character> pts;
  pts.reserve(s.points.size());
  for (const auto& [chi, mult] : s.points) pts.push_back(chi);
  return LatticePolytope::hull(pts);
}

void check_support(const WeightSupport& s, const Int& deg, const char* which) {
  if (s.points.empty())
    throw ValidationError(std::string("stability pair: empty support for ") + which);
  if (deg < 1) throw ValidationError(std::string("stability pair: degree below 1 for ") + which);
  for (const auto& [chi, mult] : s.points) {
    if (chi.size() != s.dim)
      throw DimensionError(std::string("stability pair: ragged support for ") + which);
    if (mult < 1)
      throw ValidationError(std::string("stability pair: nonpositive multiplicity for ") + which);
    Int sum = 0;
    for (const auto& x : chi) {
      if (x < 0)
        throw ValidationError(std::string("stability pair: negative exponent for ") + which);
      sum += x;
    }
    if (sum != deg)
      throw ValidationError(std::string("stability pair: support point degree mismatch for ") +
                            which);
  }
}

}  // namespace

StabilityPair StabilityPair::validated(WeightSupport support_v, Int deg_v,
                                       WeightSupport support_w, Int deg_w, std::string label) {
  if (support_v.dim == 0 || support_v.dim != support_w.dim)
    throw DimensionError("stability pair: supports must share a positive dimension");
  check_support(support_v, deg_v, "v");
  check_support(support_w, deg_w, "w");
  StabilityPair p;
  p.support_v_ = std::move(support_v);
  p.support_w_ = std::move(support_w);
  p.deg_v_ = std::move(deg_v);
  p.deg_w_ = std::move(deg_w);
  p.label_ = std::move(label);
  return p;
}

Int weight(const WeightSupport& support, const OneParamSubgroup& lambda) {
  if (support.points.empty()) throw ValidationError("weight: empty support");
  if (lambda.size() != support.dim) throw DimensionError("weight: rank mismatch");
  bool first = true;
  Int best = 0;
  for (const auto& [chi, mult] : support.points) {
    Int v = pairing(lambda, chi);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

Int futaki(const StabilityPair& pair, const OneParamSubgroup& lambda) {
  return pair.deg_v() * weight(pair.support_w(), lambda) -
         pair.deg_w() * weight(pair.support_v(), lambda);
}

DegenerationReport degeneration_report(const StabilityPair& pair,
                                       const OneParamSubgroup& lambda) {
  DegenerationReport r;
  r.lambda = lambda.coords();
  r.weight_v = weight(pair.support_v(), lambda);
  r.weight_w = weight(pair.support_w(), lambda);
  r.futaki_value = pair.deg_v() * r.weight_w - pair.deg_w() * r.weight_v;
  r.verdict = r.futaki_value > 0 ? Verdict::Destabilizing : Verdict::SemistableAlong;
  return r;
}

SemistabilityResult is_semistable(const StabilityPair& pair) {
  const LatticePolytope inner = scale(hull_of(pair.support_v()), pair.deg_w());
  const LatticePolytope outer = scale(hull_of(pair.support_w()), pair.deg_v());
  if (includes(outer, inner, InclusionMode::Quotient)) return {true, std::nullopt};

  for (const QuotientConstraint& qc : quotient_constraints(outer)) {
    IntVec dir;
    if (support_min_raw(inner, qc.functional) < qc.offset) {
      dir = qc.functional;
    } else if (qc.is_equality) {
      IntVec neg(qc.functional.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -qc.functional[i];
      if (support_min_raw(inner, neg) < -qc.offset) dir = std::move(neg);
    }
    if (dir.empty()) continue;
    DegenerationReport r = degeneration_report(pair, OneParamSubgroup::validated(dir));
    if (r.futaki_value <= 0) throw InternalError("is_semistable: certificate does not destabilize");
    return {false, std::move(r)};
  }
  throw InternalError("is_semistable: inclusion failed but no violated constraint found");
}

std::optional<Int> find_m0(const StabilityPair& pair) {
  const LatticePolytope hull_v = hull_of(pair.support_v());
  const LatticePolytope hull_w = hull_of(pair.support_w());
  const Int& A = pair.deg_w();
  const Int& B = pair.deg_v();

  std::vector<std::pair<IntVec, Int>> directions;  // functional with its min over N(w)
  for (const QuotientConstraint& qc : quotient_constraints(hull_w)) {
    directions.emplace_back(qc.functional, qc.offset);
    if (qc.is_equality) {
      IntVec neg(qc.functional.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -qc.functional[i];
      directions.emplace_back(std::move(neg), -qc.offset);
    }
  }

  Int m0 = 1;
  for (const auto& [g, hq] : directions) {
    Int hp = support_min_raw(hull_v, g);
    Int hs = g[0];
    for (const auto& x : g) hs = std::min(hs, x);  // support min over the standard simplex
    Int slope = A * hp - B * hq;
    Int rhs = A * hp - A * B * hs;
    if (slope < 0) return std::nullopt;
    if (slope == 0) {
      if (rhs > 0) return std::nullopt;
      continue;
    }
    m0 = std::max(m0, ceil_div(rhs, slope));
  }
  return m0;
}

Int certificate_radius(const StabilityPair& pair) {
  const LatticePolytope outer = scale(hull_of(pair.support_w()), pair.deg_v());
  Int r = 1;
  for (const QuotientConstraint& qc : quotient_constraints(outer))
    for (const auto& x : qc.functional) {
      Int a = abs(x);
      if (a > r) r = std::move(a);
    }
  return r;
}

std::vector<DegenerationReport> scan_box(const StabilityPair& pair, const Int& radius) {
  if (radius < 0) throw ValidationError("scan_box: negative radius");
  const std::size_t dim = pair.dim();
  const Int side = 2 * radius + 1;
  Int cells = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    cells *= side;
    if (cells > (Int(1) << 24)) throw CapError("scan_box: box too large to enumerate");
  }

  std::vector<IntVec> lambdas;
  IntVec cur(dim, -radius);
  for (;;) {
    Int sum = 0;
    bool zero = true;
    for (const auto& x : cur) {
      sum += x;
      if (x != 0) zero = false;
    }
    if (sum == 0 && !zero) lambdas.push_back(cur);
    std::size_t k = dim;
    while (k > 0 && cur[k - 1] == radius) cur[--k] = -radius;
    if (k == 0) break;
    ++cur[k - 1];
  }

  return kernels::map_ordered<DegenerationReport>(lambdas, [&](const IntVec& l) {
    return degeneration_report(pair, OneParamSubgroup::validated(l));
  });
}

namespace {

Rat to_rational(const Real& x) {
  if (x == 0) return Rat(0);
  Int mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.backend().data(), x.backend().data());
  if (e >= 0) return Rat(mant * pow(Int(2), static_cast<unsigned>(e)));
  return Rat(mant) / Rat(pow(Int(2), static_cast<unsigned>(-e)));
}

Real to_real(const Rat& x) { return Real(numerator(x)) / Real(denominator(x)); }

Real pow_signed(const Real& base, const Int& exp) {
  if (abs(exp) > (Int(1) << 24)) throw CapError("energy_slope: exponent too large");
  long e = static_cast<long>(exp);
  if (e >= 0) return pow(base, static_cast<unsigned long>(e));
  return 1 / pow(base, static_cast<unsigned long>(-e));
}

struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned bits) : saved(Real::default_precision()) {
    if (bits < 16 || bits > 65536) throw ValidationError("precision bits out of range [16, 65536]");
    Real::default_precision(static_cast<unsigned>(bits * 0.3010299957) + 2);
  }
  ~PrecisionGuard() { Real::default_precision(saved); }
};

// log sum_chi m_chi t^(2 <lambda,chi>) for each grid point.
std::vector<Real> log_energies(const std::map<Character, Rat>& norms2,
                               const OneParamSubgroup& lambda, const std::vector<Rat>& t_grid) {
  std::vector<Real> out;
  out.reserve(t_grid.size());
  for (const Rat& t : t_grid) {
    Real tr = to_real(t);
    Real e = 0;
    for (const auto& [chi, n2] : norms2) {
      if (chi.size() != lambda.size()) throw DimensionError("energy_slope: rank mismatch");
      if (n2 <= 0) throw ValidationError("energy_slope: component norms must be positive");
      e += to_real(n2) * pow_signed(tr, 2 * pairing(lambda, chi));
    }
    out.push_back(log(e));
  }
  return out;
}

void check_grid(const std::vector<Rat>& t_grid) {
  if (t_grid.empty()) throw ValidationError("energy_slope: empty t grid");
  if (t_grid.size() < 2) throw ValidationError("energy_slope: need at least two grid points");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] <= 0 || t_grid[i] >= 1)
      throw ValidationError("energy_slope: grid points must lie in (0,1)");
    if (i > 0 && t_grid[i] >= t_grid[i - 1])
      throw ValidationError("energy_slope: grid must decrease");
  }
}

Real log_t2_step(const std::vector<Rat>& t_grid) {
  const std::size_t n = t_grid.size();
  return 2 * (log(to_real(t_grid[n - 1])) - log(to_real(t_grid[n - 2])));
}

}  // namespace

Rat energy_slope(const std::map<Character, Rat>& norms2, const OneParamSubgroup& lambda,
                 const std::vector<Rat>& t_grid, unsigned precision_bits) {
  check_grid(t_grid);
  if (norms2.empty()) throw ValidationError("energy_slope: empty component set");
  PrecisionGuard guard(precision_bits);
  std::vector<Real> f = log_energies(norms2, lambda, t_grid);
  const std::size_t n = f.size();
  return to_rational((f[n - 1] - f[n - 2]) / log_t2_step(t_grid));
}

Rat pair_energy_slope(const StabilityPair& pair, const OneParamSubgroup& lambda,
                      const std::vector<Rat>& t_grid, unsigned precision_bits) {
  check_grid(t_grid);
  PrecisionGuard guard(precision_bits);
  auto as_norms = [](const WeightSupport& s) {
    std::map<Character, Rat> m;
    for (const auto& [chi, mult] : s.points) m.emplace(chi, Rat(mult));
    return m;
  };
  std::vector<Real> fv = log_energies(as_norms(pair.support_v()), lambda, t_grid);
  std::vector<Real> fw = log_energies(as_norms(pair.support_w()), lambda, t_grid);
  const std::size_t n = t_grid.size();
  Real dv = fv[n - 1] - fv[n - 2];
  Real dw = fw[n - 1] - fw[n - 2];
  return to_rational((Real(pair.deg_v()) * dw - Real(pair.deg_w()) * dv) / log_t2_step(t_grid));
}

Rat hyperdiscriminant_degree(const Int& n, const Int& d, const Rat& mu_times_d) {
  if (n < 1) throw ValidationError("hyperdiscriminant_degree: n must be at least 1");
  if (d < 2) throw ValidationError("hyperdiscriminant_degree: d must be at least 2");
  return Rat(n * (n + 1) * d) - mu_times_d;
}

Rat veronese_mu_times_d(const Int& n) {
  if (n < 1) throw ValidationError("veronese_mu_times_d: n must be at least 1");
  return Rat(n * (n + 1));
}

Rat curve_mu_times_d(const Int& genus) {
  if (genus < 0) throw ValidationError("curve_mu_times_d: negative genus");
  return Rat(2 - 2 * genus);
}

Rat complete_intersection_mu_times_d(const Int& n, const IntVec& degrees) {
  if (n < 1) throw ValidationError("complete_intersection: n must be at least 1");
  if (degrees.empty()) throw ValidationError("complete_intersection: no degrees");
  Int prod = 1, sum = 0;
  for (const auto& di : degrees) {
    if (di < 1) throw ValidationError("complete_intersection: degrees must be positive");
    prod *= di;
    sum += di;
  }
  const Int k = Int(degrees.size());
  return Rat(n * prod * (n + k + 1 - sum));
}

Rat veronese_hyperdiscriminant_degree(const Int& n, const Int& d) {
  return hyperdiscriminant_degree(n, d, veronese_mu_times_d(n));
}

Rat curve_hyperdiscriminant_degree(const Int& d, const Int& genus) {
  return hyperdiscriminant_degree(1, d, curve_mu_times_d(genus));
}

Rat complete_intersection_hyperdiscriminant_degree(const Int& n, const IntVec& degrees) {
  Int prod = 1, sum = 0;
  for (const auto& di : degrees) {
    prod *= di;
    sum += di;
  }
  Int total = prod;  // degree of the intersection itself
  if (total < 2)
    throw ValidationError("complete_intersection: total degree must be at least 2");
  return hyperdiscriminant_degree(n, total, complete_intersection_mu_times_d(n, degrees));
}

StabilityPair curve_pair(int d) {
  if (d < 2 || d > 5) throw ValidationError("curve_pair: degree must be between 2 and 5");
  WeightSupport sv = weight_support(sylvester_resultant(d, d));
  WeightSupport sw = weight_support(discriminant(d));
  return StabilityPair::validated(std::move(sv), Int(2 * d), std::move(sw), Int(2 * d - 2),
                                  "rational-normal-curve-" + std::to_string(d));
}

}  // namespace polystab
