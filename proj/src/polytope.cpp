#include "polystab/polytope.hpp"

#include <algorithm>
#include <optional>

namespace polystab {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits bits_make(std::size_t n) { return Bits((n + 63) / 64, 0); }

void bits_set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

Bits bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

bool bits_subset(const Bits& sub, const Bits& sup) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] & ~sup[i]) return false;
  return true;
}

struct Ray {
  IntVec w;
  Bits tight;
};

IntVec scale_to_integer(const std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, Int(boost::multiprecision::denominator(x)));
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(l);
    if (boost::multiprecision::denominator(s) != 1)
      throw InternalError("scale_to_integer: denominator survived clearing");
    out[i] = Int(boost::multiprecision::numerator(s));
  }
  return out;
}

// Extreme rays of { w : <w, q> >= 0 for all q in qs }, where the qs span
// R^dim and the cone is pointed. Incremental double description seeded from
// a simplicial subcone, adjacency decided combinatorially via zero sets.
std::vector<IntVec> dual_rays(const std::vector<IntVec>& qs, std::size_t dim) {
  // Seed: dim constraints of full rank, greedily in input order.
  std::vector<std::size_t> seed;
  IntMat chosen;
  for (std::size_t i = 0; i < qs.size() && seed.size() < dim; ++i) {
    chosen.push_back(qs[i]);
    if (rank(chosen) == static_cast<int>(chosen.size()))
      seed.push_back(i);
    else
      chosen.pop_back();
  }
  if (seed.size() != dim) throw InternalError("dual_rays: constraints do not span");

  std::vector<std::size_t> order = seed;
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (std::find(seed.begin(), seed.end(), i) == seed.end()) order.push_back(i);
  const std::size_t total = order.size();

  // Rays of the seed cone: columns of the inverse of the seed matrix.
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim));
    std::vector<Rat> e(dim, Rat(0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t c = 0; c < dim; ++c) a[i][c] = Rat(chosen[i][c]);
    e[j] = 1;
    IntVec w = scale_to_integer(solve_rational(std::move(a), std::move(e)));
    reduce_by_gcd(w);
    Ray r{std::move(w), bits_make(total)};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) bits_set(r.tight, k);
    rays.push_back(std::move(r));
  }

  for (std::size_t pos = dim; pos < total; ++pos) {
    const IntVec& q = qs[order[pos]];
    std::vector<Int> s(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(rays[i].w, q);

    bool any_neg = false, all_tight_or_pos = true;
    for (const Int& v : s) {
      if (v < 0) any_neg = true;
      if (v < 0) all_tight_or_pos = false;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) bits_set(rays[i].tight, pos);
      continue;
    }
    (void)all_tight_or_pos;

    std::vector<Ray> next;
    std::vector<IntVec> combos;
    for (std::size_t ip = 0; ip < rays.size(); ++ip) {
      if (s[ip] < 0) continue;
      for (std::size_t im = 0; im < rays.size(); ++im) {
        if (s[im] >= 0 || s[ip] <= 0) continue;
        // Adjacency: no third ray's zero set contains the common zero set.
        Bits common = bits_and(rays[ip].tight, rays[im].tight);
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == im) continue;
          if (bits_subset(common, rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec w(rays[ip].w.size());
        for (std::size_t d = 0; d < w.size(); ++d)
          w[d] = s[ip] * rays[im].w[d] - s[im] * rays[ip].w[d];
        reduce_by_gcd(w);
        combos.push_back(std::move(w));
      }
    }
    std::sort(combos.begin(), combos.end(), lex_less);
    combos.erase(std::unique(combos.begin(), combos.end()), combos.end());

    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      Ray r = std::move(rays[i]);
      if (s[i] == 0) bits_set(r.tight, pos);
      next.push_back(std::move(r));
    }
    for (IntVec& w : combos) {
      Ray r{std::move(w), bits_make(total)};
      for (std::size_t k = 0; k <= pos; ++k)
        if (dot(r.w, qs[order[k]]) == 0) bits_set(r.tight, k);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    if (rays.empty()) throw InternalError("dual_rays: cone collapsed");
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (Ray& r : rays) out.push_back(std::move(r.w));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<kernels::LinearCondition> facet_conditions(const LatticePolytope& p) {
  std::vector<kernels::LinearCondition> c;
  for (const Facet& f : p.facets()) c.push_back({f.normal, f.offset});
  return c;
}

std::vector<kernels::LinearCondition> equation_conditions(const LatticePolytope& p) {
  std::vector<kernels::LinearCondition> c;
  for (const HullEquation& e : p.equations()) c.push_back({e.normal, e.offset});
  return c;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<Character>& points) {
  if (points.empty()) throw ValidationError("hull: no points");
  const std::size_t d = points[0].size();
  if (d == 0) throw DimensionError("hull: ambient dimension zero");
  if (d > 16) throw CapError("hull: ambient dimension exceeds 16");
  for (const auto& p : points)
    if (p.size() != d) throw DimensionError("hull: ragged point set");

  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope out;
  if (pts.size() == 1) {
    out.vertices_ = pts;
    out.base_point_ = pts[0];
    IntMat none;
    for (const auto& row : integer_kernel(none, d)) {
      HullEquation e{row, dot(row, pts[0])};
      out.equations_.push_back(std::move(e));
    }
    return out;
  }

  // Work in exact coordinates on the affine hull: Hermite basis of the
  // difference lattice of the input points.
  const IntVec& v0 = pts[0];
  IntMat diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVec dv(d);
    for (std::size_t j = 0; j < d; ++j) dv[j] = pts[i][j] - v0[j];
    diffs.push_back(std::move(dv));
  }
  const IntMat basis = hnf_row_basis(diffs);
  const std::size_t r = basis.size();
  if (r == 0) throw InternalError("hull: distinct points with empty difference lattice");

  std::vector<IntVec> ys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntVec dv(d);
    for (std::size_t j = 0; j < d; ++j) dv[j] = pts[i][j] - v0[j];
    auto y = solve_in_row_lattice(basis, dv);
    if (!y) throw InternalError("hull: point outside its own difference lattice");
    ys[i] = std::move(*y);
  }

  std::vector<IntVec> qs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntVec q(r + 1);
    q[0] = 1;
    for (std::size_t j = 0; j < r; ++j) q[j + 1] = ys[i][j];
    qs[i] = std::move(q);
  }
  const std::vector<IntVec> rays = dual_rays(qs, r + 1);

  // Local facets <a, y> >= c with a = ray tail, c = -ray head.
  struct LocalFacet {
    IntVec a;
    Int c;
  };
  std::vector<LocalFacet> local;
  for (const IntVec& w : rays) {
    IntVec a(w.begin() + 1, w.end());
    bool zero = true;
    for (const Int& x : a) zero = zero && (x == 0);
    if (zero) throw InternalError("hull: dual ray orthogonal to the affine hull");
    local.push_back({std::move(a), -w[0]});
  }

  // Vertex test: a point is extreme iff its tight facet normals span.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntMat tight;
    for (const auto& f : local)
      if (dot(f.a, ys[i]) == f.c) tight.push_back(f.a);
    if (!tight.empty() && rank(tight) == static_cast<int>(r)) out.vertices_.push_back(pts[i]);
  }
  if (out.vertices_.empty()) throw InternalError("hull: no vertices found");

  // Canonical affine data is recomputed from the vertex set alone so equal
  // polytopes serialize identically regardless of interior input points.
  out.base_point_ = out.vertices_[0];
  IntMat vdiffs;
  for (std::size_t i = 1; i < out.vertices_.size(); ++i) {
    IntVec dv(d);
    for (std::size_t j = 0; j < d; ++j) dv[j] = out.vertices_[i][j] - out.base_point_[j];
    vdiffs.push_back(std::move(dv));
  }
  out.affine_basis_ = hnf_row_basis(vdiffs);
  if (out.affine_basis_.size() != r)
    throw InternalError("hull: vertex lattice rank disagrees with input rank");

  for (const auto& row : integer_kernel(out.affine_basis_, d))
    out.equations_.push_back({row, dot(row, out.base_point_)});

  // Lift each local normal to the unique ambient functional in the row
  // space of the difference lattice restricting to it.
  std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = Rat(dot(basis[i], basis[j]));
  for (const auto& f : local) {
    std::vector<Rat> rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = Rat(f.a[i]);
    std::vector<Rat> z = solve_rational(gram, rhs);
    std::vector<Rat> n_rat(d, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < d; ++j) n_rat[j] += z[i] * Rat(basis[i][j]);
    IntVec n = scale_to_integer(n_rat);
    reduce_by_gcd(n);
    Int off = kernels::min_dot_serial(out.vertices_, n);
    out.facets_.push_back({std::move(n), std::move(off)});
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.normal != y.normal) return lex_less(x.normal, y.normal);
    return x.offset < y.offset;
  });

  // Every input point must satisfy the description; every facet must carry
  // an (r-1)-dimensional face worth of vertices.
  if (!kernels::points_satisfy_serial(pts, facet_conditions(out), equation_conditions(out)))
    throw InternalError("hull: input point violates computed description");
  for (const Facet& f : out.facets_) {
    std::size_t cnt = 0;
    for (const auto& v : out.vertices_)
      if (dot(f.normal, v) == f.offset) ++cnt;
    if (cnt < r) throw InternalError("hull: facet with too few incident vertices");
  }
  return out;
}

bool LatticePolytope::contains(const IntVec& p) const {
  if (p.size() != ambient_dim()) throw DimensionError("contains: dimension mismatch");
  for (const HullEquation& e : equations_)
    if (dot(e.normal, p) != e.offset) return false;
  for (const Facet& f : facets_)
    if (dot(f.normal, p) < f.offset) return false;
  return true;
}

bool LatticePolytope::contains_quotient(const IntVec& p) const {
  if (p.size() != ambient_dim()) throw DimensionError("contains_quotient: dimension mismatch");
  // Feasibility of p + t(1,...,1) in P as a one-variable rational program.
  std::optional<Rat> lo, hi;
  auto tighten_lo = [&](const Rat& v) {
    if (!lo || v > *lo) lo = v;
  };
  auto tighten_hi = [&](const Rat& v) {
    if (!hi || v < *hi) hi = v;
  };
  auto feed = [&](const IntVec& n, const Int& off, bool equality) -> bool {
    Int c1 = 0;
    for (const Int& x : n) c1 += x;
    Int c0 = dot(n, p) - off;
    if (c1 == 0) return equality ? (c0 == 0) : (c0 >= 0);
    Rat t = Rat(-c0) / Rat(c1);
    if (equality) {
      tighten_lo(t);
      tighten_hi(t);
    } else if (c1 > 0) {
      tighten_lo(t);
    } else {
      tighten_hi(t);
    }
    return true;
  };
  for (const HullEquation& e : equations_)
    if (!feed(e.normal, e.offset, true)) return false;
  for (const Facet& f : facets_)
    if (!feed(f.normal, f.offset, false)) return false;
  return !lo || !hi || *lo <= *hi;
}

LatticePolytope scale(const LatticePolytope& p, const Int& k) {
  if (k < 0) throw ValidationError("scale: negative factor");
  if (k == 0) return LatticePolytope::hull({IntVec(p.ambient_dim(), 0)});
  LatticePolytope out;
  out.vertices_ = p.vertices();
  for (auto& v : out.vertices_)
    for (Int& x : v) x *= k;
  out.facets_ = p.facets();
  for (auto& f : out.facets_) f.offset *= k;
  out.equations_ = p.equations();
  for (auto& e : out.equations_) e.offset *= k;
  out.affine_basis_ = p.affine_basis();
  for (auto& row : out.affine_basis_)
    for (Int& x : row) x *= k;
  out.base_point_ = p.base_point();
  for (Int& x : out.base_point_) x *= k;
  return out;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("minkowski_sum: ambient dimension mismatch");
  return LatticePolytope::hull(kernels::pairwise_sums(a.vertices(), b.vertices()));
}

Int support_min(const LatticePolytope& p, const OneParamSubgroup& lambda) {
  return support_min_raw(p, lambda.coords());
}

Int support_min_raw(const LatticePolytope& p, const IntVec& l) {
  if (l.size() != p.ambient_dim()) throw DimensionError("support_min: dimension mismatch");
  return kernels::min_dot(p.vertices(), l);
}

bool includes(const LatticePolytope& outer, const LatticePolytope& inner, InclusionMode mode) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw DimensionError("includes: ambient dimension mismatch");
  if (mode == InclusionMode::Ambient)
    return kernels::points_satisfy(inner.vertices(), facet_conditions(outer),
                                   equation_conditions(outer));
  auto flags = kernels::map_ordered<char>(
      inner.vertices(), [&](const IntVec& v) { return char(outer.contains_quotient(v)); });
  for (char f : flags)
    if (!f) return false;
  return true;
}

std::vector<IntVec> lattice_points(const LatticePolytope& p, std::uint64_t cap) {
  const std::size_t d = p.ambient_dim();
  IntVec mins = p.vertices()[0], maxs = p.vertices()[0];
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] < mins[j]) mins[j] = v[j];
      if (v[j] > maxs[j]) maxs[j] = v[j];
    }
  Int box = 1;
  for (std::size_t j = 0; j < d; ++j) box *= maxs[j] - mins[j] + 1;
  if (box > Int(1) << 26)
    throw CapError("lattice_points: bounding box too large to enumerate");

  const auto ineqs = facet_conditions(p);
  const auto eqs = equation_conditions(p);

  std::vector<IntVec> out;
  std::vector<IntVec> block;
  const std::size_t block_size = 8192;
  IntVec cur = mins;
  bool done = false;
  auto flush = [&]() {
    auto kept = kernels::filter_satisfying(block, ineqs, eqs);
    for (auto& k : kept) {
      out.push_back(std::move(k));
      if (out.size() > cap) throw CapError("lattice_points: result exceeds cap");
    }
    block.clear();
  };
  while (!done) {
    block.push_back(cur);
    if (block.size() >= block_size) flush();
    // Odometer, last coordinate fastest: lex order overall.
    std::size_t j = d;
    for (;;) {
      if (j == 0) {
        done = true;
        break;
      }
      --j;
      if (cur[j] < maxs[j]) {
        ++cur[j];
        break;
      }
      cur[j] = mins[j];
    }
  }
  flush();
  return out;
}

std::vector<QuotientConstraint> quotient_constraints(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<QuotientConstraint> out;
  if (d == 1) return out;

  std::vector<IntVec> proj;
  proj.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    IntVec q(d - 1);
    for (std::size_t j = 0; j + 1 < d; ++j) q[j] = v[j] - v[d - 1];
    proj.push_back(std::move(q));
  }
  LatticePolytope pp = LatticePolytope::hull(proj);

  auto lift = [&](const IntVec& a, const Int& c, bool eq) {
    IntVec l(d);
    Int s = 0;
    for (std::size_t j = 0; j + 1 < d; ++j) {
      l[j] = a[j];
      s += a[j];
    }
    l[d - 1] = -s;
    out.push_back({std::move(l), c, eq});
  };
  for (const Facet& f : pp.facets()) lift(f.normal, f.offset, false);
  for (const HullEquation& e : pp.equations()) lift(e.normal, e.offset, true);
  return out;
}

LatticePolytope standard_simplex(std::size_t dim) {
  if (dim == 0) throw DimensionError("standard_simplex: dimension zero");
  std::vector<IntVec> pts;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return LatticePolytope::hull(pts);
}

}  // namespace polystab
