#include "polystab/json_io.hpp"

#include <limits>

namespace polystab {

namespace {

std::int64_t to_i64(const Int& x) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (x < lo || x > hi) throw CapError("json: integer exceeds 64-bit range");
  return static_cast<std::int64_t>(x);
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_i64(x));
  return a;
}

IntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("json: expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError("json: expected an integer entry");
    v.push_back(Int(x.get<std::int64_t>()));
  }
  return v;
}

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw ValidationError("json: malformed integer literal '" + s + "'");
  }
}

}  // namespace

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(vec_to_json(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json jf;
    jf["normal"] = vec_to_json(f.normal);
    jf["offset"] = to_i64(f.offset);
    facets.push_back(std::move(jf));
  }
  j["facets"] = std::move(facets);
  Json eqs = Json::array();
  for (const auto& e : p.equations()) {
    Json je;
    je["normal"] = vec_to_json(e.normal);
    je["offset"] = to_i64(e.offset);
    eqs.push_back(std::move(je));
  }
  j["equations"] = std::move(eqs);
  Json basis = Json::array();
  for (const auto& b : p.affine_basis()) basis.push_back(vec_to_json(b));
  j["affine_basis"] = std::move(basis);
  j["affine_base_point"] = vec_to_json(p.base_point());
  return j;
}

Json poly_to_json(const IntPoly& p) {
  Json j;
  j["rows"] = p.grid().rows;
  j["cols"] = p.grid().cols;
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    Json exps = Json::array();
    for (auto x : e) exps.push_back(x);
    t["exps"] = std::move(exps);
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("terms"))
    throw ValidationError("json: polynomial needs rows, cols and terms");
  VarGrid g{j.at("rows").get<std::int32_t>(), j.at("cols").get<std::int32_t>()};
  IntPoly p(g);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("exps") || !t.contains("coeff"))
      throw ValidationError("json: polynomial term needs exps and coeff");
    ExpVec e;
    for (const auto& x : t.at("exps")) {
      if (!x.is_number_integer()) throw ValidationError("json: exponent must be an integer");
      e.push_back(x.get<std::int32_t>());
    }
    if (!t.at("coeff").is_string()) throw ValidationError("json: coeff must be a decimal string");
    p.add_term(e, int_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

Json support_to_json(const WeightSupport& s) {
  Json a = Json::array();
  for (const auto& [chi, mult] : s.points) {
    if (mult > Int(1000000)) throw CapError("json: support multiplicity too large to expand");
    for (Int i = 0; i < mult; ++i) a.push_back(vec_to_json(chi));
  }
  return a;
}

WeightSupport support_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("json: support must be a nonempty array");
  WeightSupport s;
  for (const auto& row : j) {
    IntVec chi = vec_from_json(row);
    if (s.points.empty())
      s.dim = chi.size();
    else if (chi.size() != s.dim)
      throw ValidationError("json: support rows have mixed lengths");
    ++s.points[chi];
  }
  return s;
}

Json pair_to_json(const StabilityPair& p) {
  Json j;
  j["label"] = p.label();
  Json v;
  v["support"] = support_to_json(p.support_v());
  v["deg"] = to_i64(p.deg_v());
  j["v"] = std::move(v);
  Json w;
  w["support"] = support_to_json(p.support_w());
  w["deg"] = to_i64(p.deg_w());
  j["w"] = std::move(w);
  return j;
}

StabilityPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("w"))
    throw ValidationError("json: pair needs v and w");
  std::string label = j.value("label", std::string("unlabeled"));
  const Json& v = j.at("v");
  const Json& w = j.at("w");
  if (!v.contains("support") || !v.contains("deg") || !w.contains("support") ||
      !w.contains("deg"))
    throw ValidationError("json: each side needs support and deg");
  return StabilityPair::validated(support_from_json(v.at("support")),
                                  Int(v.at("deg").get<std::int64_t>()),
                                  support_from_json(w.at("support")),
                                  Int(w.at("deg").get<std::int64_t>()), std::move(label));
}

Json report_to_json(const DegenerationReport& r) {
  Json j;
  j["lambda"] = vec_to_json(r.lambda);
  j["weight_v"] = to_i64(r.weight_v);
  j["weight_w"] = to_i64(r.weight_w);
  j["futaki"] = to_i64(r.futaki_value);
  j["verdict"] = r.verdict == Verdict::Destabilizing ? "destabilizing" : "semistable-along";
  return j;
}

DegenerationReport report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("futaki") ||
      !j.contains("verdict"))
    throw ValidationError("json: report needs lambda, futaki and verdict");
  DegenerationReport r;
  r.lambda = vec_from_json(j.at("lambda"));
  r.weight_v = Int(j.value("weight_v", std::int64_t{0}));
  r.weight_w = Int(j.value("weight_w", std::int64_t{0}));
  r.futaki_value = Int(j.at("futaki").get<std::int64_t>());
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "destabilizing")
    r.verdict = Verdict::Destabilizing;
  else if (v == "semistable-along")
    r.verdict = Verdict::SemistableAlong;
  else
    throw ValidationError("json: unknown verdict '" + v + "'");
  return r;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polystab
