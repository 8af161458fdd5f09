#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "polystab/json_io.hpp"
#include "polystab/kernels.hpp"
#include "polystab/rep_weyl.hpp"

namespace ps = polystab;
using ps::Int;
using ps::Json;
using ps::Rat;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("failed reading '" + path + "'");
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw IoError("failed writing '" + path + "'");
}

Json parse_json(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON in " + what);
  return j;
}

ps::IntVec parse_int_csv(const std::string& s) {
  ps::IntVec out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ps::ValidationError("empty entry in integer list '" + s + "'");
    try {
      out.push_back(Int(item));
    } catch (const std::exception&) {
      throw ps::ValidationError("malformed integer '" + item + "' in list");
    }
  }
  if (out.empty()) throw ps::ValidationError("empty integer list");
  return out;
}

unsigned precision_bits_from_env() {
  const char* e = std::getenv("POLYSTAB_PRECISION_BITS");
  if (!e || !*e) return 256;
  char* end = nullptr;
  long v = std::strtol(e, &end, 10);
  if (!end || *end || v < 16 || v > 65536)
    throw ps::ValidationError("POLYSTAB_PRECISION_BITS must be an integer in [16, 65536]");
  return static_cast<unsigned>(v);
}

std::vector<Rat> default_grid() {
  return {Rat(1, 1000), Rat(1, 10000), Rat(1, 100000), Rat(1, 1000000)};
}

struct Timer {
  bool enabled;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    if (!enabled) return 0;
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }
};

Json slope_json(const Rat& slope) {
  Json j;
  j["numerator"] = numerator(slope).str();
  j["denominator"] = denominator(slope).str();
  j["approx"] = static_cast<double>(slope);
  return j;
}

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Int rand_range(std::mt19937_64& rng, long lo, long hi) {
  return Int(lo + static_cast<long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1))));
}

// Unimodular integer matrix: product of a lower and an upper unitriangular
// matrix with small off-diagonal entries.
std::vector<std::vector<Rat>> sample_unimodular(std::mt19937_64& rng, std::size_t d) {
  ps::IntMat l(d, ps::IntVec(d, Int(0))), u(d, ps::IntVec(d, Int(0)));
  for (std::size_t i = 0; i < d; ++i) {
    l[i][i] = 1;
    u[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) l[i][j] = rand_range(rng, -2, 2);
    for (std::size_t j = i + 1; j < d; ++j) u[i][j] = rand_range(rng, -2, 2);
  }
  std::vector<std::vector<Rat>> s(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < d; ++k) acc += l[i][k] * u[k][j];
      s[i][j] = Rat(acc);
    }
  return s;
}

ps::RatPoly support_as_poly(const ps::WeightSupport& s) {
  ps::VarGrid g{1, static_cast<std::int32_t>(s.dim)};
  ps::RatPoly p(g);
  for (const auto& [chi, mult] : s.points) {
    ps::ExpVec e(s.dim);
    for (std::size_t i = 0; i < s.dim; ++i) {
      if (chi[i] > Int(1) << 30) throw ps::CapError("support exponent too large");
      e[i] = static_cast<std::int32_t>(chi[i]);
    }
    p.add_term(e, Rat(mult));
  }
  return p;
}

ps::StabilityPair conjugate_pair(const ps::StabilityPair& pair,
                                 const std::vector<std::vector<Rat>>& sigma) {
  ps::WeightSupport sv = ps::weight_support(ps::act_linear(support_as_poly(pair.support_v()), sigma));
  ps::WeightSupport sw = ps::weight_support(ps::act_linear(support_as_poly(pair.support_w()), sigma));
  return ps::StabilityPair::validated(std::move(sv), pair.deg_v(), std::move(sw), pair.deg_w(),
                                      pair.label() + "-conjugate");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact torus-stability toolkit for weighted polynomial pairs"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "report wall-clock milliseconds instead of 0");

  // resultant
  auto* c_res = app.add_subcommand("resultant", "symbolic resultant of two generic forms");
  int res_m = 0, res_n = 0;
  std::string res_out = "-";
  c_res->add_option("m", res_m, "degree of the first form")->required();
  c_res->add_option("n", res_n, "degree of the second form")->required();
  c_res->add_option("--out", res_out, "output path or - for stdout");

  // discriminant
  auto* c_dis = app.add_subcommand("discriminant", "symbolic discriminant of a generic form");
  int dis_d = 0;
  std::string dis_out = "-";
  c_dis->add_option("d", dis_d, "degree of the form")->required();
  c_dis->add_option("--out", dis_out, "output path or - for stdout");

  // newton
  auto* c_new = app.add_subcommand("newton", "weight polytope of a polynomial");
  std::string new_in, new_out = "-";
  c_new->add_option("--in", new_in, "polynomial JSON path or -")->required();
  c_new->add_option("--out", new_out, "output path or - for stdout");

  // hypersimplex
  auto* c_hyp = app.add_subcommand("hypersimplex", "hull of 0/1 vectors with k ones");
  long hyp_k = 0, hyp_l = 0;
  std::string hyp_out = "-";
  c_hyp->add_option("k", hyp_k, "number of ones")->required();
  c_hyp->add_option("l", hyp_l, "ambient dimension")->required();
  c_hyp->add_option("--out", hyp_out, "output path or - for stdout");

  // orbit
  auto* c_orb = app.add_subcommand("orbit", "permutation-orbit polytope of a partition");
  std::string orb_parts, orb_out = "-";
  c_orb->add_option("parts", orb_parts, "comma-separated weakly decreasing parts")->required();
  c_orb->add_option("--out", orb_out, "output path or - for stdout");

  // check-pair
  auto* c_chk = app.add_subcommand("check-pair", "semistability and uniform threshold of a pair");
  std::string chk_in, chk_out = "-";
  long chk_mmax = 0, chk_conj = 0;
  std::uint64_t chk_seed = 0;
  c_chk->add_option("--pair", chk_in, "pair JSON path or -")->required();
  c_chk->add_option("--out", chk_out, "report path or - for stdout");
  c_chk->add_option("--m-max", chk_mmax, "verify the threshold inclusion up to this m");
  c_chk->add_option("--conjugates", chk_conj, "re-check under this many sampled substitutions");
  c_chk->add_option("--seed", chk_seed, "seed for sampled substitutions");

  // futaki
  auto* c_fut = app.add_subcommand("futaki", "numerical invariant along cocharacters");
  std::string fut_in, fut_out = "-", fut_lambda;
  long fut_box = -1;
  bool fut_slope = false;
  c_fut->add_option("--pair", fut_in, "pair JSON path or -")->required();
  c_fut->add_option("--out", fut_out, "report path or - for stdout");
  c_fut->add_option("--lambda", fut_lambda, "comma-separated sum-zero cocharacter");
  c_fut->add_option("--scan-box", fut_box, "scan all sum-zero cocharacters up to this radius");
  c_fut->add_flag("--slope", fut_slope, "also fit the energy decay slope along lambda");

  // degree
  auto* c_deg = app.add_subcommand("degree", "hyperdiscriminant degree formulas");
  std::string deg_family, deg_degrees, deg_out = "-";
  long deg_n = 0, deg_d = 0, deg_g = 0;
  c_deg->add_option("--family", deg_family, "veronese, curve or ci")->required();
  c_deg->add_option("--n", deg_n, "dimension parameter");
  c_deg->add_option("--d", deg_d, "degree parameter");
  c_deg->add_option("--g", deg_g, "genus parameter");
  c_deg->add_option("--degrees", deg_degrees, "comma-separated hypersurface degrees for ci");
  c_deg->add_option("--out", deg_out, "report path or - for stdout");

  // verify-certificate
  auto* c_ver = app.add_subcommand("verify-certificate",
                                   "re-check a destabilization report against its pair");
  std::string ver_pair, ver_report, ver_out = "-";
  c_ver->add_option("--pair", ver_pair, "pair JSON path or -")->required();
  c_ver->add_option("--report", ver_report, "report JSON path")->required();
  c_ver->add_option("--out", ver_out, "output path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  Timer timer{timing};

  if (*c_res) {
    Json env;
    env["command"] = "resultant";
    env["inputs"] = Json{{"m", res_m}, {"n", res_n}};
    ps::IntPoly r = ps::sylvester_resultant(res_m, res_n);
    Json art = ps::poly_to_json(r);
    Json degs = Json::array();
    for (const auto& d : ps::row_degrees(r)) degs.push_back(static_cast<std::int64_t>(d));
    env["result"] = Json{{"total_degree", static_cast<std::int64_t>(ps::total_degree(r))},
                         {"row_degrees", degs},
                         {"terms", r.term_count()},
                         {"out", res_out}};
    env["timing_ms"] = timer.ms();
    if (res_out == "-") {
      write_output("-", ps::dump_canonical(art));
    } else {
      write_output(res_out, ps::dump_canonical(art));
      write_output("-", ps::dump_canonical(env));
    }
    return 0;
  }

  if (*c_dis) {
    Json env;
    env["command"] = "discriminant";
    env["inputs"] = Json{{"d", dis_d}};
    ps::IntPoly r = ps::discriminant(dis_d);
    Json art = ps::poly_to_json(r);
    env["result"] = Json{{"total_degree", static_cast<std::int64_t>(ps::total_degree(r))},
                         {"terms", r.term_count()},
                         {"out", dis_out}};
    env["timing_ms"] = timer.ms();
    if (dis_out == "-") {
      write_output("-", ps::dump_canonical(art));
    } else {
      write_output(dis_out, ps::dump_canonical(art));
      write_output("-", ps::dump_canonical(env));
    }
    return 0;
  }

  if (*c_new) {
    ps::IntPoly p = ps::poly_from_json(parse_json(read_input(new_in), "polynomial input"));
    ps::LatticePolytope np = ps::newton_polytope(p);
    write_output(new_out, ps::dump_canonical(ps::polytope_to_json(np)));
    return 0;
  }

  if (*c_hyp) {
    ps::LatticePolytope h = ps::hypersimplex(Int(hyp_k), Int(hyp_l));
    write_output(hyp_out, ps::dump_canonical(ps::polytope_to_json(h)));
    return 0;
  }

  if (*c_orb) {
    ps::Partition lam = ps::Partition::validated(parse_int_csv(orb_parts));
    write_output(orb_out, ps::dump_canonical(ps::polytope_to_json(ps::orbit_polytope(lam))));
    return 0;
  }

  if (*c_chk) {
    ps::StabilityPair pair = ps::pair_from_json(parse_json(read_input(chk_in), "pair input"));
    ps::SemistabilityResult sr = ps::is_semistable(pair);

    Json env;
    env["command"] = "check-pair";
    env["inputs"] = Json{{"pair", chk_in}, {"m_max", chk_mmax}, {"conjugates", chk_conj}};
    env["label"] = pair.label();
    Json result;
    result["semistable"] = sr.semistable;
    std::optional<Int> m0;
    if (sr.semistable) {
      m0 = ps::find_m0(pair);
      result["m0"] = m0 ? Json(static_cast<std::int64_t>(*m0)) : Json(nullptr);
    }

    if (chk_mmax > 0 && m0) {
      // Brute-force the defining inclusion on a range of m as a cross-check.
      ps::LatticePolytope p = ps::newton_polytope(support_as_poly(pair.support_v()));
      ps::LatticePolytope q = ps::newton_polytope(support_as_poly(pair.support_w()));
      ps::LatticePolytope simplex = ps::standard_simplex(pair.dim());
      const Int a = pair.deg_w(), b = pair.deg_v();
      auto holds_at = [&](const Int& m) {
        ps::LatticePolytope lhs =
            ps::minkowski_sum(ps::scale(p, (m - 1) * a), ps::scale(simplex, a * b));
        return ps::includes(ps::scale(q, m * b), lhs, ps::InclusionMode::Quotient);
      };
      bool ok = *m0 <= Int(1) || !holds_at(*m0 - 1);
      for (Int m = *m0; ok && m <= Int(chk_mmax); ++m) ok = holds_at(m);
      if (!ok) throw ps::InternalError("check-pair: threshold cross-check failed");
      result["m0_verified_to"] = chk_mmax;
    }

    if (chk_conj > 0) {
      std::mt19937_64 rng(chk_seed);
      Json list = Json::array();
      for (long i = 0; i < chk_conj; ++i) {
        auto sigma = sample_unimodular(rng, pair.dim());
        ps::SemistabilityResult cr = ps::is_semistable(conjugate_pair(pair, sigma));
        Json entry;
        entry["index"] = i;
        entry["semistable"] = cr.semistable;
        if (cr.certificate) entry["certificate"] = ps::report_to_json(*cr.certificate);
        list.push_back(std::move(entry));
      }
      result["conjugates"] = std::move(list);
      env["seed"] = chk_seed;
    }

    if (sr.semistable)
      env["result"] = std::move(result);
    else
      env["certificates"] = Json{{"destabilizing", ps::report_to_json(*sr.certificate)}};
    env["timing_ms"] = timer.ms();
    write_output(chk_out, ps::dump_canonical(env));
    return sr.semistable ? 0 : 3;
  }

  if (*c_fut) {
    ps::StabilityPair pair = ps::pair_from_json(parse_json(read_input(fut_in), "pair input"));
    if (fut_lambda.empty() == (fut_box < 0))
      throw ps::ValidationError("futaki: pass exactly one of --lambda or --scan-box");

    Json env;
    env["command"] = "futaki";
    env["inputs"] =
        Json{{"pair", fut_in}, {"lambda", fut_lambda}, {"scan_box", fut_box}, {"slope", fut_slope}};
    env["label"] = pair.label();
    std::ostringstream lines;

    std::vector<ps::DegenerationReport> reps;
    if (!fut_lambda.empty()) {
      ps::OneParamSubgroup lam = ps::OneParamSubgroup::validated(parse_int_csv(fut_lambda));
      reps.push_back(ps::degeneration_report(pair, lam));
    } else {
      reps = ps::scan_box(pair, Int(fut_box));
    }

    bool destabilized = false;
    Json worst;
    Int max_futaki = 0;
    bool first = true;
    for (const auto& r : reps) {
      lines << ps::report_to_json(r).dump() << "\n";
      if (first || r.futaki_value > max_futaki) {
        max_futaki = r.futaki_value;
        worst = ps::report_to_json(r);
      }
      if (r.verdict == ps::Verdict::Destabilizing) destabilized = true;
      first = false;
    }

    Json slope;
    if (fut_slope) {
      if (fut_lambda.empty())
        throw ps::ValidationError("futaki: --slope needs --lambda");
      ps::OneParamSubgroup lam = ps::OneParamSubgroup::validated(parse_int_csv(fut_lambda));
      Rat sl = ps::pair_energy_slope(pair, lam, default_grid(), precision_bits_from_env());
      slope = slope_json(sl);
      Rat err = sl - Rat(reps.front().futaki_value);
      slope["matches_futaki"] = abs(err) < Rat(1, 100);
    }

    Json body;
    body["scanned"] = reps.size();
    body["max_futaki"] = reps.empty() ? Json(nullptr) : Json(static_cast<std::int64_t>(max_futaki));
    body["semistable_in_box"] = !destabilized;
    if (!slope.is_null()) body["slope"] = std::move(slope);
    if (destabilized) {
      env["certificates"] = Json{{"destabilizing", std::move(worst)}, {"summary", std::move(body)}};
    } else {
      env["result"] = std::move(body);
    }
    env["timing_ms"] = timer.ms();
    lines << env.dump() << "\n";
    write_output(fut_out, lines.str());
    return destabilized ? 3 : 0;
  }

  if (*c_deg) {
    Json env;
    env["command"] = "degree";
    Rat closed(0), general(0);
    if (deg_family == "veronese") {
      if (deg_n < 1 || deg_d < 2)
        throw ps::ValidationError("degree veronese: need --n >= 1 and --d >= 2");
      closed = Rat(Int(deg_n) * (Int(deg_n) + 1) * (Int(deg_d) - 1));
      general = ps::veronese_hyperdiscriminant_degree(Int(deg_n), Int(deg_d));
      env["inputs"] = Json{{"family", "veronese"}, {"n", deg_n}, {"d", deg_d}};
    } else if (deg_family == "curve") {
      if (deg_d < 2 || deg_g < 0)
        throw ps::ValidationError("degree curve: need --d >= 2 and --g >= 0");
      closed = Rat(2 * Int(deg_d) - 2 + 2 * Int(deg_g));
      general = ps::curve_hyperdiscriminant_degree(Int(deg_d), Int(deg_g));
      env["inputs"] = Json{{"family", "curve"}, {"d", deg_d}, {"g", deg_g}};
    } else if (deg_family == "ci") {
      if (deg_n < 1 || deg_degrees.empty())
        throw ps::ValidationError("degree ci: need --n >= 1 and --degrees");
      ps::IntVec ds = parse_int_csv(deg_degrees);
      Int prod = 1, sum = 0;
      for (const auto& di : ds) {
        prod *= di;
        sum += di;
      }
      closed = Rat(Int(deg_n) * prod * (sum - Int(ds.size())));
      general = ps::complete_intersection_hyperdiscriminant_degree(Int(deg_n), ds);
      env["inputs"] = Json{{"family", "ci"}, {"n", deg_n}, {"degrees", deg_degrees}};
    } else {
      throw ps::ValidationError("degree: unknown family '" + deg_family + "'");
    }
    bool agree = closed == general;
    Json body = Json{{"degree", slope_json(general)},
                     {"closed_form", slope_json(closed)},
                     {"self_check", agree}};
    if (agree)
      env["result"] = std::move(body);
    else
      env["certificates"] = std::move(body);
    env["timing_ms"] = timer.ms();
    write_output(deg_out, ps::dump_canonical(env));
    if (!agree) {
      std::cerr << "degree: closed form and general formula disagree\n";
      return 2;
    }
    return 0;
  }

  if (*c_ver) {
    ps::StabilityPair pair = ps::pair_from_json(parse_json(read_input(ver_pair), "pair input"));
    ps::DegenerationReport claimed =
        ps::report_from_json(parse_json(read_input(ver_report), "report input"));
    Json env;
    env["command"] = "verify-certificate";
    env["label"] = pair.label();
    ps::OneParamSubgroup lam = ps::OneParamSubgroup::validated(claimed.lambda);
    ps::DegenerationReport actual = ps::degeneration_report(pair, lam);
    bool matches = actual.weight_v == claimed.weight_v && actual.weight_w == claimed.weight_w &&
                   actual.futaki_value == claimed.futaki_value &&
                   actual.verdict == claimed.verdict;
    bool destabilizes = actual.verdict == ps::Verdict::Destabilizing;
    Json body = Json{{"matches", matches},
                     {"destabilizes", destabilizes},
                     {"recomputed", ps::report_to_json(actual)}};
    if (matches && destabilizes)
      env["result"] = std::move(body);
    else
      env["certificates"] = std::move(body);
    env["timing_ms"] = timer.ms();
    write_output(ver_out, ps::dump_canonical(env));
    return (matches && destabilizes) ? 0 : 3;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ps::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
