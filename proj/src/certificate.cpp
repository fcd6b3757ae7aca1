#include "altlines/certificate.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "altlines/errors.hpp"
#include "altlines/monodromy.hpp"

namespace altlines {

namespace {

Json header(const std::string& kind, const CertOptions& opt) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["tool_version"] = ALTLINES_VERSION;
  j["rng_seed"] = opt.rng_seed;
  j["kind"] = kind;
  return j;
}

Json pattern_json(const FactorPattern& pat) {
  Json a = Json::array();
  for (int d : pat) a.push_back(d);
  return a;
}

Json witness_json(const AnWitness& w, const RatPoly& base) {
  Json j;
  j["ell"] = w.ell;
  j["p"] = w.p;
  j["q"] = w.q;
  j["r"] = w.r;
  Json pats = Json::object();
  std::vector<u64> primes{w.p, w.q};
  primes.insert(primes.end(), w.r.begin(), w.r.end());
  for (u64 p : primes) {
    auto pat = cycle_type_sample(base, p);
    if (!pat) throw InternalInconsistency("witness prime of bad reduction");
    pats[std::to_string(p)] = pattern_json(*pat);
  }
  j["patterns"] = pats;
  return j;
}

AnWitness witness_from_json(const Json& j) {
  AnWitness w;
  w.ell = j.at("ell").get<u64>();
  w.p = j.at("p").get<u64>();
  w.q = j.at("q").get<u64>();
  w.r = j.at("r").get<std::vector<u64>>();
  return w;
}

Json recipe_evidence(const LineRecipe& recipe, const CertOptions& opt) {
  Json ev;
  ev["base_t"] = to_json(recipe.base_t);
  ev["scale"] = recipe.scale.get_str();
  ev["prime_bound"] = opt.prime_bound;
  ev["witness"] = witness_json(recipe.primes, recipe.member(0));
  Json members = Json::array();
  for (int N = -opt.members; N <= opt.members; ++N) {
    auto g = certify_equals_An(recipe.member(N), opt.prime_bound);
    members.push_back({{"N", N}, {"verdict", to_string(g.verdict)}});
  }
  ev["members"] = members;
  return ev;
}

Json rat_line(const RatPoly& P, const RatPoly& Q) { return {{"P", to_json(P)}, {"Q", to_json(Q)}, {"field", "Q"}}; }

Json specializations_over_Q(const RatPoly& P, const RatPoly& Q, int t_range, Json& skipped) {
  Json out = Json::array();
  skipped = Json::array();
  for (int t = -t_range; t <= t_range; ++t) {
    RatPoly f = P - Rat(t) * Q;
    if (f.degree() != 4 || discriminant(f).is_zero()) {
      skipped.push_back(to_json(Rat(t)));
      continue;
    }
    out.push_back({{"t", to_json(Rat(t))}, {"group", to_string(quartic_group_over_Q(f))}});
  }
  return out;
}

Json specializations_over_quad(const QuadPoly& P, const QuadPoly& Q, long long m, int t_count) {
  Json out = Json::array();
  for (int t = 1; t <= t_count; ++t) {
    QuadPoly f = P - QuadElem(Rat(t)) * Q;
    std::string group = discriminant(f).is_zero() ? "degenerate" : to_string(quartic_group_over_quad(f, m));
    out.push_back({{"t", to_json(Rat(t))}, {"group", group}});
  }
  return out;
}

Json cubic_json(const CubicElem& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.str());
  return a;
}

// ---------------------------------------------------------------------------
// Verification

class Checker {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok, std::move(detail)});
  }
  /// Runs fn; an exception counts as a failure of this check.
  void run(const std::string& name, const std::function<bool()>& fn) {
    try {
      add(name, fn());
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

void check_recipe(Checker& ck, const Json& ev, const RatPoly& P, const RatPoly& Q) {
  const int n = P.degree();
  const Rat base_t = rat_from_json(ev.at("base_t"));
  const Int scale(ev.at("scale").get<std::string>(), 10);
  const u64 bound = ev.at("prime_bound").get<u64>();
  const AnWitness w = witness_from_json(ev.at("witness"));
  LineRecipe recipe{P, Q, base_t, w, scale};
  const RatPoly base = recipe.member(0);
  ck.run("integral_members", [&] {
    return is_monic(base) && base.degree() == n && has_integer_coeffs(base) && has_integer_coeffs(Q);
  });
  ck.run("scale", [&] { return scale == w.modulus(); });
  ck.run("witness_patterns", [&] {
    const Json& pats = ev.at("witness").at("patterns");
    std::vector<u64> primes{w.p, w.q};
    primes.insert(primes.end(), w.r.begin(), w.r.end());
    for (u64 p : primes) {
      auto pat = cycle_type_sample(base, p);
      if (!pat || pats.at(std::to_string(p)) != pattern_json(*pat)) return false;
    }
    return static_cast<std::size_t>(pats.size()) == std::set<u64>(primes.begin(), primes.end()).size();
  });
  ck.run("witness", [&] {
    auto again = certify_contains_An(base, bound);
    return again && *again == w && static_cast<int>(w.ell) <= n;
  });
  ck.run("members", [&] {
    for (const auto& m : ev.at("members")) {
      Int N(static_cast<long>(m.at("N").get<int>()));
      auto g = certify_equals_An(recipe.member(N), bound);
      if (to_string(g.verdict) != m.at("verdict").get<std::string>()) return false;
    }
    return true;
  });
}

void verify_odd(Checker& ck, const Json& cert, const RatPoly& P, const RatPoly& Q) {
  const Json& ev = cert.at("evidence");
  const RatPoly R = ratpoly_from_json(ev.at("R"));
  const RatPoly sqrt_disc = ratpoly_from_json(ev.at("sqrt_disc"));
  ck.run("shape", [&] { return P.degree() % 2 == 1 && is_monic(P) && !Q.is_zero() && Q.degree() < P.degree(); });
  ck.run("wronskian", [&] { return P * derivative(Q) - derivative(P) * Q == R * R; });
  ck.run("sqrt_disc", [&] { return sqrt_disc * sqrt_disc == discriminant_in_t(line_poly(P, Q)); });
  check_recipe(ck, ev, P, Q);
}

void verify_even(Checker& ck, const Json& cert, const RatPoly& P, const RatPoly& Q) {
  const Json& ev = cert.at("evidence");
  const int n = ev.at("n").get<int>();
  const RatPoly sqrt_disc = ratpoly_from_json(ev.at("sqrt_disc"));
  ck.run("family", [&] {
    auto fam = even_family(n);
    return fam.P == P && fam.Q == Q;
  });
  ck.run("sqrt_disc", [&] { return sqrt_disc * sqrt_disc == discriminant_in_t(line_poly(P, Q)); });
  ck.run("skipped", [&] {
    for (const auto& s : ev.at("skipped")) {
      if (!(rat_from_json(s) < rat_from_json(ev.at("base_t")))) return false;
    }
    return true;
  });
  check_recipe(ck, ev, P, Q);
}

void verify_weak(Checker& ck, const Json& cert, const RatPoly& P, const RatPoly& Q) {
  const Json& ev = cert.at("evidence");
  const Rat k = rat_from_json(ev.at("params").at("k"));
  const Rat m = rat_from_json(ev.at("params").at("m"));
  const Rat c = rat_from_json(ev.at("params").at("c"));
  QuarticParams params;
  ck.run("params", [&] {
    params = make_quartic_params(k, m);
    return params.c == c;
  });
  ck.run("line", [&] {
    auto line = weak_line(params);
    return line.P == P && line.Q == Q && ratpoly_from_json(ev.at("branch_cubic")) == line.branch_cubic;
  });
  ck.run("sqrt_disc", [&] {
    RatPoly s = ratpoly_from_json(ev.at("sqrt_disc"));
    return s == c * ratpoly_from_json(ev.at("branch_cubic")) && s * s == discriminant_in_t(line_poly(P, Q));
  });
  ck.run("branch_cubic_irreducible",
         [&] { return ev.at("branch_cubic_irreducible").get<bool>() == branch_cubic_irreducible(params); });
  ck.run("resolvent_root", [&] {
    auto rep = weak_field_check(params);
    const Json& root = ev.at("resolvent_root");
    if (!rep.split) return root.is_null();
    return !root.is_null() && root.at("slope") == cubic_json(*rep.slope) &&
           root.at("intercept") == cubic_json(*rep.intercept);
  });
  ck.run("specializations", [&] {
    Json skipped;
    int t_range = ev.at("t_range").get<int>();
    return specializations_over_Q(P, Q, t_range, skipped) == ev.at("specializations") && skipped == ev.at("skipped");
  });
}

void verify_strong(Checker& ck, const Json& cert, long long m) {
  const Json& ev = cert.at("evidence");
  const QuadPoly P = quadpoly_from_json(cert.at("line").at("P"), m);
  const QuadPoly Q = quadpoly_from_json(cert.at("line").at("Q"), m);
  const QuadElem u = quad_from_json(ev.at("u"), m);
  const QuadElem c = quad_from_json(ev.at("c"), m);
  ck.run("field", [&] { return decide_strong_field(m); });
  ck.run("minus_one", [&] { return q_form(u, c) == QuadElem(-1) && !(u == c); });
  ck.run("line", [&] {
    auto line = strong_line({m, u, c});
    return line.P == P && line.Q == Q && quadpoly_from_json(ev.at("branch_quadratic"), m) == line.branch_quadratic;
  });
  ck.run("sqrt_disc", [&] {
    QuadPoly s = quadpoly_from_json(ev.at("sqrt_disc"), m);
    return s * s == discriminant_in_t(line_poly(P, Q));
  });
  ck.run("specializations", [&] {
    int t_count = ev.at("t_count").get<int>();
    return specializations_over_quad(P, Q, m, t_count) == ev.at("specializations");
  });
}

void verify_monodromy(Checker& ck, const Json& report) {
  ck.run("monodromy", [&] {
    Json again = monodromy_report();
    return again.at("rows") == report.at("rows") && again.at("jordan") == report.at("jordan");
  });
}

}  // namespace

Json odd_certificate(const OddLine& line, const CertOptions& opt) {
  Json j = header("odd", opt);
  j["line"] = rat_line(line.recipe.P, line.recipe.Q);
  Json ev;
  ev["n"] = line.recipe.P.degree();
  ev["R"] = to_json(line.pair.R);
  ev["sqrt_disc"] = to_json(line.pair.sqrt_disc);
  ev.update(recipe_evidence(line.recipe, opt));
  j["evidence"] = ev;
  return j;
}

Json even_certificate(const EvenLine& line, const CertOptions& opt) {
  Json j = header("even", opt);
  j["line"] = rat_line(line.recipe.P, line.recipe.Q);
  Json ev;
  ev["n"] = line.family.n;
  ev["sqrt_disc"] = to_json(line.sqrt_disc);
  Json skipped = Json::array();
  for (const auto& t : line.skipped) skipped.push_back(to_json(t));
  ev["skipped"] = skipped;
  ev.update(recipe_evidence(line.recipe, opt));
  j["evidence"] = ev;
  return j;
}

Json weak_quartic_certificate(const WeakLine& line, const CertOptions& opt, int t_range) {
  Json j = header("quartic-weak", opt);
  j["line"] = rat_line(line.P, line.Q);
  Json ev;
  ev["params"] = {{"k", to_json(line.params.k)}, {"m", to_json(line.params.m)}, {"c", to_json(line.params.c)}};
  ev["branch_cubic"] = to_json(line.branch_cubic);
  ev["sqrt_disc"] = to_json(line.params.c * line.branch_cubic);
  const bool irreducible = branch_cubic_irreducible(line.params);
  ev["branch_cubic_irreducible"] = irreducible;
  ev["expected_group"] = irreducible ? "A4" : "V4";
  auto rep = weak_field_check(line.params);
  ev["resolvent_root"] =
      rep.split ? Json{{"slope", cubic_json(*rep.slope)}, {"intercept", cubic_json(*rep.intercept)}} : Json();
  ev["t_range"] = t_range;
  Json skipped;
  ev["specializations"] = specializations_over_Q(line.P, line.Q, t_range, skipped);
  ev["skipped"] = skipped;
  j["evidence"] = ev;
  return j;
}

Json strong_quartic_certificate(const StrongLine& line, const MinusOneRepresentation& rep, const CertOptions& opt,
                                int t_count) {
  const long long m = line.params.m;
  Json j = header("quartic-strong", opt);
  j["line"] = {{"P", to_json(line.P)}, {"Q", to_json(line.Q)}, {"field", {{"quad", m}}}};
  Json ev;
  ev["u"] = to_json(line.params.u);
  ev["c"] = to_json(line.params.c);
  ev["route"] = rep.route;
  if (rep.q1_zero) {
    Json z = Json::array();
    for (const auto& v : *rep.q1_zero) z.push_back(v.get_str());
    ev["q1_zero"] = z;
  }
  ev["sqrt_disc"] = to_json(line.sqrt_disc);
  ev["branch_quadratic"] = to_json(line.branch_quadratic);
  ev["t_count"] = t_count;
  ev["specializations"] = specializations_over_quad(line.P, line.Q, m, t_count);
  j["evidence"] = ev;
  return j;
}

Json monodromy_report() {
  Json j;
  j["schema"] = kCertificateSchema;
  j["tool_version"] = ALTLINES_VERSION;
  j["kind"] = "monodromy-report";
  Json rows = Json::array();
  auto add_row = [&rows](const BranchData& data, const std::string& label) {
    auto rep = realizable_groups(data);
    Json types = Json::array();
    for (const auto& t : data.types) types.push_back(t);
    Json groups = Json::array();
    for (const auto& g : rep.groups) groups.push_back(g.name());
    rows.push_back({{"label", label},
                    {"n", data.n},
                    {"types", types},
                    {"genus_zero", riemann_hurwitz(data, 0, 0)},
                    {"groups", groups},
                    {"tuples", rep.tuples},
                    {"transitive", rep.transitive},
                    {"mode", rep.mode}});
  };
  for (const auto& row : quartic_trichotomy()) add_row({4, row.types}, "quartic trichotomy");
  add_row({5, {{5}, {3, 1, 1}, {5}}}, "degree five cross-check");
  Json jordan = Json::object();
  for (int n = 4; n <= 8; n += 2) {
    CycleType big{n - 1, 1};
    CycleType three{3};
    for (int i = 3; i < n; ++i) three.push_back(1);
    add_row({n, {big, big, three}}, "jordan");
    jordan[std::to_string(n)] = jordan_check(n);
  }
  j["rows"] = rows;
  j["jordan"] = jordan;
  return j;
}

std::vector<Check> verify_certificate(const Json& cert) {
  Checker ck;
  try {
    if (cert.at("schema").get<int>() != kCertificateSchema) {
      ck.add("format", false, "unsupported schema");
      return ck.take();
    }
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "monodromy-report") {
      verify_monodromy(ck, cert);
      return ck.take();
    }
    const Json& field = cert.at("line").at("field");
    if (kind == "quartic-strong") {
      if (!field.is_object()) throw std::invalid_argument("quartic-strong needs a quadratic field");
      verify_strong(ck, cert, field.at("quad").get<long long>());
      return ck.take();
    }
    if (field != "Q") throw std::invalid_argument("expected field \"Q\"");
    const RatPoly P = ratpoly_from_json(cert.at("line").at("P"));
    const RatPoly Q = ratpoly_from_json(cert.at("line").at("Q"));
    if (kind == "odd") {
      verify_odd(ck, cert, P, Q);
    } else if (kind == "even") {
      verify_even(ck, cert, P, Q);
    } else if (kind == "quartic-weak") {
      verify_weak(ck, cert, P, Q);
    } else {
      ck.add("format", false, "unknown kind " + kind);
    }
  } catch (const std::exception& e) {
    ck.add("format", false, e.what());
  }
  return ck.take();
}

}  // namespace altlines
