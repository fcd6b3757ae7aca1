// altlines: construct lines P - T Q with alternating group and check their
// certificates.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "altlines/certificate.hpp"
#include "altlines/errors.hpp"
#include "altlines/monodromy.hpp"

using namespace altlines;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return Json::parse(in);
}

std::string pattern_str(const FactorPattern& p) { return to_string(p); }

int run_verify(const std::string& path, bool expect_monodromy) {
  Json cert;
  try {
    cert = read_json(path);
  } catch (const Json::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kVerifyFailed;
  }
  if (expect_monodromy && cert.value("kind", "") != "monodromy-report") {
    std::cerr << "verify: not a monodromy report\n";
    return kVerifyFailed;
  }
  auto checks = verify_certificate(cert);
  bool all = !checks.empty();
  for (const auto& c : checks) {
    std::cout << (c.ok ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    if (!c.ok) {
      std::cerr << "verification failed: " << c.name << "\n";
      all = false;
    }
  }
  return all ? kOk : kVerifyFailed;
}

int run_identify(const std::string& text, u64 bound, int degree) {
  RatPoly f = parse_poly(text);
  if (degree > 0 && f.degree() != degree) throw std::invalid_argument("polynomial does not have the requested degree");
  if (!is_monic(f) || !has_integer_coeffs(f)) throw std::invalid_argument("polynomial must be monic with integer coefficients");
  auto ev = identify_group(f, bound);
  std::cout << "degree        " << f.degree() << "\n";
  std::cout << "discriminant  " << ev.disc << (ev.disc_square ? "  (square)" : "  (not a square)") << "\n";
  std::cout << "verdict       " << to_string(ev.verdict) << "\n";
  if (ev.witness) {
    std::cout << "witness       ell=" << ev.witness->ell << " p=" << ev.witness->p << " q=" << ev.witness->q << " r=";
    for (std::size_t i = 0; i < ev.witness->r.size(); ++i) std::cout << (i ? "," : "") << ev.witness->r[i];
    std::cout << "\n";
  }
  if (f.degree() == 4) std::cout << "quartic group " << to_string(quartic_group_over_Q(f)) << "\n";
  for (const auto& [p, pat] : ev.patterns) std::cout << "  mod " << p << "  " << pattern_str(pat) << "\n";
  return kOk;
}

int run_decide(long long m) {
  check_field_parameter(m);
  const bool yes = decide_strong_field(m);
  const long long r8 = ((m % 8) + 8) % 8;
  if (yes) {
    std::cout << "yes\n";
  } else if (m > 0) {
    std::cout << "no (m > 0)\n";
  } else {
    std::cout << "no (m ≡ " << r8 << " mod 8)\n";
  }
  DiagForm q1 = q1_form(m);
  std::cout << "place  q1 isotropic\n";
  std::vector<Place> places{Place::real(), Place::prime(2)};
  unsigned long long a = static_cast<unsigned long long>(m < 0 ? -m : m);
  for (unsigned long long p = 3; p <= a; p += 2) {
    if (a % p == 0 && is_prime_u64(p)) places.push_back(Place::prime(p));
  }
  for (const auto& pl : places) {
    std::cout << (pl.is_real() ? std::string("inf") : std::to_string(pl.p)) << "    "
              << (isotropic_local(q1, pl) ? "yes" : "no") << "\n";
  }
  if (yes != decide_via_local_global(m)) throw InternalInconsistency("local-global decision disagrees");
  return kOk;
}

int run_monodromy(const std::string& output) {
  Json rep = monodromy_report();
  for (const auto& row : rep["rows"]) {
    std::cout << row["label"].get<std::string>() << "  n=" << row["n"] << "  types=" << row["types"].dump()
              << "  groups=" << row["groups"].dump() << "  (" << row["mode"].get<std::string>() << ")\n";
  }
  for (const auto& [n, ok] : rep["jordan"].items()) std::cout << "jordan n=" << n << "  " << (ok.get<bool>() ? "A_n" : "fail") << "\n";
  if (!output.empty()) emit(rep, output);
  bool all = true;
  for (const auto& [n, ok] : rep["jordan"].items()) all = all && ok.get<bool>();
  return all ? kOk : kVerifyFailed;
}

int run_enumerate(long height) {
  for (const auto& p : enumerate_params(height)) {
    auto rep = weak_field_check(p);
    std::cout << "k=" << p.k << " m=" << p.m << " c=" << p.c
              << "  group=" << (branch_cubic_irreducible(p) ? "A4" : "V4")
              << "  resolvent " << (rep.split ? "split" : "not split") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines of polynomials with alternating Galois group"};
  app.set_version_flag("--version", std::string(ALTLINES_VERSION));
  app.require_subcommand(1);

  CertOptions opt;
  std::string output;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.rng_seed, "Random seed")->capture_default_str();
    sub->add_option("--prime-bound", opt.prime_bound, "Largest prime tried for witnesses")->capture_default_str();
    sub->add_option("-o,--output", output, "Output path (default stdout)");
  };

  int n = 0;
  std::string seed_poly;
  int t_budget = 60;
  auto* odd = app.add_subcommand("construct-odd", "Odd-degree line from a square-discriminant A_n seed");
  odd->add_option("-n", n, "Degree (odd)")->required();
  odd->add_option("--seed-poly", seed_poly, "Seed polynomial, e.g. \"X^5+4X^4-2\"");
  odd->add_option("--members", opt.members, "Certify members N in [-k, k]")->capture_default_str();
  common(odd);

  auto* even = app.add_subcommand("construct-even", "Even-degree line with n - 1 a square");
  even->add_option("-n", n, "Degree (even)")->required();
  even->add_option("--t-budget", t_budget, "Specializations tried")->capture_default_str();
  even->add_option("--members", opt.members, "Certify members N in [-k, k]")->capture_default_str();
  common(even);

  std::string k_text = "-3", m_text = "1";
  int t_range = 10;
  auto* quartic = app.add_subcommand("construct-quartic", "Weak quartic line for parameters (k, m)");
  quartic->add_option("--k", k_text, "Parameter k")->capture_default_str();
  quartic->add_option("--m", m_text, "Parameter m")->capture_default_str();
  quartic->add_option("--t-range", t_range, "Specializations t in [-r, r]")->capture_default_str();
  common(quartic);

  long long field_m = -1;
  int t_count = 8;
  auto* strong = app.add_subcommand("construct-strong", "Strong quartic line over Q(sqrt m)");
  strong->add_option("--m", field_m, "Field parameter")->capture_default_str();
  strong->add_option("--t-count", t_count, "Specializations t in [1, k]")->capture_default_str();
  common(strong);

  std::string cert_path;
  bool monodromy_flag = false;
  auto* verify = app.add_subcommand("verify", "Re-check every evidence item of a certificate");
  verify->add_option("certificate", cert_path, "Certificate JSON")->required();
  verify->add_flag("--monodromy", monodromy_flag, "The file is a monodromy report");

  std::string poly_text;
  int degree = 0;
  auto* identify = app.add_subcommand("identify", "Galois group evidence for one polynomial");
  identify->add_option("polynomial", poly_text, "Monic integer polynomial in X")->required();
  identify->add_option("--degree", degree, "Expected degree");
  identify->add_option("--prime-bound", opt.prime_bound, "Largest prime sampled")->capture_default_str();

  long long decide_m = 0;
  auto* decide = app.add_subcommand("decide-strong-field", "Does Q(sqrt m) carry strong A4 lines");
  decide->add_option("m", decide_m, "Square-free field parameter")->required();

  auto* mono = app.add_subcommand("monodromy-report", "Branch-cycle group enumeration suite");
  mono->add_option("-o,--output", output, "Write the report JSON here");

  long height = 10;
  auto* enumerate = app.add_subcommand("enumerate-quartic", "List weak quartic parameters");
  enumerate->add_option("--height", height, "Bound on |k| and |m|")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*odd) {
      std::optional<RatPoly> seed;
      if (!seed_poly.empty()) seed = parse_poly(seed_poly);
      emit(odd_certificate(build_line_odd(n, seed, opt.prime_bound, opt.rng_seed), opt), output);
    } else if (*even) {
      emit(even_certificate(build_line_even(n, opt.prime_bound, t_budget), opt), output);
    } else if (*quartic) {
      auto params = make_quartic_params(Rat::parse(k_text), Rat::parse(m_text));
      emit(weak_quartic_certificate(weak_line(params), opt, t_range), output);
    } else if (*strong) {
      check_field_parameter(field_m);
      auto rep = represent_minus_one(field_m);
      if (!rep) throw std::invalid_argument("Q(sqrt m) carries no strong line");
      emit(strong_quartic_certificate(strong_line({field_m, rep->u, rep->c}), *rep, opt, t_count), output);
    } else if (*verify) {
      return run_verify(cert_path, monodromy_flag);
    } else if (*identify) {
      return run_identify(poly_text, opt.prime_bound, degree);
    } else if (*decide) {
      return run_decide(decide_m);
    } else if (*mono) {
      return run_monodromy(output);
    } else if (*enumerate) {
      return run_enumerate(height);
    }
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
