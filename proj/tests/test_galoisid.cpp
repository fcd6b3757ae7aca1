#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "altlines/galoisid.hpp"
#include "oracles.hpp"

using namespace altlines;

namespace {

const RatPoly kExampleP = poly_from_ints({-2, -18, -28, -5, 4, 1});

// Classical divisor method: candidates s/t with s | a0 and t | an.
std::vector<Rat> divisor_roots(const RatPoly& f) {
  RatPoly g = primitive_part(f);
  std::set<Rat> out;
  if (g.coeff(0).is_zero()) out.insert(Rat(0));
  int low = 0;
  while (g.coeff(low).is_zero()) ++low;
  long a0 = std::labs(g.coeff(low).num().get_si());
  long an = std::labs(g.lead().num().get_si());
  for (long s = 1; s <= a0; ++s) {
    if (a0 % s) continue;
    for (long t = 1; t <= an; ++t) {
      if (an % t) continue;
      for (long sg : {1L, -1L}) {
        Rat r(Int(sg * s), Int(t));
        if (f(r).is_zero()) out.insert(r);
      }
    }
  }
  return {out.begin(), out.end()};
}

std::set<FactorPattern> sampled_patterns(const RatPoly& f, int count) {
  std::set<FactorPattern> out;
  int seen = 0;
  for (u64 p = 2; seen < count; p = next_prime_u64(p)) {
    if (auto pat = cycle_type_sample(f, p)) {
      out.insert(*pat);
      ++seen;
    }
  }
  return out;
}

// Cycle types occurring in each transitive subgroup of S4.
bool patterns_consistent(QuarticGroup g, const std::set<FactorPattern>& pats) {
  const FactorPattern c4{4}, c31{3, 1}, c211{2, 1, 1}, c22{2, 2}, id{1, 1, 1, 1};
  switch (g) {
    case QuarticGroup::S4: return true;
    case QuarticGroup::A4: return !pats.count(c4) && !pats.count(c211);
    case QuarticGroup::V4: return !pats.count(c4) && !pats.count(c211) && !pats.count(c31);
    case QuarticGroup::C4_or_D4: return !pats.count(c31);
    case QuarticGroup::Reducible: return true;
  }
  return false;
}

RatPoly random_monic(std::mt19937_64& rng, int deg, long height) {
  std::uniform_int_distribution<long> cd(-height, height);
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(cd(rng));
  c.emplace_back(1);
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("cycle type samples") {
  CHECK(cycle_type_sample(kExampleP, 17) == FactorPattern{3, 1, 1});
  CHECK(cycle_type_sample(kExampleP, 7) == FactorPattern{5});
  CHECK_FALSE(cycle_type_sample(poly_from_ints({-1, 0, 1}), 2));
  CHECK_THROWS(cycle_type_sample(kExampleP, 15));
  CHECK_THROWS(cycle_type_sample(poly_from_ints({1, 2}), 3));
}

TEST_CASE("A_n certificates") {
  auto w = certify_contains_An(kExampleP, 1000);
  REQUIRE(w);
  CHECK(*w == AnWitness{5, 7, 17, {7}});
  auto ev = certify_equals_An(kExampleP, 1000);
  CHECK(ev.verdict == Verdict::EqualsAn);
  CHECK(ev.disc_square);

  RatPoly bring = poly_from_ints({-1, -1, 0, 0, 0, 1});
  CHECK(certify_contains_An(bring, 1000));
  auto ev2 = certify_equals_An(bring, 1000);
  CHECK(ev2.disc == Rat(2869));
  CHECK_FALSE(mpz_perfect_square_p(Int(2869).get_mpz_t()));
  CHECK(ev2.verdict == Verdict::Inconclusive);
  CHECK_FALSE(ev2.disc_square);
  CHECK(identify_group(bring, 1000).verdict == Verdict::ContainsAn);

  RatPoly cubic = poly_from_ints({1, -3, 0, 1});
  auto ev3 = certify_equals_An(cubic, 1000);
  CHECK(ev3.verdict == Verdict::EqualsAn);
  CHECK(ev3.disc == Rat(81));
  // Irreducible mod 2 as well, but only primes above the degree qualify.
  CHECK(is_irreducible_mod_p(*reduce_mod_p(cubic, 2)));
  CHECK(ev3.witness->r == std::vector<u64>{5});

  CHECK_THROWS(certify_contains_An(pow(RatPoly::x(), 5), 100));
  CHECK_THROWS(certify_contains_An(poly_from_ints({1, 0, 1}), 100));
}

TEST_CASE("soundness of EqualsAn (property)") {
  std::mt19937_64 rng(404);
  int equals = 0;
  for (int i = 0; i < 150; ++i) {
    RatPoly f = random_monic(rng, 3 + i % 3, 6);
    if (!is_squarefree(f)) continue;
    auto ev = certify_equals_An(f, 500);
    if (ev.verdict != Verdict::EqualsAn) continue;
    ++equals;
    CHECK(rat_sqrt(ev.disc));
    for (auto [p, pat] : ev.patterns) CHECK(factor_pattern(*reduce_mod_p(f, p)) == pat);
  }
  CHECK(equals > 0);
}

TEST_CASE("rational roots agree with the divisor method") {
  CHECK(rational_roots(poly_from_ints({-6, 11, -6, 1})) == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(rational_roots(poly_from_ints({1, 0, 1})).empty());
  CHECK(rational_roots(RatPoly({Rat(-1), Rat(0), Rat(4)})) ==
        std::vector<Rat>{Rat(Int(-1), Int(2)), Rat(Int(1), Int(2))});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> rd(-6, 6), dd(1, 4);
  for (int i = 0; i < 80; ++i) {
    RatPoly f = poly_from_ints({1});
    int k = 1 + i % 4;
    for (int j = 0; j < k; ++j) f *= RatPoly({Rat(rd(rng)), Rat(dd(rng))});
    if (i % 2) f *= poly_from_ints({rd(rng) | 1, 0, 1});
    CHECK(rational_roots(f) == divisor_roots(f));
  }
}

TEST_CASE("cubic resolvent") {
  CHECK(cubic_resolvent(poly_from_ints({1, 0, 0, 0, 1})) == poly_from_ints({0, -4, 0, 1}));
  const long k = -3, m = 1;
  RatPoly f = poly_from_ints({k * k, -8 * m, -2 * k, 0, 1});
  CHECK(discriminant(cubic_resolvent(f)) == discriminant(f));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    RatPoly g = random_monic(rng, 4, 10);
    CHECK(discriminant(cubic_resolvent(g)) == discriminant(g));
  }
  CHECK_THROWS(cubic_resolvent(poly_from_ints({1, 0, 1})));
}

TEST_CASE("quartic classification over Q") {
  CHECK(quartic_group_over_Q(poly_from_ints({1, 0, 0, 0, 1})) == QuarticGroup::V4);
  CHECK(quartic_group_over_Q(poly_from_ints({1, 0, 2, 0, 1})) == QuarticGroup::Reducible);
  // P - Q for the weak line at (k, m) = (-3, 1).
  RatPoly weak = poly_from_ints({9, -8, 6, 0, 1}) - poly_from_ints({1, -3, 0, 1});
  CHECK(quartic_group_over_Q(weak) == QuarticGroup::A4);
  CHECK(quartic_group_over_Q(poly_from_ints({-2, 0, 0, 0, 1})) == QuarticGroup::C4_or_D4);
  CHECK(quartic_group_over_Q(poly_from_ints({1, 1, 0, 0, 1})) == QuarticGroup::S4);
  // (X^2 - 2)(X^2 - 3): no rational root, reducible through q = 0 branch.
  CHECK(quartic_group_over_Q(poly_from_ints({6, 0, -5, 0, 1})) == QuarticGroup::Reducible);
  // (X^2 + X + 1)(X^2 - X + 3): reducible, only visible through a quadratic factor.
  CHECK(quartic_reducible_over_Q(poly_from_ints({3, 2, 3, 0, 1})));
}

TEST_CASE("quartic verdicts: shift invariance and Dedekind consistency (property)") {
  std::mt19937_64 rng(200);
  std::map<QuarticGroup, int> counts;
  for (int i = 0; i < 200; ++i) {
    RatPoly f = random_monic(rng, 4, 10);
    QuarticGroup g = quartic_group_over_Q(f);
    counts[g]++;
    CHECK(quartic_group_over_Q(shift(f, Rat(1))) == g);
    if (g != QuarticGroup::Reducible) CHECK(patterns_consistent(g, sampled_patterns(f, 60)));
  }
  CHECK(counts[QuarticGroup::S4] > 0);
}

TEST_CASE("roots in quadratic fields") {
  auto r = has_root_in_quad(QuadPoly({QuadElem(1), QuadElem(0), QuadElem(1)}), -1);
  REQUIRE(r);
  CHECK(*r * *r == QuadElem(-1));
  CHECK(roots_in_quad(QuadPoly({QuadElem(1), QuadElem(0), QuadElem(1)}), -1).size() == 2);
  CHECK_FALSE(has_root_in_quad(to_quad(poly_from_ints({-2, 0, 0, 1}), -1), -1));
  CHECK_THROWS(has_root_in_quad(QuadPoly({QuadElem::root(2), QuadElem(1)}), -1));
}

TEST_CASE("roots in quadratic fields recover constructed roots (property)") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-4, 4), den(1, 3);
  const long long fields[] = {-1, -3, 2, 5, -7};
  for (int i = 0; i < 40; ++i) {
    long long m = fields[i % 5];
    QuadElem z1(m, Rat(Int(d(rng)), Int(den(rng))), Rat(Int(d(rng)), Int(den(rng))));
    QuadElem z2(m, Rat(d(rng)), Rat(d(rng)));
    QuadPoly h = QuadPoly({-z1, QuadElem(1)}) * QuadPoly({-z2, QuadElem(1)});
    // Multiply by a quadratic irreducible over the field: X^2 - 11 (11 is not m times a square).
    if (i % 2) h = h * QuadPoly({QuadElem(-11), QuadElem(0), QuadElem(1)});
    auto roots = roots_in_quad(h, m);
    std::set<std::pair<Rat, Rat>> got, want{{z1.a(), z1.b()}, {z2.a(), z2.b()}};
    for (const auto& z : roots) got.insert({z.a(), z.b()});
    CHECK(got == want);
  }
}

TEST_CASE("quartic classification over Q(sqrt m)") {
  // X^4 + 1 splits into quadratics over Q(i): (X^2 - i)(X^2 + i).
  QuadPoly f = to_quad(poly_from_ints({1, 0, 0, 0, 1}), -1);
  CHECK(quartic_group_over_quad(f, -1) == QuarticGroup::Reducible);
  // The weak A4 member stays A4 over Q(sqrt 2) (resolvent cubic field is not quadratic).
  RatPoly weak = poly_from_ints({9, -8, 6, 0, 1}) - poly_from_ints({1, -3, 0, 1});
  CHECK(quartic_group_over_quad(to_quad(weak, 2), 2) == QuarticGroup::A4);
  // X^4 + X + 1 is S4 over Q; its discriminant 229 becomes a square over Q(sqrt 229).
  CHECK(discriminant(poly_from_ints({1, 1, 0, 0, 1})) == Rat(229));
  CHECK(quartic_group_over_quad(to_quad(poly_from_ints({1, 1, 0, 0, 1}), 229), 229) == QuarticGroup::A4);
  CHECK(quartic_group_over_quad(to_quad(poly_from_ints({1, 1, 0, 0, 1}), -1), -1) == QuarticGroup::S4);
}

namespace {

// Cycle type of a permutation given as an image vector.
FactorPattern cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  FactorPattern out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> perm_with_type(const FactorPattern& pat) {
  std::vector<int> perm;
  int start = 0;
  for (int len : pat) {
    for (int i = 0; i < len; ++i) perm.push_back(start + (i + 1) % len);
    start += len;
  }
  return perm;
}

std::vector<int> compose_power(const std::vector<int>& perm, int k) {
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int j = static_cast<int>(i);
    for (int s = 0; s < k; ++s) j = perm[static_cast<std::size_t>(j)];
    out[i] = j;
  }
  return out;
}

void partitions(int n, int max_part, FactorPattern& cur, std::vector<FactorPattern>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("power-to-cycle rule agrees with brute-force powers, n <= 9") {
  for (int n = 3; n <= 9; ++n) {
    std::vector<FactorPattern> all;
    FactorPattern cur;
    partitions(n, n, cur, all);
    for (const auto& pat : all) {
      auto perm = perm_with_type(pat);
      int order = 1;
      for (int part : pat) order = std::lcm(order, part);
      for (int len : {3, 5, 7}) {
        if (len > n) continue;
        bool some_power = false;
        for (int k = 1; k <= order; ++k) some_power = some_power || cycle_type(compose_power(perm, k)) == [&] {
          FactorPattern t{len};
          for (int i = len; i < n; ++i) t.push_back(1);
          return t;
        }();
        CAPTURE(n);
        CAPTURE(len);
        CHECK(pattern_powers_to_cycle(pat, len) == some_power);
      }
    }
  }
}

TEST_CASE("factor degrees are the subset sums of the pattern") {
  CHECK(factor_degrees({5}) == std::vector<bool>{true, false, false, false, false, true});
  CHECK(factor_degrees({3, 1}) == std::vector<bool>{true, true, false, true, true});
  CHECK(factor_degrees({2, 2}) == std::vector<bool>{true, false, true, false, true});
}

TEST_CASE("even-degree certificates use several transitivity primes") {
  // X^6 + 24 X - 20 has Galois group A6.
  RatPoly f = poly_from_ints({-20, 24, 0, 0, 0, 0, 1});
  auto ev = certify_equals_An(f, 100000);
  REQUIRE(ev.verdict == Verdict::EqualsAn);
  const auto& w = *ev.witness;
  CHECK(w.ell == 5);
  CHECK(w.r.size() >= 2);
  // Independently: no degree 1..5 survives every transitivity pattern.
  for (int d = 1; d < 6; ++d) {
    bool all_allow = true;
    for (u64 p : w.r) {
      auto pat = factor_pattern(*reduce_mod_p(f, p));
      std::vector<bool> sums(7, false);
      sums[0] = true;
      for (int part : pat) {
        for (int s = 6; s >= part; --s) sums[s] = sums[s] || sums[s - part];
      }
      all_allow = all_allow && sums[d];
    }
    CHECK_FALSE(all_allow);
  }
  CHECK(pattern_powers_to_cycle(factor_pattern(*reduce_mod_p(f, w.p)), 5));
  CHECK(pattern_powers_to_cycle(factor_pattern(*reduce_mod_p(f, w.q)), 3));
}
