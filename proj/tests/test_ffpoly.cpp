#include <doctest.h>

#include <random>
#include <set>

#include "altlines/ffpoly.hpp"

using namespace altlines;

namespace {

const RatPoly kExampleP = poly_from_ints({-2, -18, -28, -5, 4, 1});

// Rabin's irreducibility test, written against plain repeated powering.
bool rabin_irreducible(const FpPoly& g) {
  const u64 p = g.p();
  const int d = g.degree();
  auto frob_power = [&](int k) {
    FpPoly h = FpPoly::x(p) % g;
    for (int i = 0; i < k; ++i) h = powmod(h, Int(std::to_string(p)), g);
    return h;
  };
  if (!((frob_power(d) - FpPoly::x(p)) % g).is_zero()) return false;
  for (int q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool prime = true;
    for (int r = 2; r * r <= q; ++r) prime = prime && (q % r != 0);
    if (!prime) continue;
    if (gcd(g, frob_power(d / q) - FpPoly::x(p)).degree() != 0) return false;
  }
  return true;
}

bool is_even_cycle_type(const FactorPattern& pat) {
  int even_cycles = 0;
  for (int d : pat) even_cycles += (d % 2 == 0);
  return even_cycles % 2 == 0;
}

}  // namespace

TEST_CASE("reduction modulo p") {
  auto r7 = reduce_mod_p(kExampleP, 7);
  REQUIRE(r7);
  CHECK(r7->coeffs() == std::vector<u64>{5, 3, 0, 2, 4, 1});
  CHECK_FALSE(reduce_mod_p(poly_from_ints({-1, 0, 1}), 2));
  // X^3 + 1 has discriminant -27, so 3 is a bad prime.
  CHECK(discriminant(poly_from_ints({1, 0, 0, 1})) == Rat(-27));
  CHECK_FALSE(reduce_mod_p(poly_from_ints({1, 0, 0, 1}), 3));
  CHECK_THROWS(reduce_mod_p(kExampleP, 9));
  CHECK_FALSE(reduce_mod_p(RatPoly({Rat(1), Rat(Int(1), Int(5))}), 5));
}

TEST_CASE("factor patterns of the degree-5 example") {
  auto r7 = reduce_mod_p(kExampleP, 7);
  auto r17 = reduce_mod_p(kExampleP, 17);
  REQUIRE(r7);
  REQUIRE(r17);
  CHECK(factor_pattern(*r7) == FactorPattern{5});
  CHECK(is_irreducible_mod_p(*r7));
  CHECK(factor_pattern(*r17) == FactorPattern{3, 1, 1});
  auto factors = factor(*r17);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == FpPoly(17, {5, 1}));
  CHECK(factors[1] == FpPoly(17, {6, 1}));
  CHECK(factors[2] == FpPoly(17, {9, 8, 10, 1}));
}

TEST_CASE("small patterns") {
  CHECK(factor_pattern(FpPoly(5, {4, 0, 1})) == FactorPattern{1, 1});
  CHECK_FALSE(is_irreducible_mod_p(FpPoly(5, {1, 0, 1})));
  CHECK(is_irreducible_mod_p(FpPoly(3, {1, 0, 1})));
  CHECK_THROWS(factor_pattern(FpPoly(5, {1, 2, 1})));
  CHECK(roots_mod_p(FpPoly(5, {1, 0, 1})) == std::vector<u64>{2, 3});
  CHECK(roots_mod_p(FpPoly(2, {0, 1, 1})) == std::vector<u64>{0, 1});
}

TEST_CASE("random factorizations (property)") {
  std::mt19937_64 rng(77);
  const u64 primes[] = {2, 3, 5, 7, 11, 13, 31, 53, 97};
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    u64 p = primes[iter % 9];
    std::uniform_int_distribution<int> dd(1, 8);
    std::uniform_int_distribution<u64> cd(0, p - 1);
    int d = dd(rng);
    std::vector<u64> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = cd(rng);
    c.back() = 1;
    FpPoly f(p, c);
    if (!is_separable(f)) continue;
    ++checked;
    auto fs = factor(f, iter);
    FpPoly prod = FpPoly::constant(p, 1);
    int total = 0;
    for (const auto& g : fs) {
      prod = prod * g;
      total += g.degree();
      CHECK(rabin_irreducible(g));
    }
    CHECK(prod == f);
    CHECK(total == d);
    FactorPattern pat = factor_pattern(f);
    FactorPattern from_factors;
    for (const auto& g : fs) from_factors.push_back(g.degree());
    std::sort(from_factors.rbegin(), from_factors.rend());
    CHECK(pat == from_factors);
  }
  CHECK(checked > 150);
}

TEST_CASE("patterns of the A5 example are even cycle types at every good prime below 10^4") {
  std::set<FactorPattern> seen;
  for (u64 p = 2; p < 10000; p = next_prime_u64(p)) {
    auto r = reduce_mod_p(kExampleP, p);
    if (!r) continue;
    FactorPattern pat = factor_pattern(*r);
    CHECK(is_even_cycle_type(pat));
    seen.insert(pat);
  }
  std::set<FactorPattern> allowed = {{5}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}};
  CHECK(seen == allowed);
}

TEST_CASE("large prime modulus") {
  const u64 p = 9223372036854775783ULL;  // largest prime below 2^63
  REQUIRE(is_prime_u64(p));
  auto r = reduce_mod_p(kExampleP, p);
  REQUIRE(r);
  auto pat = factor_pattern(*r);
  int sum = 0;
  for (int d : pat) sum += d;
  CHECK(sum == 5);
}
