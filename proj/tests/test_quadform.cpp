#include <doctest.h>

#include <cmath>
#include <numeric>

#include "altlines/quadform.hpp"
#include "altlines/quarticline.hpp"

using namespace altlines;

namespace {

std::vector<long long> squarefree_range(long long bound) {
  std::vector<long long> out;
  for (long long m = -bound; m <= bound; ++m) {
    if (m != 0 && m != 1 && is_squarefree(m)) out.push_back(m);
  }
  return out;
}

// Legendre: a ternary form with squarefree, pairwise coprime a, b, c is
// isotropic over Q iff it has a nonzero integer zero with
// |x| <= sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab|.
bool brute_isotropic(long a, long b, long c) {
  const long bx = static_cast<long>(std::sqrt(static_cast<double>(std::labs(b * c)))) + 1;
  const long by = static_cast<long>(std::sqrt(static_cast<double>(std::labs(a * c)))) + 1;
  const long bz = static_cast<long>(std::sqrt(static_cast<double>(std::labs(a * b)))) + 1;
  for (long x = 0; x <= bx; ++x) {
    for (long y = -by; y <= by; ++y) {
      for (long z = -bz; z <= bz; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (a * x * x + b * y * y + c * z * z == 0) return true;
      }
    }
  }
  return false;
}

bool all_local(const DiagForm& f, long abc) {
  if (!isotropic_local(f, Place::real()) || !isotropic_local(f, Place::prime(2))) return false;
  for (long p = 3; p <= std::labs(abc); p += 2) {
    if (abc % p == 0 && is_prime_u64(static_cast<std::uint64_t>(p)) && !isotropic_local(f, Place::prime(p))) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("strong-field criterion") {
  CHECK(decide_strong_field(-1));
  CHECK_FALSE(decide_strong_field(-7));
  CHECK_FALSE(decide_strong_field(5));
  CHECK(decide_strong_field(-2));
  CHECK(decide_strong_field(-3));
  CHECK_FALSE(decide_strong_field(-15));
  CHECK_THROWS_AS(decide_strong_field(-4), std::invalid_argument);
  CHECK_THROWS_AS(decide_strong_field(0), std::invalid_argument);
  CHECK_THROWS_AS(decide_strong_field(1), std::invalid_argument);
}

TEST_CASE("local isotropy of q1") {
  CHECK(isotropic_local(q1_form(-1), Place::real()));
  CHECK_FALSE(isotropic_local(q1_form(5), Place::real()));
  CHECK_FALSE(isotropic_local(q1_form(-7), Place::prime(2)));
  CHECK(isotropic_local(q1_form(-1), Place::prime(2)));
  CHECK(isotropic_local(q1_form(-1), Place::prime(3)));
  // q1(-1) = <1, 2, 1, -2> has the zero (0, 1, 0, 1) mod anything.
  CHECK(isotropic_local(q1_form(-3), Place::prime(3)));
  CHECK_THROWS_AS(isotropic_local(DiagForm{{Rat(1), Rat(0)}}, Place::real()), std::invalid_argument);
  CHECK_THROWS_AS(isotropic_local(q1_form(-1), Place::prime(9)), std::invalid_argument);
}

TEST_CASE("small local examples against hand facts") {
  // <1, 1> is isotropic exactly where -1 is a square.
  DiagForm sum2{{Rat(1), Rat(1)}};
  CHECK(isotropic_local(sum2, Place::prime(5)));
  CHECK_FALSE(isotropic_local(sum2, Place::prime(3)));
  CHECK_FALSE(isotropic_local(sum2, Place::prime(2)));
  // <1, 1, 1> is anisotropic only at 2 and at infinity.
  DiagForm sum3{{Rat(1), Rat(1), Rat(1)}};
  CHECK_FALSE(isotropic_local(sum3, Place::prime(2)));
  CHECK(isotropic_local(sum3, Place::prime(3)));
  // <1, 1, 1, 1> is anisotropic at 2; <1, 1, 1, -7> is not.
  CHECK_FALSE(isotropic_local(DiagForm{{Rat(1), Rat(1), Rat(1), Rat(1)}}, Place::prime(2)));
  // <1, -3, p-part> style: <1, 1, 3> at 3 uses the unit part <1, 1>, anisotropic mod 3, and <1>.
  CHECK_FALSE(isotropic_local(DiagForm{{Rat(1), Rat(1), Rat(3)}}, Place::prime(3)));
}

TEST_CASE("Hasse-Minkowski on ternary forms matches a Legendre-bounded search") {
  const std::vector<long> coeffs = {-15, -14, -13, -11, -10, -7, -6, -5, -3, -2, -1,
                                    1,   2,   3,   5,   6,   7,  10, 11, 13, 14, 15};
  int compared = 0, isotropic = 0;
  for (long a : coeffs) {
    for (long b : coeffs) {
      for (long c : coeffs) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
        if (std::labs(a) > std::labs(b) || std::labs(b) > std::labs(c)) continue;
        DiagForm f{{Rat(a), Rat(b), Rat(c)}};
        bool brute = brute_isotropic(a, b, c);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(all_local(f, a * b * c) == brute);
        ++compared;
        isotropic += brute;
      }
    }
  }
  CHECK(compared > 200);
  CHECK(isotropic > 20);
}

TEST_CASE("local-global decision agrees with the criterion for |m| <= 200") {
  int checked = 0;
  for (long long m : squarefree_range(200)) {
    CAPTURE(m);
    CHECK(decide_via_local_global(m) == decide_strong_field(m));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("representations of -1 by 3u^2 - 2uc + 3c^2") {
  // The published pair for m = -1.
  QuadElem u(-1, Rat(0), Rat(Int(-1), Int(6))), c(-1, Rat(0), Rat(Int(1), Int(2)));
  CHECK(q_form(u, c) == QuadElem(-1));

  int solved = 0, eligible = 0;
  for (long long m : squarefree_range(50)) {
    if (m < 0 && ((m % 8) + 8) % 8 != 1) ++eligible;
    if (!decide_strong_field(m)) {
      CHECK_THROWS_AS(represent_minus_one(m), std::invalid_argument);
      continue;
    }
    CAPTURE(m);
    auto rep = represent_minus_one(m);
    REQUIRE(rep);
    CHECK(q_form(rep->u, rep->c) == QuadElem(-1));
    CHECK_FALSE(rep->u == rep->c);
    CHECK(rep->u.m() == m);
    if (rep->q1_zero) {
      const auto& v = *rep->q1_zero;
      CHECK(v[0] * v[0] + 2 * v[1] * v[1] + v[2] * v[2] + Int(static_cast<long>(2 * m)) * v[3] * v[3] == 0);
    }
    ++solved;
  }
  CHECK(solved == eligible);
  CHECK(eligible == 25);
  CHECK_THROWS_AS(represent_minus_one(-7), std::invalid_argument);
}

TEST_CASE("strong lines from solved representations") {
  for (long long m : {-1LL, -2LL, -3LL, -5LL}) {
    CAPTURE(m);
    auto rep = represent_minus_one(m);
    REQUIRE(rep);
    StrongLine line = strong_line({m, rep->u, rep->c});
    CHECK(line.sqrt_disc * line.sqrt_disc == line.disc);
    int a4 = 0;
    for (long t = 1; t <= 8; ++t) {
      QuadPoly f = line.P - QuadElem(t) * line.Q;
      if (discriminant(f).is_zero()) continue;
      QuarticGroup g = quartic_group_over_quad(f, m);
      if (g == QuarticGroup::Reducible) continue;
      CHECK(g == QuarticGroup::A4);
      ++a4;
    }
    CHECK(a4 >= 5);
  }
}
