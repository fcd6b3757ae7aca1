#include <doctest.h>

#include <random>

#include "altlines/evenline.hpp"
#include "oracles.hpp"

using namespace altlines;

namespace {

Rat eval(const RatPoly& p, const Rat& x) {
  Rat acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
  return acc;
}

}  // namespace

TEST_CASE("canonical cover coefficients satisfy the three ramification conditions") {
  for (int n = 3; n <= 30; ++n) {
    auto k = canonical_cover_coeffs(n);
    CHECK(k.a + k.b == k.c + k.d);
    CHECK(Rat(n) * k.a + Rat(n - 1) * k.b == k.c);
    CHECK(Rat(n) * k.a + Rat(n - 2) * k.b == Rat(0));
  }
}

TEST_CASE("even family closed forms, n = 4..20") {
  for (int n = 4; n <= 20; n += 2) {
    CAPTURE(n);
    EvenFamily fam = even_family(n);
    // Specializations against the resultant definition of the discriminant.
    for (long t = -3; t <= 3; ++t) {
      RatPoly f = fam.P - Rat(t) * fam.Q;
      CHECK(oracle::disc_by_resultant(f) == eval(fam.disc_closed_form, Rat(t)));
    }
  }
  CHECK_THROWS_AS(even_family(5), std::invalid_argument);
  CHECK_THROWS_AS(even_family(2), std::invalid_argument);
}

TEST_CASE("base field of the even family") {
  CHECK(base_field_even(4) == -3);
  CHECK(base_field_even(6) == 5);
  CHECK(base_field_even(8) == -7);
  CHECK(base_field_even(10) == 1);
  CHECK(base_field_even(26) == 1);
}

TEST_CASE("transport to the family's ramification points recovers the family map") {
  for (int n = 4; n <= 12; n += 2) {
    CAPTURE(n);
    EvenFamily fam = even_family(n);
    Rat branch(ipow(n - 2, static_cast<unsigned long>(n - 2)));
    RamTriple t{P1Point::at(Rat(0)), P1Point::infinity(), P1Point::at(Rat(n - 2)),
                P1Point::at(Rat(0)), P1Point::infinity(), P1Point::at(branch)};
    Cover c = transported_cover(n, t);
    CHECK(c.N * fam.Q == c.D * fam.P);
    CHECK(check_ramification(c, t));
  }
}

TEST_CASE("transported covers ramify as prescribed and nowhere else") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-9, 9);
  auto random_point = [&](bool allow_infinity) {
    if (allow_infinity && rng() % 4 == 0) return P1Point::infinity();
    return P1Point::at(Rat(Int(small(rng)), Int(1 + rng() % 4)));
  };
  int tried = 0;
  while (tried < 40) {
    RamTriple t{random_point(true), random_point(true), random_point(true),
                random_point(false), random_point(false), random_point(false)};
    if (t.p == t.q || t.q == t.r || t.p == t.r) continue;
    if (t.p_img == t.q_img || t.q_img == t.r_img || t.p_img == t.r_img) continue;
    ++tried;
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    Cover c = transported_cover(n, t);
    CAPTURE(n);
    REQUIRE(check_ramification(c, t));
    // Riemann-Hurwitz: 2n - 2 = (n-2) + (n-2) + 2, so every branch point of
    // N - T D is one of the three images.
    RatPoly disc = discriminant_in_t(line_poly(c.N, c.D));
    RatPoly radical = divmod(disc, gcd(disc, derivative(disc))).first;
    RatPoly images = RatPoly({-*t.p_img.value, Rat(1)}) * RatPoly({-*t.q_img.value, Rat(1)}) *
                     RatPoly({-*t.r_img.value, Rat(1)});
    CHECK((images % radical).is_zero());
  }
}

TEST_CASE("fiber multiplicity at infinity uses the degree drop") {
  // X^3 / 1: infinity over infinity with multiplicity 3; 0 over 0 likewise.
  Cover c{3, RatPoly::monomial(Rat(1), 3), RatPoly({Rat(1)})};
  CHECK(fiber_multiplicity(c, P1Point::infinity(), P1Point::infinity()) == 3);
  CHECK(fiber_multiplicity(c, P1Point::at(Rat(0)), P1Point::at(Rat(0))) == 3);
  CHECK(fiber_multiplicity(c, P1Point::at(Rat(1)), P1Point::at(Rat(1))) == 1);
  CHECK(fiber_multiplicity(c, P1Point::at(Rat(2)), P1Point::at(Rat(1))) == 0);
}

TEST_CASE("A10 line over Q") {
  EvenLine line = build_line_even(10, 1000000);
  const auto& rc = line.recipe;
  CHECK(rc.P == RatPoly::monomial(Rat(1), 10) - RatPoly::monomial(Rat(10), 9));
  CHECK(rc.scale == rc.primes.modulus());
  CHECK(line.sqrt_disc * line.sqrt_disc == line.family.disc_closed_form);
  for (long N = -3; N <= 3; ++N) {
    CAPTURE(N);
    CHECK(certify_equals_An(rc.member(Int(N)), 1000000).verdict == Verdict::EqualsAn);
  }
  CHECK_THROWS_AS(build_line_even(4, 1000), std::invalid_argument);
  CHECK_THROWS_AS(build_line_even(2, 1000), std::invalid_argument);
  CHECK_THROWS_AS(build_line_even(8, 1000), std::invalid_argument);
}

TEST_CASE("square discriminant exactly when n - 1 is a square, n = 4..20") {
  for (int n = 4; n <= 20; n += 2) {
    CAPTURE(n);
    EvenFamily fam = even_family(n);
    CHECK(poly_sqrt(fam.disc_closed_form).has_value() == is_square(Int(n - 1)));
    CHECK((fam.base_field_a == 1) == is_square(Int(n - 1)));
    CHECK((n - 2) + (n - 2) + 2 == 2 * n - 2);
  }
}

TEST_CASE("identity triple gives the canonical cover") {
  RamTriple id{P1Point::at(Rat(0)), P1Point::infinity(), P1Point::at(Rat(1)),
               P1Point::at(Rat(0)), P1Point::infinity(), P1Point::at(Rat(1))};
  Cover c = transported_cover(4, id);
  // x^3 (2x - 4) over -4x + 2, up to a common scalar.
  RatPoly P = poly_from_ints({0, 0, 0, -4, 2});
  RatPoly Q = poly_from_ints({2, -4});
  CHECK(c.N * Q == c.D * P);
  CHECK(check_ramification(c, id));
  // Swapping the roles of 0 and infinity on both sides.
  RamTriple swapped{P1Point::infinity(), P1Point::at(Rat(0)), P1Point::at(Rat(1)),
                    P1Point::infinity(), P1Point::at(Rat(0)), P1Point::at(Rat(1))};
  CHECK(check_ramification(transported_cover(4, swapped), swapped));
  RamTriple bad = id;
  bad.q = bad.p;
  CHECK_THROWS_AS(transported_cover(4, bad), std::invalid_argument);
}
