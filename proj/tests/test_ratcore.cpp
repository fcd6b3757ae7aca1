#include <doctest.h>

#include <cmath>

#include "altlines/codec.hpp"
#include "altlines/mobius.hpp"
#include "altlines/poly.hpp"
#include "oracles.hpp"

using namespace altlines;

namespace {

const RatPoly kExampleP = poly_from_ints({-2, -18, -28, -5, 4, 1});
const RatPoly kExampleQ = poly_from_ints({-7, -191, -474, -287, -49});

RatPoly X() { return RatPoly::x(); }

}  // namespace

TEST_CASE("rat canonical form and parsing") {
  Rat r(Int(6), Int(-4));
  CHECK(r.str() == "-3/2");
  CHECK(Rat::parse("-3/2") == r);
  CHECK(Rat::parse("12") == Rat(12));
  CHECK(Rat(0).str() == "0");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("1.5"));
}

TEST_CASE("rat_sqrt") {
  CHECK(rat_sqrt(Rat(81)) == Rat(9));
  CHECK_FALSE(rat_sqrt(Rat(-4)));
  CHECK(rat_sqrt(Rat(Int(4), Int(9))) == Rat(Int(2), Int(3)));
  Rat big = Rat(22068963) * Rat(22068963);
  CHECK(rat_sqrt(big) == Rat(22068963));
  CHECK_FALSE(rat_sqrt(Rat(2)));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Rat(-27)) == -3);
  CHECK(squarefree_part(Rat(Int(8), Int(9))) == 2);
  Int v = Int(5) * 5 * 5 * 5 * 5 * Int(6) * 6 * 6 * 6 * 6 * 6;
  CHECK(squarefree_part(Rat(v)) == 5);
}

TEST_CASE("basic polynomial arithmetic") {
  CHECK(derivative(kExampleP) == poly_from_ints({-18, -56, -15, 16, 5}));
  CHECK(gcd(poly_from_ints({-1, 0, 1}), poly_from_ints({-1, 1})) == poly_from_ints({-1, 1}));
  CHECK(poly_from_ints({1, 0, 1}) * poly_from_ints({-1, 0, 1}) == poly_from_ints({-1, 0, 0, 0, 1}));
  auto [q, r] = divmod(kExampleP, kExampleQ);
  CHECK(q * kExampleQ + r == kExampleP);
  CHECK(r.degree() < kExampleQ.degree());
  CHECK_THROWS(divmod(kExampleP, RatPoly()));
}

TEST_CASE("resultant examples") {
  CHECK(resultant(poly_from_ints({-3, 1}), poly_from_ints({-5, 1})) == Rat(-2));
  RatPoly f = pow(X(), 9) * poly_from_ints({-10, 1});
  RatPoly g = poly_from_ints({64, -10});
  Rat expected = Rat(-4 * 9) * Rat(ipow(8, 18));
  CHECK(resultant(f, g) == expected);
  CHECK_THROWS(resultant(RatPoly(), g));
}

TEST_CASE("Bareiss resultant agrees with field elimination") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto f = oracle::random_poly(rng, 5, 10);
    auto g = oracle::random_poly(rng, 5, 10);
    if (f.degree() < 1 || g.degree() < 1) continue;
    CHECK(resultant(f, g) == determinant(sylvester_matrix(f, g)));
  }
}

TEST_CASE("resultant agrees with the root-product formula") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto f = oracle::random_poly(rng, 4, 6);
    auto g = oracle::random_poly(rng, 4, 6);
    long double exact = resultant(f, g).value().get_d();
    long double num = oracle::resultant_by_roots(f, g);
    CHECK(std::fabs(static_cast<double>(exact - num)) <= 1e-6 * (1.0 + std::fabs(static_cast<double>(exact))));
  }
}

TEST_CASE("resultant laws (property)") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_poly(rng, 5, 10);
    auto g = oracle::random_poly(rng, 5, 10);
    auto h = oracle::random_poly(rng, 5, 10);
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(resultant(g, f) == Rat(sign) * resultant(f, g));
    RatPoly gfh = g + f * h;
    if (!gfh.is_zero()) {
      Rat lhs = resultant(f, gfh);
      Rat rhs = f.lead().pow(gfh.degree() - g.degree()) * resultant(f, g);
      CHECK(lhs == rhs);
    }
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(poly_from_ints({1, 0, 1})) == Rat(-4));
  CHECK(discriminant(poly_from_ints({1, -3, 0, 1})) == Rat(81));
  CHECK_THROWS(discriminant(RatPoly(Rat(3))));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    auto f = oracle::random_poly(rng, 4, 3);
    if (f.degree() < 1) continue;
    if (i % 3 == 0) f = f * poly_from_ints({1, 1}) * poly_from_ints({1, 1});
    bool repeated = gcd(f, derivative(f)).degree() > 0;
    CHECK((discriminant(f).is_zero()) == repeated);
  }
}

TEST_CASE("discriminant in T of the weak quartic line") {
  const long k = -3, m = 1;
  RatPoly P = poly_from_ints({k * k, -8 * m, -2 * k, 0, 1});
  RatPoly Q = poly_from_ints({m, k, 0, 1});
  RatPoly disc = discriminant_in_t(line_poly(P, Q));
  RatPoly cubic = poly_from_ints({64, -48, 0, 1});
  CHECK(disc == Rat(81) * cubic * cubic);
}

TEST_CASE("poly_sqrt") {
  CHECK(poly_sqrt(poly_from_ints({1, 2, 1})) == poly_from_ints({1, 1}));
  CHECK_FALSE(poly_sqrt(poly_from_ints({1, 0, 1})));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_poly(rng, 6, 20);
    auto r = poly_sqrt(g * g);
    REQUIRE(r);
    CHECK((*r == g || *r == -g));
    CHECK(r->lead().sign() > 0);
    CHECK(*r * *r == g * g);
  }
}

TEST_CASE("poly_sqrt recovers the example discriminant root") {
  RatPoly disc = discriminant_in_t(line_poly(kExampleP, kExampleQ));
  auto r = poly_sqrt(disc);
  REQUIRE(r);
  // The exact root is 4 times the published quartic.
  RatPoly published = poly_from_ints({1762, -62469, 946647, -6897879, 22068963});
  CHECK(*r == Rat(4) * published);
  CHECK(disc == Rat(16) * published * published);
}

TEST_CASE("quadratic field elements") {
  QuadElem i = QuadElem::root(-1);
  CHECK(i * i == QuadElem(-1));
  QuadElem z(-1, Rat(3), Rat(4));
  CHECK(z * z.inverse() == QuadElem(1));
  CHECK(z.norm() == Rat(25));
  CHECK_THROWS(QuadElem::root(-1) + QuadElem::root(2));
  CHECK_THROWS(QuadElem(4, Rat(1), Rat(1)));
  auto s = quad_sqrt(z * z, -1);
  REQUIRE(s);
  CHECK(*s * *s == z * z);
  CHECK_FALSE(quad_sqrt(QuadElem(-1, Rat(2), Rat(0)) * QuadElem::root(-1) * QuadElem(-1, Rat(0), Rat(0)) + QuadElem(3), -1));
  CHECK(quad_sqrt(QuadElem(-1), -1) == QuadElem::root(-1));
}

TEST_CASE("quadratic polynomial square root") {
  QuadPoly g({QuadElem(-1, Rat(1), Rat(2)), QuadElem(-1, Rat(Int(1), Int(3)), Rat(-1)), QuadElem(1)});
  auto r = poly_sqrt(g * g, -1);
  REQUIRE(r);
  CHECK(*r * *r == g * g);
  CHECK_FALSE(poly_sqrt(to_quad(poly_from_ints({2, 0, 1}), -1), -1));
}

TEST_CASE("mobius actions") {
  RatPoly P = poly_from_ints({0, 0, 1});
  CHECK(mobius_right(P, Mobius::identity(), 2) == P);
  auto [a, b] = line_left(kExampleP, kExampleQ, Mobius::identity());
  CHECK(a == kExampleP);
  CHECK(b == kExampleQ);
  Mobius swap(Rat(0), Rat(1), Rat(1), Rat(0));
  CHECK(mobius_right(poly_from_ints({2, 1}), swap, 1) == poly_from_ints({1, 2}));
  CHECK_THROWS(Mobius(Rat(1), Rat(2), Rat(2), Rat(4)));
}

TEST_CASE("mobius round trip and action commutation (property)") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 0; i < 40; ++i) {
    Rat a(d(rng)), b(d(rng)), c(d(rng)), e(d(rng));
    if ((a * e - b * c).is_zero()) continue;
    Mobius right(a, b, c, e);
    Mobius left(Rat(d(rng)), Rat(1), Rat(1), Rat(d(rng)));
    if (left.det().is_zero()) continue;
    const int n = 5;
    RatPoly back = mobius_right(mobius_right(kExampleP, right, n), right.inverse(), n);
    // Composition with the inverse gives P times a nonzero constant.
    Rat scale = back.lead() / kExampleP.lead();
    CHECK(back == kExampleP * scale);
    auto [l1, l2] = line_left(mobius_right(kExampleP, right, n), mobius_right(kExampleQ, right, n), left);
    auto [m1, m2] = line_left(kExampleP, kExampleQ, left);
    CHECK(l1 == mobius_right(m1, right, n));
    CHECK(l2 == mobius_right(m2, right, n));
  }
}

TEST_CASE("codec round trips") {
  CHECK(to_json(kExampleP).dump() == R"(["-2","-18","-28","-5","4","1"])");
  CHECK(ratpoly_from_json(to_json(kExampleQ)) == kExampleQ);
  QuadPoly g({QuadElem(-3, Rat(1), Rat(Int(-1), Int(2))), QuadElem(1)});
  CHECK(quadpoly_from_json(to_json(g), -3) == g);
  CHECK(parse_poly("X^5+4X^4-5X^3-28X^2-18X-2") == kExampleP);
  CHECK(parse_poly("X^5 + 4*X^4 - 5*X^3 - 28*X^2 - 18*X - 2") == kExampleP);
  CHECK(parse_poly("1/2X - 3/4") == RatPoly({Rat(Int(-3), Int(4)), Rat(Int(1), Int(2))}));
  CHECK(parse_poly("-X") == poly_from_ints({0, -1}));
  CHECK_THROWS(parse_poly("X^2 X"));
  CHECK_THROWS(parse_poly(""));
  CHECK_THROWS(parse_poly("2**X"));
}
