#pragma once

// Degree-4 lines: the classified weak lines X^4 - 2kX^2 - 8mX + k^2 - T(X^3 + kX + m),
// the cubic field splitting their resolvent, the polynomial identities behind
// the non-existence of strong lines over Q, and strong lines over Q(sqrt m).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "altlines/galoisid.hpp"
#include "altlines/poly.hpp"

namespace altlines {

/// Element c0 + c1 Y + c2 Y^2 of Q[Y] / (Y^3 + kY + m). A value built from a
/// plain rational is untagged and combines with any algebra.
class CubicElem {
 public:
  CubicElem() = default;
  CubicElem(long v) : c_{Rat(v), Rat(0), Rat(0)} {}  // NOLINT(google-explicit-constructor)
  CubicElem(const Rat& v) : c_{v, Rat(0), Rat(0)} {}  // NOLINT(google-explicit-constructor)
  CubicElem(const Rat& k, const Rat& m, std::array<Rat, 3> c);

  /// The class of Y.
  static CubicElem generator(const Rat& k, const Rat& m);

  const std::array<Rat, 3>& coeffs() const { return c_; }
  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  CubicElem inverse() const;
  std::string str() const;

  CubicElem& operator+=(const CubicElem& o);
  CubicElem& operator-=(const CubicElem& o);
  CubicElem& operator*=(const CubicElem& o);
  CubicElem& operator/=(const CubicElem& o) { return *this *= o.inverse(); }
  friend CubicElem operator+(CubicElem x, const CubicElem& y) { return x += y; }
  friend CubicElem operator-(CubicElem x, const CubicElem& y) { return x -= y; }
  friend CubicElem operator*(CubicElem x, const CubicElem& y) { return x *= y; }
  friend CubicElem operator/(CubicElem x, const CubicElem& y) { return x /= y; }
  friend CubicElem operator-(const CubicElem& x) { return CubicElem() - x; }
  friend bool operator==(const CubicElem& x, const CubicElem& y) { return x.c_ == y.c_; }

 private:
  void adopt(const CubicElem& o);
  bool tagged_ = false;
  Rat k_, m_;
  std::array<Rat, 3> c_{};
};

struct QuarticParams {
  Rat k, m, c;
};

/// Params with c = sqrt(-4k^3 - 27m^2); throws if that is zero or not a square.
QuarticParams make_quartic_params(const Rat& k, const Rat& m);

struct WeakLine {
  QuarticParams params;
  RatPoly P, Q;
  /// T^3 + 16kT + 64m; the discriminant is c^2 times its square.
  RatPoly branch_cubic;
  RatPoly disc;
};

/// Builds and verifies the line, including P = R^2 - 2mSU, 4Q = -2RS + 2kSU + mU^2
/// and S^2 + 2RU - kU^2 = 0 for R = x^2 - ky^2, S = -2xy, U = -2y^2.
WeakLine weak_line(const QuarticParams& params);

/// Whether X^3 + kX + m has no rational root. Only then are the three branch
/// points a single Galois orbit and the line A4; otherwise it is V4.
bool branch_cubic_irreducible(const QuarticParams& params);

/// All integer (k, m), |k|, |m| <= height_bound, with -4k^3 - 27m^2 a nonzero square.
std::vector<QuarticParams> enumerate_params(long height_bound);

struct WeakFieldReport {
  bool split = false;
  /// Root a T + b of the resolvent, a and b in Q[Y]/(Y^3 + kY + m).
  std::optional<CubicElem> slope, intercept;
  /// Cubic resolvent of P - TQ as a cubic in X over Q[T].
  Poly<RatPoly> resolvent;
};

/// Looks for a root of the resolvent linear in T over the cubic algebra.
/// Reports split only with a root that has been substituted back exactly.
WeakFieldReport weak_field_check(const QuarticParams& params);

/// Root a T + b of a monic cubic in X over Q[T], with a = Y the generator of
/// Q[Y]/(Y^3 + kY + m) and b solved from the T^2 coefficient. Empty when the
/// ansatz does not apply or the candidate fails the exact check.
std::optional<std::pair<CubicElem, CubicElem>> linear_root_over_cubic(const Poly<RatPoly>& cubic, const Rat& k,
                                                                       const Rat& m);

/// Resolvent of a quartic over Q[T] that is monic in X.
Poly<RatPoly> cubic_resolvent_in_t(const Poly<RatPoly>& f);

struct Case1Report {
  Rat a, b, c, d;
  bool quadric_zero = false;
  bool segre = false;
  bool derivative_identity = false;
  bool discriminant_identity = false;
  bool all() const { return quadric_zero && segre && derivative_identity && discriminant_identity; }
};

/// (a,b,c,d) = ((pr+3qs)/8, (9rs-pq)/8, (pq-rs)/8, (3pr+qs)/8) and the
/// identities of the three-(3,1)-fibers case.
Case1Report case1_identities(const Rat& p, const Rat& q, const Rat& r, const Rat& s);

/// 3a^2 - ad + bc + 9c^2, 6ab + 18cd, -3ad + 3b^2 + 3bc + 9d^2.
std::array<Rat, 3> case1_quadratic(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

struct Case2Report {
  Rat d;
  bool residue_zero = false;
  bool form_decomposition = false;
  bool antiderivative = false;
  bool discriminant_identity = false;
  bool all() const { return residue_zero && form_decomposition && antiderivative && discriminant_identity; }
};

/// 3x^2 - 2xy + 3y^2 over Q or Q(sqrt m).
Rat q_form(const Rat& x, const Rat& y);
QuadElem q_form(const QuadElem& x, const QuadElem& y);

Case2Report case2_identities(const Rat& u, const Rat& c);

struct NoFixedReport {
  Poly<RatPoly> quartic;
  Poly<RatPoly> resolvent;
  Poly<RatPoly> expected_product;
  bool matches = false;
};

/// Resolvent of (-aX^2-2bX+b)^2 - T((-aX^2-2bX+b)^2 - (aX^2-2aX-b)^2) against
/// (aX+2b)(aX+2b-4(a+b)T)(a^2X-2ab-4b^2+4b(a+b)T), after scaling by a^4.
NoFixedReport nofixed_resolvent(const Rat& a, const Rat& b);

struct StrongParams {
  long long m = 0;
  QuadElem u, c;
};

struct StrongLine {
  StrongParams params;
  QuadPoly P, Q;
  QuadPoly disc;
  QuadPoly sqrt_disc;
  /// (12u^2 - 8cu + 12c^2)T^2 + (-15u^3 + 19cu^2 - 21c^2u + 9c^3)T + 3u^4 - 2cu^3.
  QuadPoly branch_quadratic;
};

/// P = (X^2 + 1)^2 and Q = -2u^2X^3 - 2uqX^2 - 2c^2qX + (u-c)q^2 with q = q(u,c) = -1.
/// Checks Delta(Q - TP) = -16q^3(u-c)^4 R(T)^2 and that Delta(P - TQ) is a square.
StrongLine strong_line(const StrongParams& params);

}  // namespace altlines
