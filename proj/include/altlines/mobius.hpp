#pragma once

// The two GL2 actions on lines of polynomials: the right action by
// fractional-linear substitution in X, and the left action mixing (P, Q).

#include <utility>

#include "altlines/poly.hpp"

namespace altlines {

/// [[a, b], [c, d]] with nonzero determinant.
struct Mobius {
  Rat a, b, c, d;

  Mobius(Rat a_, Rat b_, Rat c_, Rat d_);
  static Mobius identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }

  Rat det() const { return a * d - b * c; }
  Mobius inverse() const;
  /// Matrix product this * o.
  Mobius operator*(const Mobius& o) const;
  friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// (P gamma)(X) = P((aX+b)/(cX+d)) (cX+d)^n, for deg P <= n.
RatPoly mobius_right(const RatPoly& P, const Mobius& g, int n);

/// (P, Q) -> (aP + bQ, cP + dQ).
std::pair<RatPoly, RatPoly> line_left(const RatPoly& P, const RatPoly& Q, const Mobius& g);

}  // namespace altlines
