#include "altlines/mobius.hpp"

#include <stdexcept>

namespace altlines {

Mobius::Mobius(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (det().is_zero()) throw std::invalid_argument("Mobius: degenerate matrix");
}

Mobius Mobius::inverse() const {
  Rat k = det();
  return {d / k, -b / k, -c / k, a / k};
}

Mobius Mobius::operator*(const Mobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

RatPoly mobius_right(const RatPoly& P, const Mobius& g, int n) {
  if (P.degree() > n) throw std::invalid_argument("mobius_right: deg P exceeds n");
  const RatPoly num({g.b, g.a});
  const RatPoly den({g.d, g.c});
  RatPoly out;
  for (int i = 0; i <= P.degree(); ++i) {
    if (P.coeff(i).is_zero()) continue;
    out += P.coeff(i) * (pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(n - i)));
  }
  return out;
}

std::pair<RatPoly, RatPoly> line_left(const RatPoly& P, const RatPoly& Q, const Mobius& g) {
  return {g.a * P + g.b * Q, g.c * P + g.d * Q};
}

}  // namespace altlines
