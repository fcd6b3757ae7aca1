#include "altlines/quarticline.hpp"

#include <stdexcept>

#include "altlines/errors.hpp"

namespace altlines {

// ---------------------------------------------------------------------------
// CubicElem

CubicElem::CubicElem(const Rat& k, const Rat& m, std::array<Rat, 3> c)
    : tagged_(true), k_(k), m_(m), c_(std::move(c)) {}

CubicElem CubicElem::generator(const Rat& k, const Rat& m) { return CubicElem(k, m, {Rat(0), Rat(1), Rat(0)}); }

void CubicElem::adopt(const CubicElem& o) {
  if (!o.tagged_) return;
  if (!tagged_) {
    tagged_ = true;
    k_ = o.k_;
    m_ = o.m_;
  } else if (k_ != o.k_ || m_ != o.m_) {
    throw std::invalid_argument("CubicElem: elements of different algebras");
  }
}

CubicElem& CubicElem::operator+=(const CubicElem& o) {
  adopt(o);
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

CubicElem& CubicElem::operator-=(const CubicElem& o) {
  adopt(o);
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

CubicElem& CubicElem::operator*=(const CubicElem& o) {
  adopt(o);
  std::array<Rat, 5> e{};
  for (int i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) e[i + j] += c_[i] * o.c_[j];
  }
  // Y^3 = -kY - m, Y^4 = -kY^2 - mY.
  c_[0] = e[0] - m_ * e[3];
  c_[1] = e[1] - k_ * e[3] - m_ * e[4];
  c_[2] = e[2] - k_ * e[4];
  return *this;
}

CubicElem CubicElem::inverse() const {
  if (!tagged_) {
    if (c_[0].is_zero()) throw std::domain_error("CubicElem: division by zero");
    return CubicElem(Rat(1) / c_[0]);
  }
  // Columns are this * 1, this * Y, this * Y^2; solve for the preimage of 1.
  std::array<std::array<Rat, 4>, 3> aug{};
  CubicElem basis(k_, m_, {Rat(1), Rat(0), Rat(0)});
  const CubicElem y = generator(k_, m_);
  for (int col = 0; col < 3; ++col) {
    CubicElem v = *this * basis;
    for (int row = 0; row < 3; ++row) aug[row][col] = v.c_[row];
    basis *= y;
  }
  aug[0][3] = Rat(1);
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (piv < 3 && aug[piv][col].is_zero()) ++piv;
    if (piv == 3) throw std::domain_error("CubicElem: zero divisor");
    std::swap(aug[piv], aug[col]);
    const Rat inv = Rat(1) / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (int row = 0; row < 3; ++row) {
      if (row == col || aug[row][col].is_zero()) continue;
      const Rat f = aug[row][col];
      for (int j = 0; j < 4; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  return CubicElem(k_, m_, {aug[0][3], aug[1][3], aug[2][3]});
}

std::string CubicElem::str() const { return to_string(RatPoly({c_[0], c_[1], c_[2]}), "Y"); }

// ---------------------------------------------------------------------------
// Weak lines

namespace {

Rat cubic_disc(const Rat& k, const Rat& m) { return Rat(-4) * k * k * k - Rat(27) * m * m; }

void validate(const QuarticParams& p) {
  if (p.c.is_zero()) throw std::invalid_argument("QuarticParams: X^3 + kX + m is not separable");
  if (p.c * p.c != cubic_disc(p.k, p.m)) throw std::invalid_argument("QuarticParams: c^2 != -4k^3 - 27m^2");
}

RatPoly linear(const Rat& c0, const Rat& c1) { return RatPoly({c0, c1}); }

}  // namespace

QuarticParams make_quartic_params(const Rat& k, const Rat& m) {
  auto c = rat_sqrt(cubic_disc(k, m));
  if (!c) throw std::invalid_argument("make_quartic_params: -4k^3 - 27m^2 is not a square");
  QuarticParams p{k, m, *c};
  validate(p);
  return p;
}

WeakLine weak_line(const QuarticParams& params) {
  validate(params);
  const Rat& k = params.k;
  const Rat& m = params.m;
  WeakLine line;
  line.params = params;
  line.P = RatPoly({k * k, Rat(-8) * m, Rat(-2) * k, Rat(0), Rat(1)});
  line.Q = RatPoly({m, k, Rat(0), Rat(1)});
  line.branch_cubic = RatPoly({Rat(64) * m, Rat(16) * k, Rat(0), Rat(1)});
  line.disc = discriminant_in_t(line_poly(line.P, line.Q));
  if (line.disc != params.c * params.c * line.branch_cubic * line.branch_cubic) {
    throw InternalInconsistency("weak_line: discriminant identity fails");
  }
  // The conic parametrization, dehomogenized at y = 1.
  const RatPoly R = RatPoly({-k, Rat(0), Rat(1)});
  const RatPoly S = linear(Rat(0), Rat(-2));
  const RatPoly U = RatPoly({Rat(-2)});
  if (line.P != R * R - Rat(2) * m * S * U ||
      Rat(4) * line.Q != Rat(-2) * R * S + Rat(2) * k * S * U + m * U * U ||
      !(S * S + Rat(2) * R * U - k * U * U).is_zero()) {
    throw InternalInconsistency("weak_line: conic derivation does not replay");
  }
  return line;
}

bool branch_cubic_irreducible(const QuarticParams& params) {
  return rational_roots(RatPoly({params.m, params.k, Rat(0), Rat(1)})).empty();
}

std::vector<QuarticParams> enumerate_params(long height_bound) {
  if (height_bound < 1) throw std::invalid_argument("enumerate_params: height bound must be positive");
  std::vector<QuarticParams> out;
  for (long k = -height_bound; k <= height_bound; ++k) {
    for (long m = -height_bound; m <= height_bound; ++m) {
      Rat v = cubic_disc(Rat(k), Rat(m));
      if (v.sign() <= 0) continue;
      if (auto c = rat_sqrt(v)) out.push_back({Rat(k), Rat(m), *c});
    }
  }
  return out;
}

Poly<RatPoly> cubic_resolvent_in_t(const Poly<RatPoly>& f) {
  if (f.degree() != 4 || f.lead() != RatPoly({Rat(1)})) {
    throw std::invalid_argument("cubic_resolvent_in_t: quartic must be monic in X");
  }
  const RatPoly c1 = -f.coeff(3), c2 = f.coeff(2), c3 = -f.coeff(1), c4 = f.coeff(0);
  const Rat four(4);
  return Poly<RatPoly>({-(c3 * c3) - c1 * c1 * c4 + four * c2 * c4, c1 * c3 - four * c4, -c2, RatPoly({Rat(1)})});
}

std::optional<std::pair<CubicElem, CubicElem>> linear_root_over_cubic(const Poly<RatPoly>& cubic, const Rat& k,
                                                                       const Rat& m) {
  if (cubic.degree() != 3 || cubic.lead() != RatPoly({Rat(1)})) {
    throw std::invalid_argument("linear_root_over_cubic: cubic must be monic in X");
  }
  auto lift = [](const RatPoly& p) { return p.map<CubicElem>([](const Rat& v) { return CubicElem(v); }); };
  // The cubic evaluated at X = aT + b, as a polynomial in T over the algebra.
  auto substitute = [&](const CubicElem& a, const CubicElem& b) {
    const Poly<CubicElem> x({b, a});
    Poly<CubicElem> acc;
    for (int i = cubic.degree(); i >= 0; --i) acc = acc * x + lift(cubic.coeff(i));
    return acc;
  };
  const CubicElem a = CubicElem::generator(k, m);
  const CubicElem g0 = substitute(a, CubicElem(0)).coeff(2);
  const CubicElem g1 = substitute(a, CubicElem(1)).coeff(2) - g0;
  CubicElem b;
  try {
    b = -g0 / g1;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  if (!substitute(a, b).is_zero()) return std::nullopt;
  return std::make_pair(a, b);
}

WeakFieldReport weak_field_check(const QuarticParams& params) {
  WeakLine line = weak_line(params);
  WeakFieldReport report;
  report.resolvent = cubic_resolvent_in_t(line_poly(line.P, line.Q));
  if (auto root = linear_root_over_cubic(report.resolvent, params.k, params.m)) {
    report.split = true;
    report.slope = root->first;
    report.intercept = root->second;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Case identities

std::array<Rat, 3> case1_quadratic(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return {Rat(3) * a * a - a * d + b * c + Rat(9) * c * c, Rat(6) * a * b + Rat(18) * c * d,
          Rat(-3) * a * d + Rat(3) * b * b + Rat(3) * b * c + Rat(9) * d * d};
}

Case1Report case1_identities(const Rat& p, const Rat& q, const Rat& r, const Rat& s) {
  Case1Report rep;
  const Rat eighth(Int(1), Int(8));
  rep.a = (p * r + Rat(3) * q * s) * eighth;
  rep.b = (Rat(9) * r * s - p * q) * eighth;
  rep.c = (p * q - r * s) * eighth;
  rep.d = (Rat(3) * p * r + q * s) * eighth;
  const Rat &a = rep.a, &b = rep.b, &c = rep.c, &d = rep.d;
  const Rat det = a * d - b * c;
  if (det.is_zero()) throw std::invalid_argument("case1_identities: ad - bc = 0");

  const Rat quadric = Rat(3) * a * a - Rat(10) * a * d + Rat(3) * d * d + b * b + Rat(10) * b * c + Rat(9) * c * c;
  auto [A, B, C] = case1_quadratic(a, b, c, d);
  rep.quadric_zero = quadric.is_zero() && B * B - Rat(4) * A * C == Rat(12) * det * quadric;
  rep.segre = b + Rat(9) * c == p * q && b + c == r * s && Rat(3) * d - a == p * r && Rat(3) * a - d == q * s;

  const RatPoly cubic = poly_from_ints({0, -9, 0, 1});  // x^3 - 9x
  const RatPoly quad = poly_from_ints({1, 0, -1});       // 1 - x^2
  const RatPoly L1 = linear(b, a), L2 = linear(d, c);
  const RatPoly P = cubic * L1 - Rat(9) * quad * L2;
  const RatPoly Q = -(cubic * L2) - Rat(3) * quad * L1;
  const RatPoly x2p3 = poly_from_ints({3, 0, 1});
  rep.derivative_identity = derivative(P) * Q - P * derivative(Q) == x2p3 * x2p3 * RatPoly({C, B, A});

  const RatPoly Rt = linear(Rat(9) * p * r * r * r - Rat(9) * p * q * q * r + Rat(27) * q * r * r * s - Rat(3) * q * q * q * s,
                            Rat(9) * p * q * r * r - p * q * q * q - Rat(9) * r * r * r * s + Rat(9) * q * q * r * s);
  const Rat ps = p * p + Rat(3) * s * s;
  const RatPoly expected = Rat(Int(-27), Int(64)) * ps * ps * x2p3 * x2p3 * Rt * Rt;
  rep.discriminant_identity = discriminant_in_t(line_poly(P, Q)) == expected;
  return rep;
}

Rat q_form(const Rat& x, const Rat& y) { return Rat(3) * x * x - Rat(2) * x * y + Rat(3) * y * y; }

QuadElem q_form(const QuadElem& x, const QuadElem& y) {
  return QuadElem(3) * x * x - QuadElem(2) * x * y + QuadElem(3) * y * y;
}

Case2Report case2_identities(const Rat& u, const Rat& c) {
  if (u == c) throw std::invalid_argument("case2_identities: u = c");
  Case2Report rep;
  rep.d = q_form(u, c);
  const Rat& d = rep.d;
  if (d.is_zero()) throw std::invalid_argument("case2_identities: q(u, c) = 0");
  const Rat a = u / d, b(1);
  rep.residue_zero = (Rat(3) * d * d * a * a - Rat(2) * d * a * c - d * b * b + Rat(3) * c * c).is_zero();
  rep.form_decomposition = d == (u + c) * (u + c) + Rat(2) * (u - c) * (u - c);

  const RatPoly N({(u - c) * d * d, Rat(-2) * c * c * d, Rat(-2) * u * d, Rat(-2) * u * u});
  const RatPoly base({-d, Rat(0), Rat(1)});
  const RatPoly D = base * base;
  const RatPoly numer({c, Rat(1), a});
  rep.antiderivative =
      derivative(N) * base - Rat(4) * RatPoly::x() * N == Rat(2) * d * d * numer * numer;

  const RatPoly R({Rat(3) * u * u * u * u - Rat(2) * c * u * u * u,
                   Rat(-15) * u * u * u + Rat(19) * c * u * u - Rat(21) * c * c * u + Rat(9) * c * c * c,
                   Rat(12) * u * u - Rat(8) * c * u + Rat(12) * c * c});
  const Rat uc = u - c;
  rep.discriminant_identity =
      discriminant_in_t(line_poly(N, D)) == Rat(-16) * d * d * d * uc * uc * uc * uc * R * R;
  return rep;
}

NoFixedReport nofixed_resolvent(const Rat& a, const Rat& b) {
  if (a.is_zero() || (a + b).is_zero()) throw std::invalid_argument("nofixed_resolvent: degenerate (a, b)");
  const RatPoly num({b, Rat(-2) * b, -a});
  const RatPoly den({-b, Rat(-2) * a, a});
  if (gcd(num, den).degree() > 0) throw std::invalid_argument("nofixed_resolvent: numerator and denominator share a factor");
  NoFixedReport rep;
  rep.quartic = line_poly(num * num, num * num - den * den);
  const Rat inv_a2 = Rat(1) / (a * a);
  Poly<RatPoly> monic = rep.quartic * RatPoly({inv_a2});
  rep.resolvent = cubic_resolvent_in_t(monic);
  auto xlin = [](const RatPoly& c0, const Rat& c1) { return Poly<RatPoly>({c0, RatPoly({c1})}); };
  rep.expected_product = xlin(RatPoly({Rat(2) * b}), a) * xlin(RatPoly({Rat(2) * b, Rat(-4) * (a + b)}), a) *
                         xlin(RatPoly({Rat(-2) * a * b - Rat(4) * b * b, Rat(4) * b * (a + b)}), a * a);
  rep.matches = rep.resolvent * RatPoly({a * a * a * a}) == rep.expected_product;
  return rep;
}

// ---------------------------------------------------------------------------
// Strong lines

StrongLine strong_line(const StrongParams& params) {
  const long long m = params.m;
  if (m == 0 || m == 1 || !is_squarefree(m)) throw std::invalid_argument("strong_line: m must be square-free and not 0 or 1");
  const QuadElem u = params.u.with_field(m), c = params.c.with_field(m);
  const QuadElem q = q_form(u, c);
  if (!(q == QuadElem(-1))) throw std::invalid_argument("strong_line: q(u, c) != -1");
  if (u == c) throw std::invalid_argument("strong_line: u = c");
  StrongLine line;
  line.params = {m, u, c};
  const QuadPoly base({-q, QuadElem(0), QuadElem(1)});
  line.P = base * base;
  line.Q = QuadPoly({(u - c) * q * q, QuadElem(-2) * c * c * q, QuadElem(-2) * u * q, QuadElem(-2) * u * u});
  line.branch_quadratic =
      QuadPoly({QuadElem(3) * u * u * u * u - QuadElem(2) * c * u * u * u,
                QuadElem(-15) * u * u * u + QuadElem(19) * c * u * u - QuadElem(21) * c * c * u + QuadElem(9) * c * c * c,
                QuadElem(12) * u * u - QuadElem(8) * c * u + QuadElem(12) * c * c});
  const QuadElem uc = u - c;
  const QuadElem uc4 = uc * uc * uc * uc;
  const QuadPoly reversed = discriminant_in_t(line_poly(line.Q, line.P));
  if (reversed != QuadElem(-16) * q * q * q * uc4 * line.branch_quadratic * line.branch_quadratic) {
    throw InternalInconsistency("strong_line: discriminant of Q - TP differs from the closed form");
  }
  line.disc = discriminant_in_t(line_poly(line.P, line.Q));
  auto root = poly_sqrt(line.disc, m);
  if (!root) throw InternalInconsistency("strong_line: discriminant is not a square");
  line.sqrt_disc = *root;
  return line;
}

}  // namespace altlines
