#pragma once

// Dense univariate polynomials over an exact coefficient domain.
//
// Poly<F> needs F to be default-constructible to zero, constructible from
// long, and closed under + - *. Division-based algorithms (divmod, gcd,
// resultants by elimination, interpolation) additionally need F to be a field.
// Coefficient i is the coefficient of X^i; the vector never ends in a zero.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altlines/quad.hpp"
#include "altlines/rat.hpp"

namespace altlines {

template <class F>
class Poly {
 public:
  using coeff_type = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { normalize(); }
  explicit Poly(const F& constant) : c_{constant} { normalize(); }

  static Poly monomial(const F& coeff, int degree) {
    std::vector<F> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F{}; }
  const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const F& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend Poly operator*(Poly a, const F& s) { return a *= s; }
  friend Poly operator*(const F& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation at a point of any ring containing F.
  template <class V>
  V eval(const V& x) const {
    V acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }
  F operator()(const F& x) const { return eval<F>(x); }

  /// Applies f to every coefficient.
  template <class G, class Fn>
  Poly<G> map(Fn&& f) const {
    std::vector<G> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return Poly<G>(std::move(out));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

using RatPoly = Poly<Rat>;
/// Polynomial in X with coefficients in Q[T].
using TPoly = Poly<RatPoly>;
using QuadPoly = Poly<QuadElem>;
/// Polynomial in X with coefficients in K[T], K = Q(sqrt m).
using QuadTPoly = Poly<QuadPoly>;

// ---------------------------------------------------------------------------
// Ring-generic helpers

template <class F>
Poly<F> derivative(const Poly<F>& p) {
  std::vector<F> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * F(static_cast<long>(i)));
  return Poly<F>(std::move(out));
}

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned e) {
  Poly<F> r(F(1));
  Poly<F> b = p;
  while (e) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return r;
}

/// p(q(X)).
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
  Poly<F> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<F>(p.coeff(i));
  return acc;
}

/// Coefficientwise x -> a + b*x type substitution helper: p(X + s).
template <class F>
Poly<F> shift(const Poly<F>& p, const F& s) {
  return compose(p, Poly<F>({s, F(1)}));
}

// ---------------------------------------------------------------------------
// Field algorithms

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const F inv = F(1) / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    F f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return p * (F(1) / p.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Multiplicity of the root x0 in p (p nonzero).
template <class F>
int root_multiplicity(Poly<F> p, const F& x0) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of zero polynomial");
  Poly<F> lin({-x0, F(1)});
  int k = 0;
  for (;;) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return k;
    p = std::move(q);
    ++k;
  }
}

/// Determinant by Gaussian elimination over a field.
template <class F>
F determinant(std::vector<std::vector<F>> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return F{};
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const F inv = F(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      F f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Sylvester matrix of f (degree m) and g (degree n), size (m+n).
template <class F>
std::vector<std::vector<F>> sylvester_matrix(const Poly<F>& f, const Poly<F>& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<F>> s(static_cast<std::size_t>(size), std::vector<F>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s[r][r + j] = f.coeff(m - j);
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = g.coeff(n - j);
  }
  return s;
}

template <class F>
F pow_scalar(F b, int e) {
  F r(1);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

template <class F>
void require_resultant_inputs(const Poly<F>& f, const Poly<F>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
}

/// Res(f, g) as the Sylvester determinant over a field.
template <class F>
F resultant(const Poly<F>& f, const Poly<F>& g) {
  require_resultant_inputs(f, g);
  if (f.degree() == 0 && g.degree() == 0) return F(1);
  if (f.degree() == 0) return pow_scalar(f.lead(), g.degree());
  if (g.degree() == 0) return pow_scalar(g.lead(), f.degree());
  return determinant(sylvester_matrix(f, g));
}

/// Rational resultant through fraction-free (Bareiss) elimination on the
/// denominator-cleared integer Sylvester matrix.
template <>
Rat resultant<Rat>(const RatPoly& f, const RatPoly& g);

/// Delta(f) = (-1)^(n(n-1)/2) / lc(f) * Res(f, f').
template <class F>
F discriminant(const Poly<F>& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  const int n = f.degree();
  F r = resultant(f, derivative(f)) / f.lead();
  return ((n * (n - 1) / 2) % 2 == 0) ? r : -r;
}

/// Newton interpolation through (xs[i], ys[i]).
template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<F> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  Poly<F> acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * Poly<F>({-xs[k], F(1)}) + Poly<F>(dd[k]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Polynomials with coefficients in F[T]

/// Maps X-polynomial with F[T]-coefficients to F[X] by T -> t.
template <class F>
Poly<F> specialize(const Poly<Poly<F>>& p, const F& t) {
  return p.template map<F>([&](const Poly<F>& c) { return c(t); });
}

template <class F>
int t_degree(const Poly<Poly<F>>& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

/// P(X) - T*Q(X) as a polynomial in X over F[T].
template <class F>
Poly<Poly<F>> line_poly(const Poly<F>& P, const Poly<F>& Q) {
  const int n = std::max(P.degree(), Q.degree());
  std::vector<Poly<F>> c;
  for (int i = 0; i <= n; ++i) c.push_back(Poly<F>({P.coeff(i), -Q.coeff(i)}));
  return Poly<Poly<F>>(std::move(c));
}

/// Lifts a constant-in-T polynomial.
template <class F>
Poly<Poly<F>> constant_in_t(const Poly<F>& p) {
  return p.template map<Poly<F>>([](const F& c) { return Poly<F>(c); });
}

namespace detail {

/// Sample points 0, 1, -1, 2, -2, ... at which every `guards` polynomial is
/// nonzero; collects `count` of them.
template <class F>
std::vector<F> good_points(const std::vector<Poly<F>>& guards, std::size_t count) {
  std::vector<F> pts;
  for (long k = 0; pts.size() < count; ++k) {
    long v = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    F t(v);
    bool ok = true;
    for (const auto& g : guards) {
      if (g(t).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) pts.push_back(t);
  }
  return pts;
}

}  // namespace detail

/// Res_X(f, g) in F[T], by evaluation at deg-bound+1 points and interpolation.
template <class F>
Poly<F> resultant_in_t(const Poly<Poly<F>>& f, const Poly<Poly<F>>& g) {
  require_resultant_inputs(f, g);
  const int m = f.degree(), n = g.degree();
  const int bound = std::max(0, n * std::max(0, t_degree(f)) + m * std::max(0, t_degree(g)));
  auto pts = detail::good_points<F>({f.lead(), g.lead()}, static_cast<std::size_t>(bound) + 1);
  std::vector<F> vals;
  for (const auto& t : pts) vals.push_back(resultant(specialize(f, t), specialize(g, t)));
  return interpolate(pts, vals);
}

/// Delta_X(f) in F[T], by evaluation and interpolation.
template <class F>
Poly<F> discriminant_in_t(const Poly<Poly<F>>& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  const int bound = (2 * f.degree() - 2) * std::max(0, t_degree(f));
  auto pts = detail::good_points<F>({f.lead()}, static_cast<std::size_t>(bound) + 1);
  std::vector<F> vals;
  for (const auto& t : pts) vals.push_back(discriminant(specialize(f, t)));
  return interpolate(pts, vals);
}

// ---------------------------------------------------------------------------
// Square roots

/// Exact square root of f by coefficient matching from the top. `sqrt_lead`
/// supplies a square root of the leading coefficient (or nothing). The root
/// returned has the leading coefficient `sqrt_lead` produced.
template <class F, class SqrtFn>
std::optional<Poly<F>> poly_sqrt_with(const Poly<F>& f, SqrtFn&& sqrt_lead) {
  if (f.is_zero()) return Poly<F>();
  if (f.degree() % 2 != 0) return std::nullopt;
  std::optional<F> lc = sqrt_lead(f.lead());
  if (!lc) return std::nullopt;
  const int n = f.degree(), k = n / 2;
  std::vector<F> g(static_cast<std::size_t>(k) + 1);
  g[k] = *lc;
  const F two_lc = F(2) * *lc;
  // Coefficient of X^(n-i) in g^2 is sum_{j} g[k-j] g[k-(i-j)].
  for (int i = 1; i <= k; ++i) {
    F acc = f.coeff(n - i);
    for (int j = 1; j < i; ++j) acc -= g[k - j] * g[k - (i - j)];
    g[k - i] = acc / two_lc;
  }
  Poly<F> root(std::move(g));
  if (root * root != f) return std::nullopt;
  return root;
}

/// Square root in Q[X] with positive leading coefficient.
std::optional<RatPoly> poly_sqrt(const RatPoly& f);

/// Square root in K[X], K = Q(sqrt m).
std::optional<QuadPoly> poly_sqrt(const QuadPoly& f, long long m);

// ---------------------------------------------------------------------------
// Rational-polynomial conveniences

/// Polynomial with small integer coefficients, low degree first.
RatPoly poly_from_ints(std::initializer_list<long> coeffs);

/// Least common multiple of the coefficient denominators.
Int denominator_lcm(const RatPoly& p);
/// gcd of the numerators of an integer polynomial (after clearing denominators).
Int content(const RatPoly& p);
/// Scales p to a primitive integer polynomial with positive leading coefficient.
RatPoly primitive_part(const RatPoly& p);
bool has_integer_coeffs(const RatPoly& p);
bool is_monic(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Human-readable "X^5+4*X^4-..." form.
std::string to_string(const RatPoly& p, const std::string& var = "X");
std::string to_string(const QuadPoly& p, const std::string& var = "X");

/// Common field parameter of a quadratic polynomial's coefficients (0 if all
/// coefficients are rational).
long long field_of(const QuadPoly& p);
QuadPoly to_quad(const RatPoly& p, long long m);

}  // namespace altlines
