#include "altlines/poly.hpp"

#include <sstream>

namespace altlines {

namespace {

// Fraction-free determinant (Bareiss). Every intermediate division is exact.
Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Int> integer_coeffs(const RatPoly& p, const Int& scale) {
  std::vector<Int> out;
  for (const auto& c : p.coeffs()) {
    Rat v = c * Rat(scale);
    out.push_back(v.num());
  }
  return out;
}

}  // namespace

template <>
Rat resultant<Rat>(const RatPoly& f, const RatPoly& g) {
  require_resultant_inputs(f, g);
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return Rat(1);
  if (m == 0) return f.lead().pow(n);
  if (n == 0) return g.lead().pow(m);
  Int df = denominator_lcm(f), dg = denominator_lcm(g);
  auto fi = integer_coeffs(f, df);
  auto gi = integer_coeffs(g, dg);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) s[r][r + j] = fi[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = gi[n - j];
  }
  Int det = bareiss_determinant(std::move(s));
  // Res(df f, dg g) = df^n dg^m Res(f, g).
  Int scale;
  Int a, b;
  mpz_pow_ui(a.get_mpz_t(), df.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(b.get_mpz_t(), dg.get_mpz_t(), static_cast<unsigned long>(m));
  scale = a * b;
  return Rat(det, scale);
}

std::optional<RatPoly> poly_sqrt(const RatPoly& f) {
  return poly_sqrt_with(f, [](const Rat& c) { return rat_sqrt(c); });
}

std::optional<QuadPoly> poly_sqrt(const QuadPoly& f, long long m) {
  return poly_sqrt_with(f, [m](const QuadElem& c) { return quad_sqrt(c, m); });
}

RatPoly poly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

Int denominator_lcm(const RatPoly& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) {
    Int d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

Int content(const RatPoly& p) {
  Int g = 0;
  Int l = denominator_lcm(p);
  for (const auto& c : p.coeffs()) {
    Int v = (c * Rat(l)).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return p;
  Int l = denominator_lcm(p);
  RatPoly q = p * Rat(l);
  Int g = content(q);
  q = q * Rat(Int(1), g);
  if (q.lead().sign() < 0) q = -q;
  return q;
}

bool has_integer_coeffs(const RatPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_integer()) return false;
  }
  return true;
}

bool is_monic(const RatPoly& p) { return !p.is_zero() && p.lead() == Rat(1); }

bool is_squarefree(const RatPoly& p) {
  if (p.degree() < 1) return !p.is_zero();
  return gcd(p, derivative(p)).degree() == 0;
}

namespace {

template <class F>
std::string render(const Poly<F>& p, const std::string& var, bool wrap_coeffs) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const F& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negative = !wrap_coeffs && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (wrap_coeffs) cs = "(" + cs + ")";
    if (!first) os << (negative ? "-" : "+");
    else if (negative) os << "-";
    first = false;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RatPoly& p, const std::string& var) { return render(p, var, false); }
std::string to_string(const QuadPoly& p, const std::string& var) { return render(p, var, true); }

long long field_of(const QuadPoly& p) {
  long long m = 0;
  for (const auto& c : p.coeffs()) {
    if (c.m() == 0) continue;
    if (m != 0 && c.m() != m) throw std::invalid_argument("QuadPoly: coefficients from different fields");
    m = c.m();
  }
  return m;
}

QuadPoly to_quad(const RatPoly& p, long long m) {
  return p.map<QuadElem>([m](const Rat& c) { return QuadElem(m, c, Rat(0)); });
}

}  // namespace altlines
