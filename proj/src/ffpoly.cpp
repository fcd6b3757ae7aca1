#include "altlines/ffpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace altlines {

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

namespace {
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
}  // namespace

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("FpPoly: modulus must be at least 2");
  for (auto& v : c_) v %= p_;
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)), p_);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)), p_);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_, {});
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(c_[i], o.c_[j], p_), p_);
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(u64 s) const {
  std::vector<u64> r = c_;
  for (auto& v : r) v = mulmod(v, s % p_, p_);
  return FpPoly(p_, std::move(r));
}

std::string FpPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "] mod " << p_;
  return os.str();
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p();
  if (b.is_zero()) throw std::domain_error("FpPoly division by zero");
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<u64> r = a.coeffs();
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const u64 inv = invmod(b.lead(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    u64 f = mulmod(r[i], inv, p);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = submod(r[i - db + j], mulmod(f, b.coeff(j), p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly derivative(const FpPoly& f) {
  std::vector<u64> r;
  for (int i = 1; i <= f.degree(); ++i) r.push_back(mulmod(f.coeff(i), static_cast<u64>(i) % f.p(), f.p()));
  return FpPoly(f.p(), std::move(r));
}

FpPoly monic(const FpPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(invmod(f.lead(), f.p()));
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& modulus) {
  FpPoly r = FpPoly::constant(base.p(), 1) % modulus;
  FpPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % modulus;
  }
  return r;
}

std::string to_string(const FactorPattern& pattern) {
  std::string s = "{";
  for (std::size_t i = 0; i < pattern.size(); ++i) s += (i ? "," : "") + std::to_string(pattern[i]);
  return s + "}";
}

bool is_separable(const FpPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, derivative(f)).degree() == 0;
}

std::optional<FpPoly> reduce_mod_p(const RatPoly& f, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  if (f.is_zero()) return std::nullopt;
  const Int pz(std::to_string(p));
  std::vector<u64> c;
  for (const auto& v : f.coeffs()) {
    Int num = v.num(), den = v.den();
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) return std::nullopt;
    Int r;
    mpz_invert(r.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    r = r * num;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
    c.push_back(static_cast<u64>(std::stoull(r.get_str())));
  }
  if (c.back() == 0) return std::nullopt;
  FpPoly red = monic(FpPoly(p, std::move(c)));
  if (!is_separable(red)) return std::nullopt;
  return red;
}

namespace {

struct DegreeBlock {
  FpPoly poly;  // product of all irreducible factors of degree d
  int d;
};

std::vector<DegreeBlock> distinct_degree(FpPoly f) {
  const u64 p = f.p();
  std::vector<DegreeBlock> out;
  const FpPoly x = FpPoly::x(p);
  const Int pz(std::to_string(p));
  FpPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, pz, f);
    FpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({monic(f), f.degree()});
  return out;
}

FpPoly random_poly(u64 p, int degree_below, std::mt19937_64& rng) {
  std::vector<u64> c(static_cast<std::size_t>(degree_below));
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (auto& v : c) v = dist(rng);
  return FpPoly(p, std::move(c));
}

// Splits g, a product of distinct monic irreducibles of degree d.
void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const u64 p = g.p();
  for (;;) {
    FpPoly a = random_poly(p, g.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly b(p, {});
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(kd-1)) lands in F_2 on each factor.
      FpPoly t = a % g;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      Int e;
      Int pz(std::to_string(p));
      mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, g) - FpPoly::constant(p, 1);
    }
    FpPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

void require_monic_separable(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("factorization of a constant polynomial");
  if (f.lead() != 1) throw std::invalid_argument("factorization needs a monic polynomial");
  if (!is_separable(f)) throw std::invalid_argument("factorization needs a separable polynomial");
}

}  // namespace

std::vector<FpPoly> factor(const FpPoly& f, u64 seed) {
  require_monic_separable(f);
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> out;
  for (const auto& block : distinct_degree(f)) equal_degree(block.poly, block.d, rng, out);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

FactorPattern factor_pattern(const FpPoly& f) {
  require_monic_separable(f);
  FactorPattern pattern;
  for (const auto& block : distinct_degree(f)) {
    for (int i = 0; i < block.poly.degree() / block.d; ++i) pattern.push_back(block.d);
  }
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

bool is_irreducible_mod_p(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("irreducibility of a constant polynomial");
  FpPoly g = monic(f);
  if (!is_separable(g)) return false;
  return factor_pattern(g).size() == 1;
}

std::vector<u64> roots_mod_p(const FpPoly& f, u64 seed) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const u64 p = f.p();
  if (f.degree() < 1) return {};
  FpPoly g = monic(f);
  const Int pz(std::to_string(p));
  FpPoly xp = powmod(FpPoly::x(p), pz, g);
  FpPoly lin = gcd(g, xp - FpPoly::x(p));
  std::vector<u64> roots;
  if (lin.degree() < 1) return roots;
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> parts;
  equal_degree(lin, 1, rng, parts);
  for (const auto& q : parts) roots.push_back((p - q.coeff(0)) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace altlines
