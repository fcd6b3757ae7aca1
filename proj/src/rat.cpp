#include "altlines/rat.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace altlines {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!valid_integer_text(s)) throw std::invalid_argument("malformed integer: " + std::string(s));
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  return Rat(parse_int(text.substr(0, slash)), den);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x.sign() < 0) return std::nullopt;
  Int n = x.num(), d = x.den();
  if (!is_square(n) || !is_square(d)) return std::nullopt;
  return Rat(isqrt(n), isqrt(d));
}

namespace {

// Strips square factors from |n| by trial division followed by a perfect-power
// check on the cofactor; adequate for the modest integers this library meets.
Int squarefree_of_int(Int n) {
  if (n == 0) throw std::domain_error("squarefree_part of zero");
  int sign = n < 0 ? -1 : 1;
  n = ::abs(n);
  Int out = 1;
  for (unsigned long p = 2; p < 100000; p += (p == 2 ? 1 : 2)) {
    Int pp = Int(p) * p;
    if (pp > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  // Remaining cofactor has no prime factor below the trial bound. If it is a
  // perfect square it contributes nothing; otherwise it is treated as
  // square-free (a square factor would need a prime >= 10^5 twice).
  if (!is_square(n)) out *= n;
  return sign * out;
}

}  // namespace

Int squarefree_part(const Rat& x) {
  if (x.is_zero()) throw std::domain_error("squarefree_part of zero");
  // x = n/d ~ n*d modulo squares.
  return squarefree_of_int(x.num() * x.den());
}

bool is_squarefree(long long m) {
  if (m == 0) return false;
  unsigned long long a = m < 0 ? static_cast<unsigned long long>(-(m + 1)) + 1 : static_cast<unsigned long long>(m);
  for (unsigned long long p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
  }
  return true;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime_u64(u64 n) {
  u64 c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

Int ipow(long base, unsigned long e) {
  Int r;
  Int b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace altlines
