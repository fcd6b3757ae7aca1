#pragma once

// Exact rational scalars on top of GMP, plus the handful of integer helpers
// (square roots, square-free parts, primality) the rest of the library needs.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace altlines {

using Int = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "num/den" or "num" (optional leading sign, decimal digits only).
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat inverse() const;
  Rat abs() const { return Rat(::abs(v_)); }
  Rat pow(long e) const;

  /// Canonical text: "num/den", den omitted when 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

/// Nonnegative rational square root, when one exists.
std::optional<Rat> rat_sqrt(const Rat& x);

/// Floor square root of a nonnegative integer.
Int isqrt(const Int& n);
bool is_square(const Int& n);

/// The square-free integer s with x = s * (rational square); x != 0.
Int squarefree_part(const Rat& x);

bool is_squarefree(long long m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);  // smallest prime > n

/// Integer power of a machine integer, returned as a big integer.
Int ipow(long base, unsigned long e);

}  // namespace altlines
