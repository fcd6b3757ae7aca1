#pragma once

// Polynomials over a prime field F_p (p < 2^63) and the degree patterns of
// their factorizations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altlines/poly.hpp"

namespace altlines {

using u64 = std::uint64_t;

class FpPoly {
 public:
  FpPoly(u64 p, std::vector<u64> coeffs);
  static FpPoly constant(u64 p, u64 c) { return FpPoly(p, {c}); }
  static FpPoly x(u64 p) { return FpPoly(p, {0, 1}); }

  u64 p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
  u64 lead() const { return c_.back(); }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(u64 s) const;
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  std::string str() const;

 private:
  void normalize();
  u64 p_;
  std::vector<u64> c_;
};

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly derivative(const FpPoly& f);
/// Monic gcd.
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly monic(const FpPoly& f);
/// base^e mod modulus, with e given as a big integer.
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& modulus);

/// Degrees of the irreducible factors, sorted in decreasing order.
using FactorPattern = std::vector<int>;
std::string to_string(const FactorPattern& pattern);

/// Reduction of f modulo p, made monic. Empty when p divides a denominator or
/// the leading coefficient, or when the reduction is not separable.
/// Throws std::invalid_argument if p is not prime.
std::optional<FpPoly> reduce_mod_p(const RatPoly& f, u64 p);

bool is_separable(const FpPoly& f);

/// Monic irreducible factors of a monic separable polynomial, sorted by degree
/// then coefficients. Equal-degree splitting is driven by a seeded generator.
std::vector<FpPoly> factor(const FpPoly& f, u64 seed = 0x5eed);

FactorPattern factor_pattern(const FpPoly& f);
bool is_irreducible_mod_p(const FpPoly& f);

/// Distinct roots in F_p, ascending.
std::vector<u64> roots_mod_p(const FpPoly& f, u64 seed = 0x5eed);

}  // namespace altlines
