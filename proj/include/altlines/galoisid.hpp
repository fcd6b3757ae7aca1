#pragma once

// Galois-group evidence: Dedekind cycle-type sampling, the one-sided A_n
// certificate (l-cycle + 3-cycle + irreducibility + square discriminant),
// rational and quadratic-field roots, and quartic classification through the
// cubic resolvent.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altlines/ffpoly.hpp"
#include "altlines/poly.hpp"

namespace altlines {

enum class Verdict { ContainsAn, EqualsAn, Inconclusive };
enum class QuarticGroup { S4, A4, V4, C4_or_D4, Reducible };

std::string to_string(Verdict v);
std::string to_string(QuarticGroup g);

/// Primes certifying Gal(f) contains A_n: f mod p has pattern {l,1,...},
/// f mod q has {3,1,...}, f mod r is irreducible.
/// Primes whose Frobenius patterns prove A_n <= G: p yields an ell-cycle, q a
/// 3-cycle, and the patterns at r together leave no degree for a rational
/// factor. For odd n, r is a single prime with f irreducible mod r; for even n
/// an n-cycle is odd, so r holds several primes.
struct AnWitness {
  u64 ell = 0, p = 0, q = 0;
  std::vector<u64> r;
  /// p * q * prod(r), with multiplicity.
  Int modulus() const;
  friend bool operator==(const AnWitness&, const AnWitness&) = default;
};

/// Some power of a permutation with this cycle type is a single len-cycle:
/// exactly one part equals len and no other part is divisible by len.
bool pattern_powers_to_cycle(const FactorPattern& pat, int len);

/// Degrees in [1, n-1] that a factor compatible with the pattern could have.
std::vector<bool> factor_degrees(const FactorPattern& pat);

struct GroupEvidence {
  RatPoly poly;
  Rat disc;
  bool disc_square = false;
  std::map<u64, FactorPattern> patterns;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<AnWitness> witness;
};

/// Factorization pattern of f mod p when p is a prime of good reduction.
/// f must be monic with integer coefficients.
std::optional<FactorPattern> cycle_type_sample(const RatPoly& f, u64 p);

/// Smallest witness primes p > n up to prime_bound; l is the largest
/// admissible prime in (n/2, n] for which a witness exists.
std::optional<AnWitness> certify_contains_An(const RatPoly& f, u64 prime_bound);

/// EqualsAn exactly when the A_n certificate succeeds and the discriminant is a
/// rational square; Inconclusive otherwise.
GroupEvidence certify_equals_An(const RatPoly& f, u64 prime_bound);

/// Like certify_equals_An, but reports ContainsAn when only the containment
/// certificate succeeds.
GroupEvidence identify_group(const RatPoly& f, u64 prime_bound);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const RatPoly& f);

/// A root of h in Q(sqrt m), if one exists.
std::optional<QuadElem> has_root_in_quad(const QuadPoly& h, long long m);
/// Distinct roots of h in Q(sqrt m).
std::vector<QuadElem> roots_in_quad(const QuadPoly& h, long long m);

// ---------------------------------------------------------------------------
// Quartics

/// For f = X^4 - c1 X^3 + c2 X^2 - c3 X + c4:
/// X^3 - c2 X^2 + (c1 c3 - 4 c4) X - c3^2 - c1^2 c4 + 4 c2 c4.
template <class F>
Poly<F> cubic_resolvent(const Poly<F>& f) {
  if (f.degree() != 4 || !(f.lead() == F(1))) throw std::invalid_argument("cubic_resolvent needs a monic quartic");
  const F c1 = -f.coeff(3), c2 = f.coeff(2), c3 = -f.coeff(1), c4 = f.coeff(0);
  const F four(4);
  return Poly<F>({-(c3 * c3) - c1 * c1 * c4 + four * c2 * c4, c1 * c3 - four * c4, -c2, F(1)});
}

QuarticGroup quartic_group_over_Q(const RatPoly& f);
QuarticGroup quartic_group_over_quad(const QuadPoly& f, long long m);

/// Whether a monic quartic has a root or a quadratic factor over Q.
bool quartic_reducible_over_Q(const RatPoly& f);

}  // namespace altlines
