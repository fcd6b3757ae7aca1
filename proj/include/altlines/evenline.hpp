#pragma once

// Even-degree families: the degree-n cover with ramification (n-1, n-1, 3)
// over three points, the explicit family X^n - n X^(n-1) - T(-nX + (n-2)^2),
// its closed-form discriminant, and A_n lines over Q when n - 1 is a square.

#include <optional>
#include <vector>

#include "altlines/errors.hpp"
#include "altlines/line.hpp"

namespace altlines {

struct CoverCoeffs {
  Rat a, b, c, d;
};

/// (n-2, -n, -n, n-2): the cover x^(n-1)(ax+b) / (cx+d) sending 0, inf, 1 to
/// themselves with multiplicities n-1, n-1, 3.
CoverCoeffs canonical_cover_coeffs(int n);

struct EvenFamily {
  int n = 0;
  RatPoly P, Q;
  /// (-1)^(n/2+1) (n-1)^(n-1) n^n T^(n-2) (T - (n-2)^(n-2))^2.
  RatPoly disc_closed_form;
  Int base_field_a;
};

/// Builds the family and checks, exactly, the discriminant closed form,
/// Res(P, Q) = -4(n-1)(n-2)^(2n-2) and P'Q - PQ' = -n(n-1) X^(n-2) (X-(n-2))^2.
EvenFamily even_family(int n);

/// Square-free part of (-1)^(n/2+1) (n-1)^(n-1) n^n.
Int base_field_even(int n);

/// A point of P^1(Q); empty value is infinity.
struct P1Point {
  std::optional<Rat> value;
  static P1Point infinity() { return {}; }
  static P1Point at(Rat v) { return {std::move(v)}; }
  bool is_infinity() const { return !value.has_value(); }
  friend bool operator==(const P1Point&, const P1Point&) = default;
};

/// Source points (p, q, r) and their images (p', q', r').
struct RamTriple {
  P1Point p, q, r, p_img, q_img, r_img;
};

/// A degree-n map X -> N(X) / D(X), i.e. the line N - T D.
struct Cover {
  int n = 0;
  RatPoly N, D;
};

/// The canonical cover conjugated by the Mobius maps taking (0, inf, 1) to
/// the source and target triples.
Cover transported_cover(int n, const RamTriple& triple);

/// Exact multiplicity of the source point x in the fiber over y.
int fiber_multiplicity(const Cover& f, const P1Point& x, const P1Point& y);

/// Multiplicities (n-1, n-1, 3) at the three prescribed points.
bool check_ramification(const Cover& f, const RamTriple& triple);

struct EvenLine {
  LineRecipe recipe;
  EvenFamily family;
  RatPoly sqrt_disc;
  GroupEvidence base_evidence;
  /// Specializations tried before t0: degenerate or not certified.
  std::vector<Rat> skipped;
};

/// Even-degree A_n line for n with n - 1 a perfect square.
EvenLine build_line_even(int n, u64 prime_bound, int t_budget = 60);

}  // namespace altlines
