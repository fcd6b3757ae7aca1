#pragma once

#include "altlines/galoisid.hpp"
#include "altlines/poly.hpp"

namespace altlines {

/// A sub-line P - (t0 + scale*N) Q whose members are all certified A_n through
/// the witness primes (which divide scale) and a square discriminant.
struct LineRecipe {
  RatPoly P, Q;
  Rat base_t;
  AnWitness primes;
  Int scale;

  Rat parameter(const Int& N) const { return base_t + Rat(Int(scale * N)); }
  RatPoly member(const Int& N) const { return P - parameter(N) * Q; }
};

}  // namespace altlines
