#pragma once

// Which quadratic fields Q(sqrt m) carry strong alternating quartic lines:
// m < 0 and m != 1 mod 8. Decided directly, by local isotropy of
// <1, 2, 1, 2m> at every place, and constructively by solving
// 3u^2 - 2uc + 3c^2 = -1 over Q(sqrt m).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altlines/quad.hpp"
#include "altlines/rat.hpp"

namespace altlines {

/// Diagonal form <a_1, ..., a_r> with nonzero entries.
struct DiagForm {
  std::vector<Rat> coeffs;
};

/// <1, 2, 1, 2m>.
DiagForm q1_form(long long m);

/// The real place or a prime.
struct Place {
  std::uint64_t p = 0;
  static Place real() { return {}; }
  static Place prime(std::uint64_t p) { return {p}; }
  bool is_real() const { return p == 0; }
};

bool decide_strong_field(long long m);

bool isotropic_local(const DiagForm& form, const Place& place);

/// Conjunction of isotropic_local for q1(m) over R, Q_2 and Q_p for the odd p | m.
bool decide_via_local_global(long long m);

struct MinusOneRepresentation {
  QuadElem u, c;
  /// Integer zero of <1, 2, 1, 2m>, when the chain produced the answer.
  std::optional<std::array<Int, 4>> q1_zero;
  /// "chain", "chord" or "search".
  std::string route;
};

/// (u, c) in Q(sqrt m) with 3u^2 - 2uc + 3c^2 = -1 and u != c.
std::optional<MinusOneRepresentation> represent_minus_one(long long m);

}  // namespace altlines
