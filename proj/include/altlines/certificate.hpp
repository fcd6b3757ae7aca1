#pragma once

// Certificate files: a line plus the evidence behind its group, in a JSON
// layout that verify_certificate re-checks item by item.

#include <string>
#include <vector>

#include "altlines/codec.hpp"
#include "altlines/evenline.hpp"
#include "altlines/mestre.hpp"
#include "altlines/quadform.hpp"
#include "altlines/quarticline.hpp"

namespace altlines {

inline constexpr int kCertificateSchema = 1;

struct CertOptions {
  u64 rng_seed = 1;
  u64 prime_bound = 10000;
  /// Members N in [-members, members] whose A_n certificates are recorded.
  int members = 3;
};

Json odd_certificate(const OddLine& line, const CertOptions& opt);
Json even_certificate(const EvenLine& line, const CertOptions& opt);
/// Specializations t in [-t_range, t_range]; degenerate ones are listed as skipped.
Json weak_quartic_certificate(const WeakLine& line, const CertOptions& opt, int t_range = 10);
/// Specializations t in [1, t_count].
Json strong_quartic_certificate(const StrongLine& line, const MinusOneRepresentation& rep, const CertOptions& opt,
                                int t_count = 8);

/// Runs the monodromy suite: the quartic trichotomy, the degree-five
/// cross-check and the Jordan checks for n = 4, 6, 8.
Json monodromy_report();

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Recomputes every evidence item. Malformed input yields a failed "format" check.
std::vector<Check> verify_certificate(const Json& cert);

}  // namespace altlines
