#pragma once

// The odd-degree construction: (Q, R) with P Q' - P' Q = R^2 from the kernel
// of the antisymmetric matrix 1/(alpha_k - alpha_j) on the roots of P, then
// the square-discriminant line and its prime-sieved sub-line.

#include <optional>
#include <vector>

#include "altlines/errors.hpp"
#include "altlines/line.hpp"
#include "altlines/numeric.hpp"

namespace altlines {

/// The working precision was insufficient; retrying with more bits may help.
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The kernel of the root matrix is more than one-dimensional.
struct KernelDimensionError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RootCloud {
  std::vector<Complex> roots;
  /// Inclusion radii; the disks are pairwise disjoint.
  std::vector<Real> radii;
  mpfr_prec_t precision = 0;
};

struct NumericKernel {
  RootCloud cloud;
  std::vector<Complex> lambda;
  /// max_j |(M lambda)_j| / max_j |lambda_j|.
  Real residual;
};

/// Simultaneous Aberth-Ehrlich iteration with inclusion disks. Throws
/// std::invalid_argument for repeated roots and NumericFailure when the disks
/// cannot be separated at this precision.
RootCloud isolate_roots(const RatPoly& P, mpfr_prec_t prec);

/// Pfaffian of an even-order antisymmetric matrix (skew LTL^T elimination).
Complex pfaffian(std::vector<std::vector<Complex>> a);

/// Kernel vector of M_jk = 1/(alpha_k - alpha_j) from signed sub-Pfaffians.
/// P must be monic, separable and of odd degree >= 3.
NumericKernel numeric_kernel(const RatPoly& P, mpfr_prec_t prec);

/// Best rational approximation by continued fractions: the first convergent
/// within 2^-tol_bits, provided its denominator stays below 2^den_bits.
std::optional<Rat> rationalize(const Rat& x, long tol_bits, long den_bits);

/// R = sum lambda_j P_j, normalized by its largest coefficient and rounded to
/// rationals. Empty when any coefficient fails to rationalize cleanly.
std::optional<RatPoly> rationalize_R(const NumericKernel& k, const RatPoly& P);

/// The unique Q with deg Q <= n-1 and P Q' - P' Q = R^2, if it exists.
std::optional<RatPoly> solve_Q(const RatPoly& P, const RatPoly& R);

/// Exact square root of Delta(P - T Q) in Q[T], with positive leading
/// coefficient. Throws InternalInconsistency when it does not exist.
RatPoly certify_disc_square(const RatPoly& P, const RatPoly& Q);

struct QRSolution {
  RatPoly Q, R;
  mpfr_prec_t precision = 0;
};

/// Numeric stage with precision escalation followed by the exact gate
/// P Q' - P' Q = R^2. Works for any monic separable P of odd degree. R is a
/// primitive integer polynomial with positive leading coefficient; Q and R are
/// then rescaled by the least s with s^2 Q integral. Throws BudgetExhausted
/// when the doublings run out.
QRSolution find_QR(const RatPoly& P, mpfr_prec_t start_prec = 256, int max_doublings = 4);

struct MestrePair {
  RatPoly P, Q, R;
  RatPoly sqrt_disc;
  mpfr_prec_t precision = 0;
};

/// find_QR plus the square root of Delta(P - T Q). Requires Delta(P) to be a
/// rational square.
MestrePair mestre_pair(const RatPoly& P, mpfr_prec_t start_prec = 256, int max_doublings = 4);

struct OddLine {
  LineRecipe recipe;
  MestrePair pair;
  GroupEvidence seed_evidence;
  /// When the seed was searched: the split polynomial and parameter it came from.
  std::optional<std::pair<RatPoly, Rat>> seed_origin;
};

/// Odd-degree line through an A_n seed. Without a seed, the seed is searched on Mestre
/// lines through totally split polynomials, whose members all have square
/// discriminant, using rng_seed for reproducibility.
OddLine build_line_odd(int n, const std::optional<RatPoly>& seed, u64 prime_bound, u64 rng_seed = 1,
                       int search_budget = 400);

}  // namespace altlines
