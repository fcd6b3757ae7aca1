#include "altlines/mestre.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace altlines {

namespace {

void require_odd_monic_separable(const RatPoly& P, const char* who) {
  const int n = P.degree();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(who) + ": degree must be odd and at least 3");
  if (!is_monic(P)) throw std::invalid_argument(std::string(who) + ": polynomial must be monic");
  if (!is_squarefree(P)) throw std::invalid_argument(std::string(who) + ": repeated roots");
}

std::vector<Complex> complex_coeffs(const RatPoly& P, mpfr_prec_t prec) {
  std::vector<Complex> c;
  for (const auto& v : P.coeffs()) c.emplace_back(v, prec);
  return c;
}

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex acc(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Bound on the rounding error of evaluating P at z by Horner.
Real horner_error(const RatPoly& P, const Real& absz, mpfr_prec_t prec) {
  Real acc(prec);
  for (int i = P.degree(); i >= 0; --i) acc = acc * absz + abs(Real(P.coeff(i), prec));
  return acc * Real(4L * (P.degree() + 1), prec) * Real::pow2(-static_cast<long>(prec), prec);
}

}  // namespace

RootCloud isolate_roots(const RatPoly& P, mpfr_prec_t prec) {
  if (!is_monic(P) || P.degree() < 1) throw std::invalid_argument("isolate_roots: polynomial must be monic and nonconstant");
  if (!is_squarefree(P)) throw std::invalid_argument("isolate_roots: repeated roots");
  const int n = P.degree();
  auto c = complex_coeffs(P, prec);
  auto dc = complex_coeffs(derivative(P), prec);

  Real bound(1, prec);
  for (int i = 0; i < n; ++i) bound = max(bound, Real(1, prec) + abs(Real(P.coeff(i), prec)));
  std::vector<Complex> z;
  const Real two_pi = Real::pi(prec) * Real(2, prec);
  for (int k = 0; k < n; ++k) {
    Real angle = two_pi * Real(Rat(Int(k), Int(n)), prec) + Real(Rat(Int(7), Int(10)), prec);
    Real radius = bound * Real(Rat(Int(1), Int(2)), prec);
    z.emplace_back(radius * cos(angle), radius * sin(angle));
  }

  const Real eps = Real::pow2(-static_cast<long>(prec) + 6, prec);
  const int max_iter = 200 + static_cast<int>(prec);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      Complex pv = horner(c, z[i]);
      if (pv.re.is_zero() && pv.im.is_zero()) {
        done[i] = true;
        continue;
      }
      Complex w = pv / horner(dc, z[i]);
      Complex s(prec);
      for (int j = 0; j < n; ++j) {
        if (j != i) s += Complex(Real(1, prec), Real(prec)) / (z[i] - z[j]);
      }
      Complex step = w / (Complex(Real(1, prec), Real(prec)) - w * s);
      z[i] -= step;
      if (abs(step) <= eps * (Real(1, prec) + abs(z[i]))) done[i] = true;
      else all = false;
    }
    if (all) break;
  }

  RootCloud cloud;
  cloud.precision = prec;
  for (int i = 0; i < n; ++i) {
    Complex prod(Real(1, prec), Real(prec));
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= z[i] - z[j];
    }
    Real mag = abs(horner(c, z[i])) + horner_error(P, abs(z[i]), prec);
    Real den = abs(prod);
    if (den.is_zero()) throw NumericFailure("isolate_roots: coincident approximations");
    cloud.radii.push_back(Real(n, prec) * mag / den);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(cloud.radii[i] + cloud.radii[j] < abs(z[i] - z[j]))) {
        throw NumericFailure("isolate_roots: inclusion disks overlap at " + std::to_string(prec) + " bits");
      }
    }
  }
  cloud.roots = std::move(z);
  return cloud;
}

Complex pfaffian(std::vector<std::vector<Complex>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Complex(Real(1, 64), Real(64));
  const mpfr_prec_t prec = a[0][0].prec();
  if (n % 2) return Complex(prec);
  Complex pf(Real(1, prec), Real(prec));
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t kp = k + 1;
    Real best = l1(a[k + 1][k]);
    for (std::size_t i = k + 2; i < n; ++i) {
      Real v = l1(a[i][k]);
      if (best < v) {
        best = v;
        kp = i;
      }
    }
    if (kp != k + 1) {
      std::swap(a[k + 1], a[kp]);
      for (auto& row : a) std::swap(row[k + 1], row[kp]);
      pf = -pf;
    }
    if (best.is_zero()) return Complex(prec);
    pf *= a[k][k + 1];
    if (k + 2 < n) {
      std::vector<Complex> tau;
      for (std::size_t j = k + 2; j < n; ++j) tau.push_back(a[k][j] / a[k][k + 1]);
      for (std::size_t i = k + 2; i < n; ++i) {
        for (std::size_t j = k + 2; j < n; ++j) {
          a[i][j] += tau[i - k - 2] * a[j][k + 1] - a[i][k + 1] * tau[j - k - 2];
        }
      }
    }
  }
  return pf;
}

NumericKernel numeric_kernel(const RatPoly& P, mpfr_prec_t prec) {
  require_odd_monic_separable(P, "numeric_kernel");
  NumericKernel out;
  out.cloud = isolate_roots(P, prec);
  const auto& al = out.cloud.roots;
  const std::size_t n = al.size();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, Complex(prec)));
  const Complex one(Real(1, prec), Real(prec));
  Real entry_max(prec);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      m[j][k] = one / (al[k] - al[j]);
      entry_max = max(entry_max, abs(m[j][k]));
    }
  }
  Real lambda_max(prec);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Complex>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<Complex> row;
      for (std::size_t s = 0; s < n; ++s) {
        if (s != i) row.push_back(m[r][s]);
      }
      minor.push_back(std::move(row));
    }
    Complex pf = pfaffian(std::move(minor));
    out.lambda.push_back(i % 2 ? -pf : pf);
    lambda_max = max(lambda_max, abs(out.lambda.back()));
  }
  Real scale(1, prec);
  for (std::size_t i = 0; i + 1 < n; i += 2) scale *= entry_max;
  const Real tol = Real::pow2(-static_cast<long>(prec) / 2, prec);
  if (lambda_max < tol * scale) {
    throw KernelDimensionError("numeric_kernel: all sub-Pfaffians vanish; kernel dimension exceeds one");
  }
  Real res(prec);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc(prec);
    for (std::size_t k = 0; k < n; ++k) acc += m[j][k] * out.lambda[k];
    res = max(res, abs(acc));
  }
  out.residual = res / lambda_max;
  if (!(out.residual < tol * entry_max)) throw NumericFailure("numeric_kernel: residual too large");
  return out;
}

std::optional<Rat> rationalize(const Rat& x, long tol_bits, long den_bits) {
  const Rat tol = Rat(1) / Rat(Int(Int(1) << static_cast<mp_bitcnt_t>(tol_bits)));
  const Int den_cap = Int(1) << static_cast<mp_bitcnt_t>(den_bits);
  Int h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  Rat rest = x;
  for (;;) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), rest.num().get_mpz_t(), rest.den().get_mpz_t());
    Int h = a * h_prev + h_prev2;
    Int k = a * k_prev + k_prev2;
    if (k > den_cap) return std::nullopt;
    Rat conv(h, k);
    if ((x - conv).abs() <= tol) return conv;
    Rat frac = rest - Rat(a);
    if (frac.is_zero()) return conv;
    rest = frac.inverse();
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
}

std::optional<RatPoly> rationalize_R(const NumericKernel& k, const RatPoly& P) {
  const auto& al = k.cloud.roots;
  const int n = static_cast<int>(al.size());
  const mpfr_prec_t prec = k.cloud.precision;
  std::vector<Complex> R(static_cast<std::size_t>(n), Complex(prec));
  for (int j = 0; j < n; ++j) {
    // P_j = P / (X - alpha_j) by synthetic division.
    std::vector<Complex> b(static_cast<std::size_t>(n), Complex(prec));
    b[n - 1] = Complex(P.coeff(n), prec);
    for (int i = n - 1; i >= 1; --i) b[i - 1] = Complex(P.coeff(i), prec) + al[j] * b[i];
    for (int i = 0; i < n; ++i) R[i] += k.lambda[j] * b[i];
  }
  std::size_t top = 0;
  for (std::size_t i = 1; i < R.size(); ++i) {
    if (abs(R[top]) < abs(R[i])) top = i;
  }
  const Complex pivot = R[top];
  const long p = static_cast<long>(prec);
  const Real im_tol = Real::pow2(-p / 2, prec);
  std::vector<Rat> out;
  for (const auto& c : R) {
    Complex r = c / pivot;
    if (!(abs(r.im) < im_tol)) return std::nullopt;
    auto q = rationalize(r.re.to_rat(), p / 2, p / 4);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  RatPoly poly(std::move(out));
  if (poly.is_zero()) return std::nullopt;
  return poly;
}

std::optional<RatPoly> solve_Q(const RatPoly& P, const RatPoly& R) {
  const int n = P.degree();
  if (n < 1) throw std::invalid_argument("solve_Q: P must be nonconstant");
  if (R.degree() > n - 1) return std::nullopt;
  // Coefficient of X^s in P Q' - P' Q is sum_j (j - i) P_i q_j with i + j - 1 = s.
  const int rows = 2 * n - 1, cols = n;
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows), std::vector<Rat>(static_cast<std::size_t>(cols) + 1));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= n; ++i) {
      int s = i + j - 1;
      if (s < 0 || s >= rows || i == j) continue;
      a[s][j] += Rat(j - i) * P.coeff(i);
    }
  }
  RatPoly rhs = R * R;
  for (int s = 0; s < rows; ++s) a[s][cols] = rhs.coeff(s);

  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    Rat inv = a[row][col].inverse();
    for (int c = col; c <= cols; ++c) a[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int c = col; c <= cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < rows; ++r) {
    if (!a[r][cols].is_zero()) return std::nullopt;
  }
  if (row < cols) throw InternalInconsistency("solve_Q: linear map is not injective; P is not separable");
  std::vector<Rat> q(static_cast<std::size_t>(cols));
  for (int r = 0; r < row; ++r) q[pivot_col[r]] = a[r][cols];
  RatPoly Q(std::move(q));
  if (P * derivative(Q) - derivative(P) * Q != rhs) throw InternalInconsistency("solve_Q: solution does not verify");
  return Q;
}

RatPoly certify_disc_square(const RatPoly& P, const RatPoly& Q) {
  RatPoly disc = discriminant_in_t(line_poly(P, Q));
  auto root = poly_sqrt(disc);
  if (!root) throw InternalInconsistency("certify_disc_square: discriminant of P - T Q is not a square in Q[T]");
  return *root;
}

namespace {

// Least s > 0 with s^2 divisible by d.
Int square_cover(Int d) {
  Int s = 1;
  for (unsigned long p = 2; p < 100000 && d > 1; ++p) {
    if (!mpz_divisible_ui_p(d.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < (e + 1) / 2; ++i) s *= p;
  }
  if (d > 1) s *= is_square(d) ? isqrt(d) : d;
  return s;
}

}  // namespace

QRSolution find_QR(const RatPoly& P, mpfr_prec_t start_prec, int max_doublings) {
  require_odd_monic_separable(P, "find_QR");
  mpfr_prec_t prec = start_prec;
  for (int attempt = 0; attempt <= max_doublings; ++attempt, prec *= 2) {
    std::optional<RatPoly> R;
    try {
      R = rationalize_R(numeric_kernel(P, prec), P);
    } catch (const NumericFailure&) {
      continue;
    }
    if (!R) continue;
    RatPoly Rn = primitive_part(*R);
    auto Q = solve_Q(P, Rn);
    if (!Q || Q->is_zero()) continue;
    Int s = square_cover(denominator_lcm(*Q));
    QRSolution out{*Q * Rat(Int(s * s)), Rn * Rat(s), prec};
    if (P * derivative(out.Q) - derivative(P) * out.Q != out.R * out.R) {
      throw InternalInconsistency("find_QR: rescaled identity failed");
    }
    return out;
  }
  throw BudgetExhausted("find_QR: no exact (Q, R) after " + std::to_string(max_doublings) + " precision doublings");
}

MestrePair mestre_pair(const RatPoly& P, mpfr_prec_t start_prec, int max_doublings) {
  require_odd_monic_separable(P, "mestre_pair");
  if (!rat_sqrt(discriminant(P))) throw std::invalid_argument("mestre_pair: discriminant of P is not a square");
  QRSolution qr = find_QR(P, start_prec, max_doublings);
  MestrePair out{P, qr.Q, qr.R, certify_disc_square(P, qr.Q), qr.precision};
  return out;
}

OddLine build_line_odd(int n, const std::optional<RatPoly>& seed, u64 prime_bound, u64 rng_seed, int search_budget) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("build_line_odd: n must be odd and at least 3");
  OddLine out;
  RatPoly base;
  if (seed) {
    if (seed->degree() != n || !is_monic(*seed) || !has_integer_coeffs(*seed)) {
      throw std::invalid_argument("build_line_odd: seed must be monic of degree n with integer coefficients");
    }
    if (!is_squarefree(*seed)) throw std::invalid_argument("build_line_odd: seed has repeated roots");
    out.seed_evidence = certify_equals_An(*seed, prime_bound);
    if (!out.seed_evidence.disc_square) throw std::invalid_argument("build_line_odd: seed discriminant is not a square");
    if (out.seed_evidence.verdict != Verdict::EqualsAn) {
      throw BudgetExhausted("build_line_odd: no A_n witness primes for the seed below the prime bound");
    }
    base = *seed;
  } else {
    std::mt19937_64 rng(rng_seed);
    std::vector<long> pool(static_cast<std::size_t>(2 * n + 1));
    std::iota(pool.begin(), pool.end(), -static_cast<long>(n));
    std::uniform_int_distribution<long> tdist(-12, 12);
    bool found = false;
    for (int attempt = 0; attempt < search_budget && !found; ++attempt) {
      std::shuffle(pool.begin(), pool.end(), rng);
      RatPoly split = poly_from_ints({1});
      for (int i = 0; i < n; ++i) split *= poly_from_ints({-pool[static_cast<std::size_t>(i)], 1});
      QRSolution qr = find_QR(split);
      if (gcd(split, qr.Q).degree() > 0) continue;
      for (int tries = 0; tries < 4; ++tries) {
        long t = tdist(rng);
        if (t == 0) continue;
        RatPoly cand = split - Rat(t) * qr.Q;
        if (!has_integer_coeffs(cand) || !is_squarefree(cand)) continue;
        GroupEvidence ev = certify_equals_An(cand, prime_bound);
        if (ev.verdict == Verdict::EqualsAn) {
          base = cand;
          out.seed_evidence = ev;
          out.seed_origin = std::make_pair(split, Rat(t));
          found = true;
          break;
        }
      }
    }
    if (!found) throw BudgetExhausted("build_line_odd: no A_n seed found within the search budget");
  }
  out.pair = mestre_pair(base);
  const AnWitness& w = *out.seed_evidence.witness;
  out.recipe = LineRecipe{base, out.pair.Q, Rat(0), w, w.modulus()};
  return out;
}

}  // namespace altlines
