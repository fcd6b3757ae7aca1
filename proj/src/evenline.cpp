#include "altlines/evenline.hpp"

#include <array>

namespace altlines {

namespace {

void require_even(int n, const char* who) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument(std::string(who) + ": n must be even and at least 4");
}

Rat closed_form_constant(int n) {
  Rat c = Rat(ipow(n - 1, static_cast<unsigned long>(n - 1))) * Rat(ipow(n, static_cast<unsigned long>(n)));
  return (n / 2 + 1) % 2 ? -c : c;
}

// 2x2 matrices acting on column vectors (x : y).
using Mat = std::array<std::array<Rat, 2>, 2>;
using Vec = std::array<Rat, 2>;

Vec homogeneous(const P1Point& pt) {
  if (pt.is_infinity()) return {Rat(1), Rat(0)};
  return {*pt.value, Rat(1)};
}

// Mobius map with (1:0) -> q, (0:1) -> p, (1:1) -> r.
Mat frame(const P1Point& p, const P1Point& q, const P1Point& r) {
  if (p == q || q == r || p == r) throw std::invalid_argument("transported_cover: coincident points");
  Vec vp = homogeneous(p), vq = homogeneous(q), vr = homogeneous(r);
  // Solve lambda*vq + mu*vp = vr.
  Rat det = vq[0] * vp[1] - vp[0] * vq[1];
  Rat lambda = (vr[0] * vp[1] - vp[0] * vr[1]) / det;
  Rat mu = (vq[0] * vr[1] - vr[0] * vq[1]) / det;
  return {{{lambda * vq[0], mu * vp[0]}, {lambda * vq[1], mu * vp[1]}}};
}

Mat adjugate(const Mat& m) { return {{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}}}; }

}  // namespace

CoverCoeffs canonical_cover_coeffs(int n) {
  if (n < 3) throw std::invalid_argument("canonical_cover_coeffs: n must be at least 3");
  return {Rat(n - 2), Rat(-n), Rat(-n), Rat(n - 2)};
}

Int base_field_even(int n) {
  require_even(n, "base_field_even");
  return squarefree_part(closed_form_constant(n));
}

EvenFamily even_family(int n) {
  require_even(n, "even_family");
  EvenFamily fam;
  fam.n = n;
  fam.P = RatPoly::monomial(Rat(1), n) - RatPoly::monomial(Rat(n), n - 1);
  fam.Q = RatPoly({Rat(ipow(n - 2, 2)), Rat(-n)});
  const Rat root = Rat(ipow(n - 2, static_cast<unsigned long>(n - 2)));
  RatPoly lin({-root, Rat(1)});
  fam.disc_closed_form = closed_form_constant(n) * RatPoly::monomial(Rat(1), n - 2) * lin * lin;
  fam.base_field_a = base_field_even(n);

  if (discriminant_in_t(line_poly(fam.P, fam.Q)) != fam.disc_closed_form) {
    throw InternalInconsistency("even_family: discriminant differs from the closed form");
  }
  const Rat res = Rat(-4 * (n - 1)) * Rat(ipow(n - 2, static_cast<unsigned long>(2 * n - 2)));
  if (resultant(fam.P, fam.Q) != res) throw InternalInconsistency("even_family: Res(P, Q) mismatch");
  RatPoly xm = RatPoly({Rat(-(n - 2)), Rat(1)});
  RatPoly wronskian = Rat(-n * (n - 1)) * RatPoly::monomial(Rat(1), n - 2) * xm * xm;
  if (derivative(fam.P) * fam.Q - fam.P * derivative(fam.Q) != wronskian) {
    throw InternalInconsistency("even_family: P'Q - PQ' mismatch");
  }
  return fam;
}

Cover transported_cover(int n, const RamTriple& t) {
  if (n < 3) throw std::invalid_argument("transported_cover: n must be at least 3");
  const CoverCoeffs k = canonical_cover_coeffs(n);
  const Mat src = frame(t.p, t.q, t.r);
  const Mat dst = frame(t.p_img, t.q_img, t.r_img);
  // Source substitution (x', y') = adj(src) (x, y), dehomogenized at y = 1.
  const Mat inv = adjugate(src);
  const RatPoly xs({inv[0][1], inv[0][0]});
  const RatPoly ys({inv[1][1], inv[1][0]});
  // Canonical forms U = x^(n-1)(ax + by), V = y^(n-1)(cx + dy) after substitution.
  const auto e = static_cast<unsigned>(n - 1);
  const RatPoly U = pow(xs, e) * (k.a * xs + k.b * ys);
  const RatPoly V = pow(ys, e) * (k.c * xs + k.d * ys);
  Cover out;
  out.n = n;
  out.N = dst[0][0] * U + dst[0][1] * V;
  out.D = dst[1][0] * U + dst[1][1] * V;
  return out;
}

int fiber_multiplicity(const Cover& f, const P1Point& x, const P1Point& y) {
  // G = v N - u D vanishes exactly on the fiber over y = (u : v).
  Vec vy = homogeneous(y);
  RatPoly G = vy[1] * f.N - vy[0] * f.D;
  if (G.is_zero()) throw std::invalid_argument("fiber_multiplicity: map is constant");
  if (x.is_infinity()) return f.n - G.degree();
  return root_multiplicity(G, *x.value);
}

bool check_ramification(const Cover& f, const RamTriple& t) {
  return fiber_multiplicity(f, t.p, t.p_img) == f.n - 1 && fiber_multiplicity(f, t.q, t.q_img) == f.n - 1 &&
         fiber_multiplicity(f, t.r, t.r_img) == 3;
}

EvenLine build_line_even(int n, u64 prime_bound, int t_budget) {
  require_even(n, "build_line_even");
  if (!is_square(Int(n - 1))) throw std::invalid_argument("build_line_even: n - 1 must be a perfect square");
  EvenLine out;
  out.family = even_family(n);
  auto root = poly_sqrt(out.family.disc_closed_form);
  if (!root) throw InternalInconsistency("build_line_even: closed-form discriminant is not a square");
  out.sqrt_disc = *root;
  const Rat degenerate = Rat(ipow(n - 2, static_cast<unsigned long>(n - 2)));
  for (long t = 1; t <= t_budget; ++t) {
    Rat t0(t);
    RatPoly f = out.family.P - t0 * out.family.Q;
    if (t0 == degenerate || !is_squarefree(f)) {
      out.skipped.push_back(t0);
      continue;
    }
    GroupEvidence ev = certify_equals_An(f, prime_bound);
    if (ev.verdict != Verdict::EqualsAn) {
      out.skipped.push_back(t0);
      continue;
    }
    const AnWitness& w = *ev.witness;
    out.base_evidence = ev;
    out.recipe = LineRecipe{out.family.P, out.family.Q, t0, w, w.modulus()};
    return out;
  }
  throw BudgetExhausted("build_line_even: no certified specialization within the budget");
}

}  // namespace altlines
