#include "altlines/galoisid.hpp"

#include <algorithm>
#include <stdexcept>

namespace altlines {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ContainsAn: return "ContainsAn";
    case Verdict::EqualsAn: return "EqualsAn";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(QuarticGroup g) {
  switch (g) {
    case QuarticGroup::S4: return "S4";
    case QuarticGroup::A4: return "A4";
    case QuarticGroup::V4: return "V4";
    case QuarticGroup::C4_or_D4: return "C4_or_D4";
    case QuarticGroup::Reducible: return "Reducible";
  }
  return "?";
}

namespace {

void require_monic_integer(const RatPoly& f, const char* who) {
  if (!is_monic(f) || !has_integer_coeffs(f)) {
    throw std::invalid_argument(std::string(who) + ": polynomial must be monic with integer coefficients");
  }
}

bool is_odd_prime(int v) { return v > 2 && is_prime_u64(static_cast<u64>(v)); }

bool none_left(const std::vector<bool>& degrees) {
  return std::none_of(degrees.begin() + 1, degrees.end() - 1, [](bool b) { return b; });
}

std::vector<bool> intersect(std::vector<bool> a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

}  // namespace

Int AnWitness::modulus() const {
  Int m = Int(std::to_string(p)) * Int(std::to_string(q));
  for (u64 v : r) m *= Int(std::to_string(v));
  return m;
}

bool pattern_powers_to_cycle(const FactorPattern& pat, int len) {
  int equal = 0;
  for (int part : pat) {
    if (part == len) ++equal;
    else if (part % len == 0) return false;
  }
  return equal == 1;
}

std::vector<bool> factor_degrees(const FactorPattern& pat) {
  int n = 0;
  for (int part : pat) n += part;
  std::vector<bool> sums(static_cast<std::size_t>(n + 1), false);
  sums[0] = true;
  for (int part : pat) {
    for (int s = n; s >= part; --s) sums[s] = sums[s] || sums[s - part];
  }
  return sums;
}

std::optional<FactorPattern> cycle_type_sample(const RatPoly& f, u64 p) {
  require_monic_integer(f, "cycle_type_sample");
  auto red = reduce_mod_p(f, p);
  if (!red) return std::nullopt;
  return factor_pattern(*red);
}

std::optional<AnWitness> certify_contains_An(const RatPoly& f, u64 prime_bound) {
  const int n = f.degree();
  if (n < 3) throw std::invalid_argument("certify_contains_An: degree must be at least 3");
  require_monic_integer(f, "certify_contains_An");
  if (!is_squarefree(f)) throw std::invalid_argument("certify_contains_An: polynomial is not squarefree");

  std::vector<int> ells;
  for (int v = n; 2 * v > n; --v) {
    if (is_odd_prime(v)) ells.push_back(v);
  }
  std::map<int, u64> first_ell;
  u64 three = 0, full = 0;
  // Greedy transitivity: keep a prime whenever it rules out another degree.
  std::vector<std::pair<u64, std::vector<bool>>> shrinking;
  std::vector<bool> open(static_cast<std::size_t>(n + 1), true);
  auto transitive = [&] { return full != 0 || none_left(open); };
  // Only primes p > n qualify, so p never divides |S_n|.
  for (u64 p = next_prime_u64(static_cast<u64>(n)); p <= prime_bound; p = next_prime_u64(p)) {
    auto pat = cycle_type_sample(f, p);
    if (!pat) continue;
    for (int ell : ells) {
      if (!first_ell.count(ell) && pattern_powers_to_cycle(*pat, ell)) first_ell[ell] = p;
    }
    if (!three && pattern_powers_to_cycle(*pat, 3)) three = p;
    if (!full && *pat == FactorPattern{n}) full = p;
    if (!transitive()) {
      auto degrees = factor_degrees(*pat);
      auto next = intersect(open, degrees);
      if (next != open) {
        shrinking.emplace_back(p, std::move(degrees));
        open = std::move(next);
      }
    }
    if (three && transitive() && first_ell.count(ells.front())) break;
  }
  if (!three || !transitive()) return std::nullopt;
  std::vector<u64> trans;
  if (full) {
    trans = {full};
  } else {
    // Drop primes, latest first, that the others make redundant.
    for (std::size_t i = shrinking.size(); i-- > 0;) {
      std::vector<bool> rest(static_cast<std::size_t>(n + 1), true);
      for (std::size_t j = 0; j < shrinking.size(); ++j) {
        if (j != i) rest = intersect(rest, shrinking[j].second);
      }
      if (none_left(rest)) shrinking.erase(shrinking.begin() + static_cast<std::ptrdiff_t>(i));
    }
    for (const auto& entry : shrinking) trans.push_back(entry.first);
  }
  for (int ell : ells) {
    if (first_ell.count(ell)) return AnWitness{static_cast<u64>(ell), first_ell[ell], three, trans};
  }
  return std::nullopt;
}

GroupEvidence identify_group(const RatPoly& f, u64 prime_bound) {
  GroupEvidence ev;
  ev.poly = f;
  ev.disc = discriminant(f);
  ev.disc_square = rat_sqrt(ev.disc).has_value();
  ev.witness = certify_contains_An(f, prime_bound);
  if (ev.witness) {
    std::vector<u64> primes{ev.witness->p, ev.witness->q};
    primes.insert(primes.end(), ev.witness->r.begin(), ev.witness->r.end());
    for (u64 p : primes) ev.patterns[p] = *cycle_type_sample(f, p);
    ev.verdict = ev.disc_square ? Verdict::EqualsAn : Verdict::ContainsAn;
  }
  return ev;
}

GroupEvidence certify_equals_An(const RatPoly& f, u64 prime_bound) {
  GroupEvidence ev = identify_group(f, prime_bound);
  if (ev.verdict != Verdict::EqualsAn) ev.verdict = Verdict::Inconclusive;
  return ev;
}

// ---------------------------------------------------------------------------
// Rational roots: roots modulo a good prime, Hensel-lifted past a height bound
// and then checked exactly.

namespace {

Int eval_mod(const std::vector<Int>& c, const Int& x, const Int& mod) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }
  return acc;
}

}  // namespace

std::vector<Rat> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  RatPoly g = primitive_part(exact_div(f, gcd(f, derivative(f))));
  if (g.coeff(0).is_zero()) {
    roots.emplace_back(0);
    g = exact_div(g, RatPoly::x());
  }
  if (g.degree() >= 1) {
    std::vector<Int> c;
    for (const auto& v : g.coeffs()) c.push_back(v.num());
    std::vector<Int> dc;
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned long>(i));
    const Int& lead = c.back();
    Int lead_abs = abs(lead);
    // Cauchy bound on |root|; a_n * root is an integer of size <= |a_n| * bound.
    Int max_ratio = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      Int q = abs(c[i]) / lead_abs + 1;
      if (q > max_ratio) max_ratio = q;
    }
    Int limit = 2 * lead_abs * (max_ratio + 1) + 1;
    u64 ell = 2;
    std::optional<FpPoly> red;
    for (;; ell = next_prime_u64(ell)) {
      red = reduce_mod_p(g, ell);
      if (red) break;
    }
    const Int ell_z(std::to_string(ell));
    for (u64 r0 : roots_mod_p(*red)) {
      Int rho(std::to_string(r0));
      Int mod = ell_z;
      while (mod <= limit) {
        mod = mod * mod;
        Int fv = eval_mod(c, rho, mod);
        Int dv = eval_mod(dc, rho, mod);
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t())) {
          throw std::logic_error("rational_roots: Hensel derivative not invertible");
        }
        rho = rho - fv * inv;
        mpz_fdiv_r(rho.get_mpz_t(), rho.get_mpz_t(), mod.get_mpz_t());
      }
      Int s = lead * rho;
      mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
      if (2 * s > mod) s -= mod;
      Rat cand(s, lead);
      if (g(cand).is_zero()) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Roots in Q(sqrt m): write h(x + y sqrt m) = A(x, y) + sqrt(m) B(x, y),
// eliminate x by a resultant in Q[y], then back-substitute rational y.

std::optional<QuadElem> has_root_in_quad(const QuadPoly& h, long long m) {
  auto roots = roots_in_quad(h, m);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::vector<QuadElem> roots_in_quad(const QuadPoly& h, long long m) {
  check_field_parameter(m);
  long long hm = field_of(h);
  if (hm != 0 && hm != m) throw std::invalid_argument("roots_in_quad: coefficients live in another field");
  if (h.is_zero()) throw std::invalid_argument("roots_in_quad of the zero polynomial");
  std::vector<QuadElem> out;
  if (h.degree() < 1) return out;

  // Polynomials in x over Q[y].
  const int n = h.degree();
  std::vector<RatPoly> A(static_cast<std::size_t>(n) + 1), B(static_cast<std::size_t>(n) + 1);
  const RatPoly y = RatPoly::x();
  for (int k = 0; k <= n; ++k) {
    const QuadElem& hk = h.coeffs()[static_cast<std::size_t>(k)];
    const Rat& a = hk.a();
    const Rat& b = hk.b();
    // (x + y sqrt m)^k = sum_j C(k, j) x^(k-j) (y sqrt m)^j.
    Int binom = 1;
    for (int j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * (k - j + 1) / j;
      RatPoly yj = pow(y, static_cast<unsigned>(j)) * Rat(binom);
      auto xi = static_cast<std::size_t>(k - j);
      if (j % 2 == 0) {
        Rat mpow = Rat(m).pow(j / 2);
        A[xi] += yj * (a * mpow);
        B[xi] += yj * (b * mpow);
      } else {
        Rat mpow = Rat(m).pow((j - 1) / 2);
        A[xi] += yj * (b * Rat(m) * mpow);
        B[xi] += yj * (a * mpow);
      }
    }
  }
  TPoly Ax(A), Bx(B);
  std::vector<Rat> ys;
  if (Bx.is_zero()) {
    // Only possible for constant h; unreachable for degree >= 1.
    return out;
  }
  RatPoly res = resultant_in_t(Ax, Bx);
  if (res.is_zero()) throw std::logic_error("roots_in_quad: elimination degenerated");
  ys = rational_roots(res);
  for (const Rat& y0 : ys) {
    RatPoly a0 = specialize(Ax, y0), b0 = specialize(Bx, y0);
    RatPoly g = gcd(a0, b0);
    if (g.is_zero() || g.degree() < 1) continue;
    for (const Rat& x0 : rational_roots(g)) {
      QuadElem z(m, x0, y0);
      if (h.eval<QuadElem>(z).is_zero()) out.push_back(z);
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadElem& u, const QuadElem& v) {
    if (u.a() != v.a()) return u.a() < v.a();
    return u.b() < v.b();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quartic classification, generic over Q and Q(sqrt m).

namespace {

struct RationalField {
  std::optional<Rat> sqrt(const Rat& x) const { return rat_sqrt(x); }
  std::vector<Rat> roots(const RatPoly& f) const { return rational_roots(f); }
  Rat embed(long v) const { return Rat(v); }
};

struct QuadraticField {
  long long m;
  std::optional<QuadElem> sqrt(const QuadElem& x) const { return quad_sqrt(x, m); }
  std::vector<QuadElem> roots(const QuadPoly& f) const { return roots_in_quad(f, m); }
  QuadElem embed(long v) const { return QuadElem(m, Rat(v), Rat(0)); }
};

template <class F, class Field>
bool has_quadratic_split(const Poly<F>& f, const Field& K) {
  // Depress: X -> X - a3/4 gives X^4 + p X^2 + q X + r.
  const F shift_by = -(f.coeff(3) / F(4));
  Poly<F> d = shift(f, shift_by);
  const F p = d.coeff(2), q = d.coeff(1), r = d.coeff(0);
  // (X^2 + sX + t)(X^2 - sX + t') exists with s != 0 iff z = s^2 is a nonzero
  // square root of z^3 + 2p z^2 + (p^2 - 4r) z - q^2.
  Poly<F> cubic({-(q * q), p * p - F(4) * r, F(2) * p, F(1)});
  for (const F& z : K.roots(cubic)) {
    if (!z.is_zero() && K.sqrt(z)) return true;
  }
  if (q.is_zero() && K.sqrt(p * p - F(4) * r)) return true;
  return false;
}

template <class F, class Field>
bool reducible_quartic(const Poly<F>& f, const Field& K) {
  if (!K.roots(f).empty()) return true;
  return has_quadratic_split(f, K);
}

template <class F, class Field>
QuarticGroup classify(const Poly<F>& f, const Field& K) {
  if (f.degree() != 4 || !(f.lead() == F(1))) throw std::invalid_argument("quartic classification needs a monic quartic");
  if (discriminant(f).is_zero() || reducible_quartic(f, K)) return QuarticGroup::Reducible;
  const std::size_t resolvent_roots = K.roots(cubic_resolvent(f)).size();
  if (resolvent_roots == 0) return K.sqrt(discriminant(f)) ? QuarticGroup::A4 : QuarticGroup::S4;
  if (resolvent_roots == 3) return QuarticGroup::V4;
  return QuarticGroup::C4_or_D4;
}

}  // namespace

bool quartic_reducible_over_Q(const RatPoly& f) {
  if (f.degree() != 4 || f.lead() != Rat(1)) throw std::invalid_argument("expected a monic quartic");
  return reducible_quartic(f, RationalField{});
}

QuarticGroup quartic_group_over_Q(const RatPoly& f) { return classify(f, RationalField{}); }

QuarticGroup quartic_group_over_quad(const QuadPoly& f, long long m) {
  check_field_parameter(m);
  long long fm = field_of(f);
  if (fm != 0 && fm != m) throw std::invalid_argument("quartic_group_over_quad: coefficients live in another field");
  return classify(f, QuadraticField{m});
}

}  // namespace altlines
