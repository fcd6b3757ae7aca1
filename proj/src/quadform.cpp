#include "altlines/quadform.hpp"

#include <functional>
#include <stdexcept>

#include "altlines/errors.hpp"

namespace altlines {

namespace {

void require_valid_m(long long m, const char* who) {
  if (m == 0 || m == 1 || !is_squarefree(m)) {
    throw std::invalid_argument(std::string(who) + ": m must be square-free and not 0 or 1");
  }
}

Int mod_int(const Int& v, const Int& mod) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Int pow_int(std::uint64_t base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Int eval_form(const std::vector<Int>& a, const std::vector<Int>& x) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i] * x[i];
  return acc;
}

// Newton iteration on one coordinate with a unit coefficient and unit value.
// Returns a vector whose form value vanishes mod p^k.
std::vector<Int> hensel_lift(const std::vector<Int>& a, std::vector<Int> x, std::uint64_t p, unsigned k) {
  const Int pz(static_cast<unsigned long>(p));
  std::size_t j = 0;
  while (j < x.size() && mod_int(x[j], pz) == 0) ++j;
  if (j == x.size()) throw std::logic_error("hensel_lift: zero vector");
  const Int mod = pow_int(p, k);
  for (unsigned step = 0; step < k; ++step) {
    Int g = mod_int(eval_form(a, x), mod);
    if (g == 0) break;
    Int deriv = mod_int(2 * a[j] * x[j], mod);
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), mod.get_mpz_t())) {
      throw std::logic_error("hensel_lift: singular zero");
    }
    x[j] = mod_int(x[j] - g * inv, mod);
  }
  if (mod_int(eval_form(a, x), mod) != 0) throw InternalInconsistency("hensel_lift: lift failed");
  return x;
}

// Unimodular diagonal form over Z_p, p odd: isotropic iff it has a nonzero
// zero mod p, which is then nonsingular and lifts.
bool unimodular_isotropic(const std::vector<Int>& a, std::uint64_t p) {
  if (a.size() < 2) return false;
  const std::size_t r = std::min<std::size_t>(a.size(), 3);
  if (r == 3 && p > 1000) return true;  // Chevalley-Warning; the exhaustive search would be too large
  const Int pz(static_cast<unsigned long>(p));
  std::vector<Int> x(a.size(), Int(0));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < r; ++i) {
      x[i] = Int(static_cast<unsigned long>(c % p));
      c /= p;
    }
    if (mod_int(eval_form(a, x), pz) == 0) {
      hensel_lift(a, x, p, 8);
      return true;
    }
  }
  return false;
}

// Squarefree integer coefficients have 2-adic valuation at most 1, so a
// primitive zero mod 2^5 already satisfies Hensel's condition. The search
// goes to depth 8.
bool two_adic_isotropic(const std::vector<Int>& a) {
  constexpr unsigned depth = 8;
  const std::size_t r = a.size();
  std::function<bool(std::vector<Int>&, unsigned)> extend = [&](std::vector<Int>& x, unsigned k) {
    if (k == depth) return true;
    const Int bit = pow_int(2, k);
    const Int mod = pow_int(2, k + 1);
    for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
      std::vector<Int> y = x;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1ULL) y[i] += bit;
      }
      if (mod_int(eval_form(a, y), mod) == 0 && extend(y, k + 1)) return true;
    }
    return false;
  };
  for (std::uint64_t mask = 1; mask < (1ULL << r); ++mask) {
    std::vector<Int> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = Int(static_cast<unsigned long>(mask >> i & 1ULL));
    if (mod_int(eval_form(a, x), Int(2)) == 0 && extend(x, 1)) return true;
  }
  return false;
}

std::vector<Int> squarefree_coeffs(const DiagForm& form) {
  std::vector<Int> out;
  for (const auto& c : form.coeffs) {
    if (c.is_zero()) throw std::invalid_argument("DiagForm: zero coefficient");
    out.push_back(squarefree_part(c));
  }
  return out;
}

// Matches <1, 2, 1, 2m> exactly; returns m.
std::optional<long long> as_q1(const DiagForm& form) {
  const auto& c = form.coeffs;
  if (c.size() != 4 || c[0] != Rat(1) || c[1] != Rat(2) || c[2] != Rat(1) || !c[3].is_integer()) return std::nullopt;
  Int twice_m = c[3].num();
  if (!mpz_divisible_ui_p(twice_m.get_mpz_t(), 2) || !twice_m.fits_slong_p()) return std::nullopt;
  return twice_m.get_si() / 2;
}

}  // namespace

DiagForm q1_form(long long m) { return {{Rat(1), Rat(2), Rat(1), Rat(2 * m)}}; }

bool decide_strong_field(long long m) {
  require_valid_m(m, "decide_strong_field");
  const long long r = ((m % 8) + 8) % 8;
  return m < 0 && r != 1;
}

bool isotropic_local(const DiagForm& form, const Place& place) {
  std::vector<Int> a = squarefree_coeffs(form);
  if (place.is_real()) {
    bool pos = false, neg = false;
    for (const auto& v : a) (v > 0 ? pos : neg) = true;
    return pos && neg;
  }
  const std::uint64_t p = place.p;
  if (!is_prime_u64(p)) throw std::invalid_argument("isotropic_local: place must be a prime");
  if (p == 2) {
    const bool searched = two_adic_isotropic(a);
    if (auto m = as_q1(form); m && is_squarefree(*m)) {
      // Anisotropic 4-dimensional forms have square discriminant; here that is m = 1 mod 8.
      const bool shortcut = ((*m % 8) + 8) % 8 != 1;
      if (shortcut != searched) throw InternalInconsistency("isotropic_local: 2-adic shortcut disagrees with search");
    }
    return searched;
  }
  const Int pz(static_cast<unsigned long>(p));
  std::vector<Int> units, multiples;
  for (const auto& v : a) {
    if (mpz_divisible_p(v.get_mpz_t(), pz.get_mpz_t())) multiples.push_back(Int(v / pz));
    else units.push_back(v);
  }
  return unimodular_isotropic(units, p) || unimodular_isotropic(multiples, p);
}

bool decide_via_local_global(long long m) {
  require_valid_m(m, "decide_via_local_global");
  const DiagForm form = q1_form(m);
  if (!isotropic_local(form, Place::real())) return false;
  if (!isotropic_local(form, Place::prime(2))) return false;
  unsigned long long rest = static_cast<unsigned long long>(m < 0 ? -m : m);
  for (unsigned long long p = 3; p * p <= rest || p <= rest; p += 2) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (!isotropic_local(form, Place::prime(p))) return false;
    if (rest == 1) break;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructive chain

namespace {

using Vec3 = std::array<Rat, 3>;
using QVec3 = std::array<QuadElem, 3>;

Rat bilinear(const Vec3& x, const Vec3& y) { return x[0] * y[0] + Rat(2) * x[1] * y[1] + x[2] * y[2]; }

QuadElem q0(const QVec3& z) { return z[0] * z[0] + QuadElem(2) * z[1] * z[1] + z[2] * z[2]; }

// Integer zero of x1^2 + 2x2^2 + x3^2 + 2m x4^2 with x4 > 0, by increasing x4
// and then x2, x3 up to the bound.
std::optional<std::array<Int, 4>> find_q1_zero(long long m, long bound) {
  for (long x4 = 1; x4 <= bound; ++x4) {
    const Int target = Int(static_cast<long>(-2 * m)) * x4 * x4;
    for (long x2 = 0; x2 <= bound; ++x2) {
      const Int left = target - Int(2) * x2 * x2;
      if (left < 0) break;
      for (long x3 = 0; x3 <= bound; ++x3) {
        const Int x1sq = left - Int(x3) * x3;
        if (x1sq < 0) break;
        if (mpz_perfect_square_p(x1sq.get_mpz_t())) {
          Int x1 = sqrt(x1sq);
          if (x1 <= bound) return std::array<Int, 4>{x1, Int(x2), Int(x3), Int(x4)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MinusOneRepresentation> from_st(long long m, const QuadElem& s, const QuadElem& t) {
  // q(x, y) = (x + y)^2 + 2(x - y)^2 with x + y = s, x - y = t.
  const QuadElem half(m, Rat(Int(1), Int(2)), Rat(0));
  MinusOneRepresentation rep{(s + t) * half, (s - t) * half, std::nullopt, "chain"};
  return rep;
}

bool verified(const MinusOneRepresentation& r) {
  const QuadElem q = QuadElem(3) * r.u * r.u - QuadElem(2) * r.u * r.c + QuadElem(3) * r.c * r.c;
  return q == QuadElem(-1) && !(r.u == r.c);
}

std::optional<MinusOneRepresentation> chain(long long m) {
  std::optional<std::array<Int, 4>> zero;
  for (long bound = 16; bound <= 1024 && !zero; bound *= 2) zero = find_q1_zero(m, bound);
  if (!zero) return std::nullopt;
  const auto& v = *zero;
  if (v[0] * v[0] + 2 * v[1] * v[1] + v[2] * v[2] + Int(static_cast<long>(2 * m)) * v[3] * v[3] != 0) {
    throw InternalInconsistency("represent_minus_one: q1 zero check failed");
  }
  // q0 represents -2m at w.
  const Vec3 w{Rat(v[0], v[3]), Rat(v[1], v[3]), Rat(v[2], v[3])};
  if (bilinear(w, w) != Rat(-2 * m)) throw InternalInconsistency("represent_minus_one: q0(w) != -2m");
  // Orthogonal basis e1, e2 of the complement of w: q0 = <a, b, -2m>.
  const Vec3 r{w[0], Rat(2) * w[1], w[2]};
  std::vector<Vec3> cands;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Vec3 c{};
      c[i] = r[j];
      c[j] = -r[i];
      if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) cands.push_back(c);
    }
  }
  const Vec3 e1 = cands.at(0);
  std::optional<Vec3> e2;
  for (std::size_t k = 1; k < cands.size() && !e2; ++k) {
    Rat proj = bilinear(cands[k], e1) / bilinear(e1, e1);
    Vec3 c{cands[k][0] - proj * e1[0], cands[k][1] - proj * e1[1], cands[k][2] - proj * e1[2]};
    if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) e2 = c;
  }
  if (!e2) throw InternalInconsistency("represent_minus_one: complement is degenerate");
  const Rat a = bilinear(e1, e1), b = bilinear(*e2, *e2);
  auto s = rat_sqrt(-a * b / Rat(m));
  if (!s) throw InternalInconsistency("represent_minus_one: -ab/m is not a square");
  // z = (s sqrt(m) / a) e1 + e2 is isotropic for q0 over Q(sqrt m).
  const QuadElem coef(m, Rat(0), *s / a);
  QVec3 z;
  for (int i = 0; i < 3; ++i) z[i] = coef * QuadElem(e1[i]) + QuadElem((*e2)[i]);
  if (!q0(z).is_zero()) throw InternalInconsistency("represent_minus_one: q0(z) != 0");
  // s^2 + 2t^2 = -1, dividing by a nonzero outer coordinate.
  const QuadElem& denom = z[2].is_zero() ? z[0] : z[2];
  const QuadElem& other = z[2].is_zero() ? z[2] : z[0];
  const QuadElem s1 = other / denom, t1 = z[1] / denom;
  auto rep = from_st(m, s1, t1);
  if (rep && !verified(*rep)) {
    // t = 0 gives u = c; move along the conic s^2 + 2t^2 = -1 by the chord of slope 1.
    rep = from_st(m, s1 * QuadElem(m, Rat(Int(1), Int(3)), Rat(0)), s1 * QuadElem(m, Rat(Int(-2), Int(3)), Rat(0)));
    if (rep) rep->route = "chord";
  }
  if (rep) rep->q1_zero = v;
  return rep;
}

std::optional<MinusOneRepresentation> direct_search(long long m) {
  std::vector<Rat> vals;
  for (long den : {1L, 2L, 3L, 6L}) {
    for (long num = -3; num <= 3; ++num) {
      Rat v{Int(num), Int(den)};
      bool dup = false;
      for (const auto& x : vals) dup = dup || x == v;
      if (!dup) vals.push_back(v);
    }
  }
  for (const auto& ua : vals) {
    for (const auto& ub : vals) {
      for (const auto& ca : vals) {
        for (const auto& cb : vals) {
          MinusOneRepresentation rep{QuadElem(m, ua, ub), QuadElem(m, ca, cb), std::nullopt, "search"};
          if (verified(rep)) return rep;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MinusOneRepresentation> represent_minus_one(long long m) {
  if (!decide_strong_field(m)) throw std::invalid_argument("represent_minus_one: Q(sqrt m) fails the criterion");
  auto rep = chain(m);
  if (!rep || !verified(*rep)) rep = direct_search(m);
  if (rep && !verified(*rep)) throw InternalInconsistency("represent_minus_one: unverified result");
  return rep;
}

}  // namespace altlines
