#pragma once

// Independent reference computations used by the tests. Nothing here shares
// code paths with the library algorithms they check.

#include <complex>
#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

#include "altlines/poly.hpp"

namespace oracle {

using altlines::Rat;
using altlines::RatPoly;
using Cplx = std::complex<long double>;

inline std::vector<Cplx> to_complex(const RatPoly& p) {
  std::vector<Cplx> c;
  for (const auto& v : p.coeffs()) c.emplace_back(static_cast<long double>(v.value().get_d()), 0.0L);
  return c;
}

inline Cplx horner(const std::vector<Cplx>& c, Cplx x) {
  Cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// All complex roots by Durand-Kerner in long double.
inline std::vector<Cplx> roots(const RatPoly& p) {
  auto c = to_complex(p);
  const std::size_t n = c.size() - 1;
  Cplx lc = c.back();
  for (auto& v : c) v /= lc;
  std::vector<Cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(Cplx(0.4L, 0.9L), static_cast<long double>(i));
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Cplx den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      Cplx step = horner(c, z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

/// Res(f, g) = lc(f)^deg g * prod g(alpha_i) over roots alpha of f.
inline long double resultant_by_roots(const RatPoly& f, const RatPoly& g) {
  auto gc = to_complex(g);
  Cplx acc = std::pow(static_cast<long double>(f.lead().value().get_d()), g.degree());
  if (f.degree() > 0) {
    for (auto r : roots(f)) acc *= horner(gc, r);
  }
  return acc.real();
}

/// Discriminant straight from the Sylvester resultant Res(f, f').
inline Rat disc_by_resultant(const RatPoly& f) {
  const int n = f.degree();
  Rat r = altlines::resultant(f, altlines::derivative(f)) / f.lead();
  return (n * (n - 1) / 2) % 2 ? -r : r;
}

/// Sorted degrees of the irreducible factors of f mod p, by brute-force
/// search for monic factors of each degree (small p and degree only).
inline std::vector<int> brute_pattern(std::vector<long> f, long p) {
  auto mod = [p](long v) { return ((v % p) + p) % p; };
  for (auto& v : f) v = mod(v);
  while (!f.empty() && f.back() == 0) f.pop_back();
  std::vector<int> out;
  for (int d = 1; static_cast<int>(f.size()) - 1 >= d;) {
    bool found = false;
    std::vector<long> g(static_cast<std::size_t>(d) + 1, 0);
    g[d] = 1;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long code = 0; code < total && !found; ++code) {
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      // Long division of f by monic g.
      std::vector<long> r = f;
      std::vector<long> quo(f.size() - g.size() + 1, 0);
      for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        long q = r[i];
        quo[i - d] = q;
        for (int j = 0; j <= d; ++j) r[i - d + j] = mod(r[i - d + j] - q * g[j]);
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) {
        found = true;
        f = quo;
        out.push_back(d);
      }
    }
    if (!found) ++d;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline RatPoly random_poly(std::mt19937_64& rng, int max_deg, long height, bool nonzero_lead = true) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> cd(-height, height);
  std::uniform_int_distribution<long> den(1, 3);
  int d = dd(rng);
  std::vector<Rat> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(altlines::Int(cd(rng)), altlines::Int(den(rng)));
  if (nonzero_lead && c.back().is_zero()) c.back() = Rat(1);
  return RatPoly(std::move(c));
}

}  // namespace oracle
