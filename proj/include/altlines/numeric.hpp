#pragma once

// Arbitrary-precision real and complex floating point over MPFR. Results of
// binary operations take the larger operand precision.

#include <mpfr.h>

#include "altlines/rat.hpp"

namespace altlines {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long v, mpfr_prec_t prec);
  Real(const Rat& v, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// The exact binary value as a rational.
  Rat to_rat() const;

  static Real pow2(long e, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rat& r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

  mpfr_prec_t prec() const { return re.prec(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

Real abs(const Complex& z);
/// |re| + |im|, a cheap magnitude for pivoting.
Real l1(const Complex& z);

}  // namespace altlines
