#include "altlines/numeric.hpp"

#include <algorithm>
#include <utility>

namespace altlines {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.value().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Rat Real::to_rat() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rat(q);
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(1, prec);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

namespace {

template <class Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(std::max(a.prec(), b.prec()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <class Op>
Real unary(const Real& a, Op op) {
  Real r(a.prec());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
Real operator-(const Real& a) { return unary(a, mpfr_neg); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real l1(const Complex& z) { return abs(z.re) + abs(z.im); }

}  // namespace altlines
