#pragma once

// Elements a + b*sqrt(m) of a quadratic field Q(sqrt m).
//
// The field parameter travels with the value. An element built from a plain
// rational carries m = 0 ("untagged"); it combines with any field. Mixing two
// different nonzero m is an error.

#include <optional>
#include <ostream>
#include <string>

#include "altlines/rat.hpp"

namespace altlines {

class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadElem(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long long m, Rat a, Rat b);

  /// sqrt(m) itself.
  static QuadElem root(long long m) { return QuadElem(m, Rat(0), Rat(1)); }

  long long m() const { return m_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadElem conj() const { return QuadElem(m_, a_, -b_, Tagged{}); }
  Rat norm() const { return a_ * a_ - Rat(m_) * b_ * b_; }
  QuadElem inverse() const;
  QuadElem with_field(long long m) const;

  std::string str() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator-(const QuadElem& x) { return QuadElem(x.m_, -x.a_, -x.b_, Tagged{}); }

  /// Componentwise equality; untagged rationals compare equal to tagged ones.
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.str(); }

 private:
  struct Tagged {};
  QuadElem(long long m, Rat a, Rat b, Tagged) : m_(m), a_(std::move(a)), b_(std::move(b)) {}
  long long merged_field(const QuadElem& o) const;

  long long m_ = 0;
  Rat a_;
  Rat b_;
};

/// Square root inside Q(sqrt m), normalized so the first nonzero of (a, b) is
/// positive. Empty when x is not a square in the field.
std::optional<QuadElem> quad_sqrt(const QuadElem& x, long long m);

/// Validates a field parameter: square-free and not 0 or 1.
void check_field_parameter(long long m);

}  // namespace altlines
