#include "altlines/quad.hpp"

#include <stdexcept>

namespace altlines {

void check_field_parameter(long long m) {
  if (m == 0 || m == 1 || !is_squarefree(m)) {
    throw std::invalid_argument("quadratic field parameter must be square-free and not 0 or 1, got " +
                                std::to_string(m));
  }
}

QuadElem::QuadElem(long long m, Rat a, Rat b) : m_(m), a_(std::move(a)), b_(std::move(b)) {
  check_field_parameter(m);
}

long long QuadElem::merged_field(const QuadElem& o) const {
  if (m_ == 0) return o.m_;
  if (o.m_ == 0 || o.m_ == m_) return m_;
  throw std::invalid_argument("QuadElem: mismatched fields sqrt(" + std::to_string(m_) + ") and sqrt(" +
                              std::to_string(o.m_) + ")");
}

QuadElem QuadElem::with_field(long long m) const {
  if (m_ != 0 && m_ != m) throw std::invalid_argument("QuadElem: cannot retag element to another field");
  if (m_ == 0 && !b_.is_zero()) throw std::logic_error("QuadElem: untagged element with irrational part");
  return QuadElem(m, a_, b_);
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  m_ = merged_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  m_ = merged_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  long long m = merged_field(o);
  Rat a = a_ * o.a_ + Rat(m) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  m_ = m;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("QuadElem: inverse of zero");
  Rat n = norm();
  return QuadElem(m_, a_ / n, -b_ / n, Tagged{});
}

std::string QuadElem::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
  return s + b_.str() + "*sqrt(" + std::to_string(m_) + ")";
}

namespace {

QuadElem make(long long m, const Rat& a, const Rat& b) { return QuadElem(m, a, b); }

QuadElem normalized(long long m, Rat x, Rat y) {
  if (x.sign() < 0 || (x.is_zero() && y.sign() < 0)) {
    x = -x;
    y = -y;
  }
  return make(m, x, y);
}

}  // namespace

std::optional<QuadElem> quad_sqrt(const QuadElem& z, long long m) {
  check_field_parameter(m);
  if (z.m() != 0 && z.m() != m) throw std::invalid_argument("quad_sqrt: element from another field");
  const Rat& a = z.a();
  const Rat& b = z.b();
  if (z.is_zero()) return make(m, Rat(0), Rat(0));
  // (x + y sqrt m)^2 = x^2 + m y^2 + 2xy sqrt m.
  if (b.is_zero()) {
    if (auto x = rat_sqrt(a)) return normalized(m, *x, Rat(0));
    if (auto y = rat_sqrt(a / Rat(m))) return normalized(m, Rat(0), *y);
    return std::nullopt;
  }
  auto n = rat_sqrt(z.norm());
  if (!n) return std::nullopt;
  for (const Rat& x2 : {(a + *n) / Rat(2), (a - *n) / Rat(2)}) {
    if (x2.is_zero()) continue;
    if (auto x = rat_sqrt(x2)) {
      Rat y = b / (Rat(2) * *x);
      return normalized(m, *x, y);
    }
  }
  return std::nullopt;
}

}  // namespace altlines
