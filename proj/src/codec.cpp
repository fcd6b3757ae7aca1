#include "altlines/codec.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace altlines {

Json to_json(const Rat& x) { return x.str(); }

Json to_json(const RatPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

Json to_json(const QuadElem& x) { return Json::array({x.a().str(), x.b().str()}); }

Json to_json(const QuadPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string, got " + j.dump());
  return Rat::parse(j.get<std::string>());
}

RatPoly ratpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected coefficient array");
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return RatPoly(std::move(c));
}

QuadElem quad_from_json(const Json& j, long long m) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [a, b] pair");
  return QuadElem(m, rat_from_json(j[0]), rat_from_json(j[1]));
}

QuadPoly quadpoly_from_json(const Json& j, long long m) {
  if (!j.is_array()) throw std::invalid_argument("expected coefficient array");
  std::vector<QuadElem> c;
  for (const auto& v : j) c.push_back(quad_from_json(v, m));
  return QuadPoly(std::move(c));
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : var_(var) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  RatPoly run() {
    if (s_.empty()) fail("empty polynomial");
    std::map<int, Rat> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      Rat sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Rat(-1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, deg] = term();
      terms[deg] += sign * coeff;
    }
    std::vector<Rat> c(terms.empty() ? 0 : static_cast<std::size_t>(terms.rbegin()->first) + 1);
    for (auto& [d, v] : terms) c[static_cast<std::size_t>(d)] = v;
    return RatPoly(std::move(c));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Rat number() {
    Int num(digits(), 10);
    Int den = 1;
    if (peek() == '/') {
      ++pos_;
      den = Int(digits(), 10);
      if (den == 0) fail("zero denominator");
    }
    return Rat(num, den);
  }

  std::pair<Rat, int> term() {
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != var_) fail("expected variable after '*'");
      }
    }
    if (peek() != var_) {
      if (!have_coeff) fail("expected coefficient or variable");
      return {coeff, 0};
    }
    ++pos_;
    int deg = 1;
    if (peek() == '^') {
      ++pos_;
      std::string d = digits();
      if (d.size() > 4) fail("exponent too large");
      deg = std::stoi(d);
    }
    return {coeff, deg};
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

RatPoly parse_poly(std::string_view text, char var) { return PolyParser(text, var).run(); }

}  // namespace altlines
