#include "osc/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace osc {

LaurentPoly LaurentPoly::monomial(std::int64_t n, Rational c) {
  LaurentPoly p;
  p.add_term(n, c);
  return p;
}

Rational LaurentPoly::coefficient(std::int64_t n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(std::int64_t n, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [m, x] : a.terms_) {
    for (const auto& [n, y] : b.terms_) out.add_term(m + n, x * y);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "t";
    if (n != 1) os << "^" << n;
  }
  return os.str();
}

namespace {

class LaurentParser {
public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    term(out, sign);
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      term(out, op == '-' ? -1 : 1);
    }
    return out;
  }

private:
  void term(LaurentPoly& out, int sign) {
    skip();
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
      } else {
        out.add_term(0, coeff * Rational(sign));
        return;
      }
    }
    if (peek() != 't') fail(have_coeff ? "expected 't' after '*'" : "expected coefficient or 't'");
    get();
    std::int64_t exponent = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      exponent = integer();
    }
    out.add_term(exponent, coeff * Rational(sign));
  }

  Rational rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (peek() == '/') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') get();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("LaurentPoly parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return LaurentParser(text).run(); }

Rational residue(const LaurentPoly& f) { return f.coefficient(-1); }

LaurentPoly derivative(const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [n, c] : f.terms()) out.add_term(n - 1, c * Rational(n));
  return out;
}

Rational symplectic_form(const LaurentPoly& f, const LaurentPoly& g) { return -residue(f * derivative(g)); }

}  // namespace osc
