#include "osc/expression.hpp"

#include "osc/oscillator.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace osc {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class ExpressionParser {
public:
  explicit ExpressionParser(std::string_view s) : s_(s) {}

  QuadraticElement run() {
    skip();
    if (at_end()) fail("empty expression");
    QuadraticElement out;
    Rational sign(1);
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? Rational(-1) : Rational(1);
    out += sign * term();
    while (true) {
      skip();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      out += (op == '-' ? Rational(-1) : Rational(1)) * term();
    }
    return out;
  }

private:
  QuadraticElement term() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = rational();
      skip();
      if (peek() != '*') return QuadraticElement::central_element(c);
      get();
      return c * atom();
    }
    return atom();
  }

  QuadraticElement atom() {
    skip();
    const std::size_t start = pos_;
    const char ch = get();
    switch (ch) {
      case 'K':
        return QuadraticElement::unit();
      case 'b': {
        const std::int64_t m = parenthesized();
        if (m == 0) fail_at(start, "b(0) is not a mode of H'; index 0 is the central element K");
        return QuadraticElement::mode(m);
      }
      case ':': {
        expect('b');
        const std::int64_t a = parenthesized();
        skip();
        expect('b');
        const std::int64_t b = parenthesized();
        skip();
        expect(':');
        if (a == 0 || b == 0) fail_at(start, "b(0) cannot appear in a quadratic term; index 0 is the central element K");
        return QuadraticElement::pair(a, b);
      }
      case 'T':
      case 'L':
        return tau_hat(parenthesized());
      case 'S':
        return sigma_hat(parenthesized());
      case '\0':
        fail_at(start, "unexpected end of input");
      default:
        fail_at(start, std::string("unexpected character '") + ch + "'");
    }
  }

  std::int64_t parenthesized() {
    skip();
    expect('(');
    skip();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') get();
    skip();
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (digits == pos_) fail("expected an integer");
    std::string text;
    for (std::size_t i = start; i < pos_; ++i) {
      if (!std::isspace(static_cast<unsigned char>(s_[i]))) text += s_[i];
    }
    std::int64_t value = 0;
    try {
      value = std::stoll(text);
    } catch (const std::out_of_range&) {
      fail_at(start, "integer out of range");
    }
    skip();
    expect(')');
    return value;
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (peek() == '/') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      fail_at(start, e.what());
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(pos, msg); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string pair_atom(std::int64_t a, std::int64_t b) {
  return ":b(" + std::to_string(a) + ")b(" + std::to_string(b) + "):";
}

}  // namespace

QuadraticElement parse_expression(std::string_view text) { return ExpressionParser(text).run(); }

std::string to_canonical_string(const QuadraticElement& q) {
  std::vector<std::pair<Rational, std::string>> terms;
  if (!q.central().is_zero()) terms.emplace_back(q.central(), "K");
  for (const auto& [m, c] : q.linear().terms()) terms.emplace_back(c, "b(" + std::to_string(m) + ")");
  for (const auto& [d, s] : q.quadratic()) {
    const Polynomial& p = s.coefficient();
    if (!p.is_constant()) {
      std::ostringstream os;
      os << "diag(" << d << "; " << p.to_string("a");
      for (const auto& [a, v] : s.exceptions()) os << "; a=" << a << ": " << v;
      os << ")";
      terms.emplace_back(Rational(1), os.str());
      continue;
    }
    const Rational base = p.coefficient(0);
    if (!base.is_zero()) terms.emplace_back(base, "T(" + std::to_string(d) + ")");
    for (const auto& [a, v] : s.exceptions()) {
      const std::int64_t b = d - a;
      if (a > b) continue;
      Rational c = v - base;
      if (a == b) c *= Rational(1, 2);
      terms.emplace_back(c, pair_atom(a, b));
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, atom] = terms[i];
    const bool negative = c.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -c : c;
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += atom;
  }
  return out;
}

}  // namespace osc
