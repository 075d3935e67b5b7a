#include "osc/rational.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace osc {

namespace {

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  // mpz_class has no int64 constructor on every platform; go through strings
  // only for the values long cannot hold.
  if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX)) {
    z = static_cast<long>(v);
  } else {
    z = std::to_string(v);
  }
  return z;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("Rational: empty literal");
  }
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("Rational: malformed literal '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  return Rational(mpq_class(mpz_class(num), d));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) {
    throw std::domain_error("Rational: not an integer: " + to_string());
  }
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) {
    throw std::overflow_error("Rational: integer out of range");
  }
  return n.get_si();
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(std::int64_t k) const {
  if (k < 0) {
    if (is_zero()) {
      throw std::domain_error("Rational: zero to a negative power");
    }
    return Rational(1) / pow(-k);
  }
  Rational result(1);
  Rational base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace osc
