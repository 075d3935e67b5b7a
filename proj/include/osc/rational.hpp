#pragma once

// Exact rational scalars. Thin value wrapper over GMP's mpq_class that keeps
// every value in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace osc {

class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  /// Parses "n", "-n" or "p/q" (q != 0). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  /// Requires is_integer() and a value that fits in 64 bits.
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }

  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// a^k for integer k; negative k requires a != 0.
  Rational pow(std::int64_t k) const;

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace osc
