#pragma once

// Univariate polynomials over the rationals, evaluated at integer points.
// Used as the coefficient function along one anti-diagonal of a completed
// quadratic element.

#include "osc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace osc {

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT: constants promote implicitly
  /// coefficients[k] multiplies x^k.
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The polynomial x.
  static Polynomial variable();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(std::int64_t x) const;
  Rational operator()(const Rational& x) const;

  /// x -> P(x + s).
  Polynomial shifted(std::int64_t s) const;
  /// x -> P(s - x).
  Polynomial reflected(std::int64_t s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(const std::string& var = "a") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace osc
