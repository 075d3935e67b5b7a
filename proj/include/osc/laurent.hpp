#pragma once

// Finite-support Laurent polynomials in t over the rationals, with the
// residue, the t-derivative and the symplectic form <f, g> = -Res f dg.

#include "osc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace osc {

class LaurentPoly {
public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  /// c * t^n.
  static LaurentPoly monomial(std::int64_t n, Rational c = Rational(1));
  static LaurentPoly constant(Rational c) { return monomial(0, std::move(c)); }

  /// Parses "3*t^-1 + 1/2*t^2", "t", "-t^3", "5". Throws std::invalid_argument.
  static LaurentPoly parse(std::string_view text);

  Rational coefficient(std::int64_t n) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_constant_term() const { return terms_.count(0) != 0; }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Adds c * t^n in place.
  void add_term(std::int64_t n, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

/// Coefficient of t^-1.
Rational residue(const LaurentPoly& f);

/// Term-by-term d/dt.
LaurentPoly derivative(const LaurentPoly& f);

/// <f, g> = -Res f dg. Satisfies <t^a, t^b> = a * delta_{a+b,0}.
Rational symplectic_form(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace osc
