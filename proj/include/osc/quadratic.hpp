#pragma once

// Elements of the completed degree-<=2 Weyl algebra, restricted to the
// subspace that is closed under brackets and holds every named element:
//
//   central * K  +  sum_m linear_m b_m  +  1/2 sum_{a,b} c(a,b) :b_a b_b:
//
// with c symmetric, supported on finitely many anti-diagonals a + b = d, and
// polynomial in a along each anti-diagonal up to finitely many exceptions.
// Index 0 never appears in the linear or quadratic part; K = b_0 is the only
// trace of it. Normal ordering puts positive (annihilation) indices right.

#include "osc/laurent.hpp"
#include "osc/operator.hpp"
#include "osc/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace osc {

/// c(a, d - a) along one anti-diagonal. Values at a = 0 and a = d (pairs that
/// would involve b_0) are identically zero.
class DiagonalSeries {
public:
  explicit DiagonalSeries(std::int64_t offset, Polynomial coefficient = {},
                          std::map<std::int64_t, Rational> exceptions = {});

  std::int64_t offset() const { return offset_; }
  const Polynomial& coefficient() const { return poly_; }
  const std::map<std::int64_t, Rational>& exceptions() const { return exceptions_; }

  /// c(a, offset - a).
  Rational value(std::int64_t a) const;
  bool is_zero() const { return poly_.is_zero() && exceptions_.empty(); }
  bool is_finite() const { return poly_.is_zero(); }
  /// c(a, d - a) == c(d - a, a) for all a.
  bool is_symmetric() const;

  DiagonalSeries& operator+=(const DiagonalSeries& o);
  DiagonalSeries& operator*=(const Rational& c);

  friend bool operator==(const DiagonalSeries&, const DiagonalSeries&) = default;

private:
  void canonicalize();

  std::int64_t offset_;
  Polynomial poly_;
  std::map<std::int64_t, Rational> exceptions_;
};

class QuadraticElement {
public:
  using Diagonals = std::map<std::int64_t, DiagonalSeries>;

  QuadraticElement() = default;

  /// The central element K (= b_0 = 1).
  static QuadraticElement unit();
  /// b_m, m != 0.
  static QuadraticElement mode(std::int64_t m);
  /// :b_a b_b:, a, b != 0.
  static QuadraticElement pair(std::int64_t a, std::int64_t b);
  static QuadraticElement central_element(const Rational& c);
  /// Linear element; rejects a constant term.
  static QuadraticElement linear_element(const LaurentPoly& f);
  static QuadraticElement from_diagonal(const DiagonalSeries& d);

  const Rational& central() const { return central_; }
  const LaurentPoly& linear() const { return linear_; }
  const Diagonals& quadratic() const { return diagonals_; }

  /// Symmetric coefficient c(a, b); for a != b the coefficient of :b_a b_b:
  /// is c(a, b), for a == b it is c(a, a) / 2.
  Rational coefficient(std::int64_t a, std::int64_t b) const;

  bool is_zero() const { return central_.is_zero() && linear_.is_zero() && diagonals_.empty(); }
  bool is_purely_quadratic() const { return central_.is_zero() && linear_.is_zero(); }
  QuadraticElement without_central() const;
  QuadraticElement quadratic_part() const;
  QuadraticElement linear_part() const;

  /// The adjoint action of the quadratic part on H': k -> [X, k].
  LaurentPoly act_on(const LaurentPoly& k) const;

  /// Operator on H: quadratic part (zero on t^0, never reaching t^0) plus
  /// multiplication by the linear part. The central part acts by the identity,
  /// which is invisible to psi and is dropped.
  HOperator to_operator() const;
  /// The quadratic part alone as an operator on H.
  HOperator quadratic_operator() const;

  QuadraticElement& operator+=(const QuadraticElement& o);
  QuadraticElement& operator-=(const QuadraticElement& o);
  QuadraticElement& operator*=(const Rational& c);
  friend QuadraticElement operator+(QuadraticElement a, const QuadraticElement& b) { return a += b; }
  friend QuadraticElement operator-(QuadraticElement a, const QuadraticElement& b) { return a -= b; }
  friend QuadraticElement operator*(const Rational& c, QuadraticElement a) { return a *= c; }
  QuadraticElement operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;

  /// Debug form; the canonical token syntax lives in expression.hpp.
  std::string debug_string() const;

private:
  void add_diagonal(const DiagonalSeries& d);

  Rational central_;
  LaurentPoly linear_;
  Diagonals diagonals_;
};

/// :fg:, the normal-ordered lift of f g in S^2(H'). f and g must have no
/// constant term (std::invalid_argument otherwise).
QuadraticElement normal_order_lift(const LaurentPoly& f, const LaurentPoly& g);

/// The commutator in the Weyl-quadratic algebra:
///   [X + f, Y + g] = [X, Y] + X(g) - Y(f) + (-1/2 psi(X, Y) + <f, g>) K.
QuadraticElement bracket(const QuadraticElement& a, const QuadraticElement& b);

/// Same bracket with the central part dropped (the bracket of sp(H') x| H').
QuadraticElement semidirect_bracket(const QuadraticElement& a, const QuadraticElement& b);

/// psi with both arguments acting on H as banded operators.
Rational psi(const QuadraticElement& a, const QuadraticElement& b);

/// Window matrix of the action k -> <f,k>g + <g,k>f of the quadratic part.
/// Requires zero central and linear parts.
SpMatrix quad_to_endo(const QuadraticElement& a, std::int64_t window);

}  // namespace osc
