#pragma once

// The cocycles alpha, beta, gamma on sp(H') x| H' and on Witt x| H':
//   alpha(X+f, Y+g) = psi(X, Y),  beta = <f, g>,  gamma = psi(X, g) - psi(Y, f).
// Here psi(X, g) pairs the endomorphism X with multiplication by g on H.

#include "osc/operator.hpp"
#include "osc/oscillator.hpp"
#include "osc/quadratic.hpp"

namespace osc {

/// An endomorphism part plus a shift in H'. Both Lie algebras embed here.
struct SemidirectElement {
  HOperator endo;
  LaurentPoly shift;

  /// Requires a zero central part.
  static SemidirectElement from(const QuadraticElement& q);
  static SemidirectElement from(const WittElement& w);
};

Rational alpha(const SemidirectElement& u, const SemidirectElement& v);
Rational beta(const SemidirectElement& u, const SemidirectElement& v);
Rational gamma(const SemidirectElement& u, const SemidirectElement& v);
/// psi(X + M_f, Y + M_g) = alpha + beta + gamma.
Rational psi_total(const SemidirectElement& u, const SemidirectElement& v);

Rational alpha(const QuadraticElement& u, const QuadraticElement& v);
Rational beta(const QuadraticElement& u, const QuadraticElement& v);
Rational gamma(const QuadraticElement& u, const QuadraticElement& v);

}  // namespace osc
