#include "osc/cocycles.hpp"

#include <stdexcept>

namespace osc {

SemidirectElement SemidirectElement::from(const QuadraticElement& q) {
  if (!q.central().is_zero()) throw std::invalid_argument("cocycles are defined on elements with zero central part");
  return {q.quadratic_operator(), q.linear()};
}

SemidirectElement SemidirectElement::from(const WittElement& w) { return {w.derivation(), w.shift}; }

Rational alpha(const SemidirectElement& u, const SemidirectElement& v) { return psi(u.endo, v.endo); }

Rational beta(const SemidirectElement& u, const SemidirectElement& v) { return symplectic_form(u.shift, v.shift); }

Rational gamma(const SemidirectElement& u, const SemidirectElement& v) {
  return psi(u.endo, HOperator::multiplication(v.shift)) - psi(v.endo, HOperator::multiplication(u.shift));
}

Rational psi_total(const SemidirectElement& u, const SemidirectElement& v) {
  return psi(u.endo + HOperator::multiplication(u.shift), v.endo + HOperator::multiplication(v.shift));
}

Rational alpha(const QuadraticElement& u, const QuadraticElement& v) {
  return alpha(SemidirectElement::from(u), SemidirectElement::from(v));
}

Rational beta(const QuadraticElement& u, const QuadraticElement& v) {
  return beta(SemidirectElement::from(u), SemidirectElement::from(v));
}

Rational gamma(const QuadraticElement& u, const QuadraticElement& v) {
  return gamma(SemidirectElement::from(u), SemidirectElement::from(v));
}

}  // namespace osc
