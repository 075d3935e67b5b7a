#include "osc/oscillator.hpp"

#include <sstream>

namespace osc {

QuadraticElement tau(std::int64_t p) {
  return QuadraticElement::from_diagonal(DiagonalSeries(p, Polynomial(Rational(1))));
}

QuadraticElement tau_hat(std::int64_t p) { return tau(p); }

QuadraticElement sigma(std::int64_t p, const Rational& s) {
  QuadraticElement out = tau(p);
  if (p != 0) out += QuadraticElement::linear_element(LaurentPoly::monomial(p, s * Rational(p + 1)));
  return out;
}

QuadraticElement sigma_hat(std::int64_t p, const Rational& s) { return sigma(p, s); }

WittElement WittElement::L(std::int64_t p) {
  WittElement w;
  w.witt[p] = Rational(1);
  return w;
}

WittElement WittElement::b(std::int64_t q) {
  WittElement w;
  w.shift = LaurentPoly::monomial(q);
  return w;
}

WittElement& WittElement::operator+=(const WittElement& o) {
  for (const auto& [p, c] : o.witt) {
    Rational& slot = witt[p];
    slot += c;
    if (slot.is_zero()) witt.erase(p);
  }
  shift += o.shift;
  return *this;
}

WittElement& WittElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    *this = WittElement();
    return *this;
  }
  for (auto& [p, x] : witt) x *= c;
  shift *= c;
  return *this;
}

HOperator WittElement::derivation() const {
  HOperator op;
  for (const auto& [p, c] : witt) op += c * HOperator::witt_derivation(p);
  return op;
}

std::string WittElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : witt) {
    os << (first ? "" : " + ") << c << "*L(" << p << ")";
    first = false;
  }
  if (!shift.is_zero() || first) os << (first ? "" : " + ") << shift.to_string();
  return os.str();
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  WittElement out;
  for (const auto& [p, a] : x.witt) {
    for (const auto& [q, b] : y.witt) {
      if (p != q) out += Rational(p - q) * a * b * WittElement::L(p + q);
    }
  }
  // [D, g] = D(g) for the derivation part; the constant term is dropped (H').
  auto act = [](const WittElement& d, const LaurentPoly& g) {
    LaurentPoly image = d.derivation().apply(g);
    image.add_term(0, -image.coefficient(0));
    return image;
  };
  out.shift += act(x, y.shift);
  out.shift -= act(y, x.shift);
  return out;
}

QuadraticElement sigma(const WittElement& x, const Rational& s) {
  QuadraticElement out = QuadraticElement::linear_element(x.shift);
  for (const auto& [p, c] : x.witt) out += c * sigma(p, s);
  return out;
}

Rational psi(const WittElement& x, const WittElement& y) {
  return psi(x.derivation() + HOperator::multiplication(x.shift), y.derivation() + HOperator::multiplication(y.shift));
}

}  // namespace osc
