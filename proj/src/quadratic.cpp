#include "osc/quadratic.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace osc {

DiagonalSeries::DiagonalSeries(std::int64_t offset, Polynomial coefficient,
                               std::map<std::int64_t, Rational> exceptions)
    : offset_(offset), poly_(std::move(coefficient)), exceptions_(std::move(exceptions)) {
  canonicalize();
}

Rational DiagonalSeries::value(std::int64_t a) const {
  if (a == 0 || a == offset_) return Rational(0);
  auto it = exceptions_.find(a);
  return it == exceptions_.end() ? poly_(a) : it->second;
}

bool DiagonalSeries::is_symmetric() const {
  if (poly_ != poly_.reflected(offset_)) return false;
  for (const auto& [a, v] : exceptions_) {
    if (value(offset_ - a) != v) return false;
  }
  return true;
}

void DiagonalSeries::canonicalize() {
  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    const std::int64_t a = it->first;
    if (a == 0 || a == offset_ || it->second == poly_(a)) {
      it = exceptions_.erase(it);
    } else {
      ++it;
    }
  }
}

DiagonalSeries& DiagonalSeries::operator+=(const DiagonalSeries& o) {
  if (o.offset_ != offset_) throw std::invalid_argument("DiagonalSeries: offsets differ");
  std::map<std::int64_t, Rational> merged;
  for (const auto& [a, v] : exceptions_) merged.emplace(a, value(a) + o.value(a));
  for (const auto& [a, v] : o.exceptions_) merged.emplace(a, value(a) + o.value(a));
  poly_ += o.poly_;
  exceptions_ = std::move(merged);
  canonicalize();
  return *this;
}

DiagonalSeries& DiagonalSeries::operator*=(const Rational& c) {
  poly_ *= c;
  for (auto& [a, v] : exceptions_) v *= c;
  canonicalize();
  return *this;
}

namespace {

// Diagonal of [X1, X2] for single diagonals X1 (offset d1) and X2 (offset d2).
// From the operator picture X[j+d, j] = -j v(-j):
//   v3(a) = (a - d2) v1(a - d2) v2(a) - (a - d1) v2(a - d1) v1(a).
DiagonalSeries bracket_diagonals(const DiagonalSeries& x, const DiagonalSeries& y) {
  const std::int64_t d1 = x.offset();
  const std::int64_t d2 = y.offset();
  const std::int64_t d = d1 + d2;
  const Polynomial a = Polynomial::variable();
  const Polynomial& p1 = x.coefficient();
  const Polynomial& p2 = y.coefficient();
  Polynomial p3 = (a - Polynomial(Rational(d2))) * p1.shifted(-d2) * p2 -
                  (a - Polynomial(Rational(d1))) * p2.shifted(-d1) * p1;

  std::set<std::int64_t> special{0, d};
  auto mark = [&special](const DiagonalSeries& s, std::int64_t shift) {
    special.insert(shift);
    special.insert(s.offset() + shift);
    for (const auto& [e, v] : s.exceptions()) special.insert(e + shift);
  };
  mark(x, d2);
  mark(x, 0);
  mark(y, 0);
  mark(y, d1);

  std::map<std::int64_t, Rational> exceptions;
  for (std::int64_t s : special) {
    if (s == 0 || s == d) continue;
    Rational v = Rational(s - d2) * x.value(s - d2) * y.value(s) - Rational(s - d1) * y.value(s - d1) * x.value(s);
    exceptions.emplace(s, v);
  }
  return DiagonalSeries(d, std::move(p3), std::move(exceptions));
}

}  // namespace

QuadraticElement QuadraticElement::unit() { return central_element(Rational(1)); }

QuadraticElement QuadraticElement::mode(std::int64_t m) {
  if (m == 0) throw std::invalid_argument("b(0) is the central element K, not a mode of H'");
  return linear_element(LaurentPoly::monomial(m));
}

QuadraticElement QuadraticElement::pair(std::int64_t a, std::int64_t b) {
  return normal_order_lift(LaurentPoly::monomial(a), LaurentPoly::monomial(b));
}

QuadraticElement QuadraticElement::central_element(const Rational& c) {
  QuadraticElement q;
  q.central_ = c;
  return q;
}

QuadraticElement QuadraticElement::linear_element(const LaurentPoly& f) {
  if (f.has_constant_term()) throw std::invalid_argument("linear part must lie in H' (no constant term)");
  QuadraticElement q;
  q.linear_ = f;
  return q;
}

QuadraticElement QuadraticElement::from_diagonal(const DiagonalSeries& d) {
  QuadraticElement q;
  q.add_diagonal(d);
  return q;
}

void QuadraticElement::add_diagonal(const DiagonalSeries& d) {
  if (d.is_zero()) return;
  auto it = diagonals_.find(d.offset());
  if (it == diagonals_.end()) {
    diagonals_.emplace(d.offset(), d);
    return;
  }
  it->second += d;
  if (it->second.is_zero()) diagonals_.erase(it);
}

Rational QuadraticElement::coefficient(std::int64_t a, std::int64_t b) const {
  auto it = diagonals_.find(a + b);
  return it == diagonals_.end() ? Rational(0) : it->second.value(a);
}

QuadraticElement QuadraticElement::without_central() const {
  QuadraticElement q = *this;
  q.central_ = Rational(0);
  return q;
}

QuadraticElement QuadraticElement::quadratic_part() const {
  QuadraticElement q;
  q.diagonals_ = diagonals_;
  return q;
}

QuadraticElement QuadraticElement::linear_part() const { return linear_element(linear_); }

HOperator QuadraticElement::quadratic_operator() const {
  HOperator op;
  for (const auto& [d, s] : diagonals_) {
    Band band;
    band.entries = -(Polynomial::variable() * s.coefficient().reflected(0));
    for (const auto& [a, v] : s.exceptions()) band.overrides[-a] = Rational(a) * v;
    band.overrides[-d] = Rational(0);
    op.add_band(d, band);
  }
  return op;
}

HOperator QuadraticElement::to_operator() const {
  return quadratic_operator() + HOperator::multiplication(linear_);
}

LaurentPoly QuadraticElement::act_on(const LaurentPoly& k) const {
  if (k.has_constant_term()) throw std::invalid_argument("act_on: argument must lie in H'");
  return quadratic_operator().apply(k);
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& o) {
  central_ += o.central_;
  linear_ += o.linear_;
  for (const auto& [d, s] : o.diagonals_) add_diagonal(s);
  return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& o) { return *this += -o; }

QuadraticElement& QuadraticElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    *this = QuadraticElement();
    return *this;
  }
  central_ *= c;
  linear_ *= c;
  for (auto& [d, s] : diagonals_) s *= c;
  return *this;
}

std::string QuadraticElement::debug_string() const {
  std::ostringstream os;
  os << "{K: " << central_ << "; lin: " << linear_.to_string();
  for (const auto& [d, s] : diagonals_) {
    os << "; diag " << d << ": " << s.coefficient().to_string();
    for (const auto& [a, v] : s.exceptions()) os << " [" << a << "->" << v << "]";
  }
  os << "}";
  return os.str();
}

QuadraticElement normal_order_lift(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.has_constant_term() || g.has_constant_term()) {
    throw std::invalid_argument("normal_order_lift: arguments must lie in H' (no constant term)");
  }
  QuadraticElement q;
  for (const auto& [a, x] : f.terms()) {
    for (const auto& [b, y] : g.terms()) {
      const Rational w = x * y;
      std::map<std::int64_t, Rational> exc;
      exc[a] += w;
      exc[b] += w;
      q += QuadraticElement::from_diagonal(DiagonalSeries(a + b, Polynomial(), std::move(exc)));
    }
  }
  return q;
}

QuadraticElement semidirect_bracket(const QuadraticElement& x, const QuadraticElement& y) {
  QuadraticElement out;
  for (const auto& [d1, s1] : x.quadratic()) {
    for (const auto& [d2, s2] : y.quadratic()) out += QuadraticElement::from_diagonal(bracket_diagonals(s1, s2));
  }
  LaurentPoly lin = x.act_on(y.linear()) - y.act_on(x.linear());
  out += QuadraticElement::linear_element(lin);
  return out;
}

QuadraticElement bracket(const QuadraticElement& x, const QuadraticElement& y) {
  QuadraticElement out = semidirect_bracket(x, y);
  Rational c = Rational(-1, 2) * psi(x.quadratic_operator(), y.quadratic_operator()) +
               symplectic_form(x.linear(), y.linear());
  out += QuadraticElement::central_element(c);
  return out;
}

Rational psi(const QuadraticElement& a, const QuadraticElement& b) { return psi(a.to_operator(), b.to_operator()); }

SpMatrix quad_to_endo(const QuadraticElement& a, std::int64_t window) {
  if (!a.is_purely_quadratic()) throw std::invalid_argument("quad_to_endo: central and linear parts must vanish");
  SpMatrix m(window);
  const HOperator op = a.quadratic_operator();
  for (const auto& [d, band] : op.bands()) {
    for (std::int64_t j = -window; j <= window; ++j) {
      if (j == 0) continue;
      m.set(j + d, j, band.at(j));
    }
  }
  return m;
}

}  // namespace osc
