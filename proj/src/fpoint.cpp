#include "osc/fpoint.hpp"

#include <sstream>
#include <stdexcept>

namespace osc {

FPoint::FPoint(std::set<std::int64_t> gaps) : gaps_(std::move(gaps)) {
  for (auto g : gaps_) {
    if (g <= 0) throw std::invalid_argument("gaps must be positive integers");
  }
}

std::vector<std::int64_t> FPoint::pole_orders(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 1; s <= bound; ++s) {
    if (allows(s)) out.push_back(s);
  }
  return out;
}

bool FPoint::contains(const LaurentPoly& f) const {
  for (const auto& [n, c] : f.terms()) {
    if (!contains_monomial(n)) return false;
  }
  return true;
}

std::string FPoint::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto g : gaps_) {
    os << (first ? "" : ",") << g;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<LaurentPoly> fperp_basis(const FPoint& f, std::int64_t window) {
  std::vector<LaurentPoly> out;
  for (std::int64_t m = 1; m <= window; ++m) out.push_back(LaurentPoly::monomial(-m));
  for (auto g : f.gaps()) {
    if (g <= window) out.push_back(LaurentPoly::monomial(g));
  }
  return out;
}

bool is_in_sp(const QuadraticElement& a, std::int64_t window) {
  const HOperator op = a.quadratic_operator();
  for (std::int64_t i = -window; i <= window; ++i) {
    if (i == 0) continue;
    for (std::int64_t j = -window; j <= window; ++j) {
      if (j == 0) continue;
      // <X t^i, t^j> + <t^i, X t^j> = -j X[-j, i] + i X[-i, j]
      if (!(Rational(-j) * op.entry(-j, i) + Rational(i) * op.entry(-i, j)).is_zero()) return false;
    }
  }
  return true;
}

bool is_in_sp_plus(const QuadraticElement& a, std::int64_t window) {
  if (!is_in_sp(a, window)) return false;
  const HOperator op = a.quadratic_operator();
  for (std::int64_t m = 1; m <= window; ++m) {
    const LaurentPoly image = op.apply(LaurentPoly::monomial(m));
    if (!image.is_zero() && image.min_exponent() <= 0) return false;
  }
  return true;
}

bool is_in_sp_F(const QuadraticElement& a, const FPoint& f, std::int64_t window) {
  const HOperator op = a.quadratic_operator();
  for (const auto& v : fperp_basis(f, window)) {
    if (!f.contains(op.apply(v))) return false;
  }
  return true;
}

}  // namespace osc
