#pragma once

// A point F inside Z = H_-: the closed span of t^{-s} over the pole orders
// s in S = positives \ gaps. The genus is the number of gaps.

#include "osc/laurent.hpp"
#include "osc/operator.hpp"
#include "osc/quadratic.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace osc {

class FPoint {
public:
  /// Gaps must be positive integers.
  explicit FPoint(std::set<std::int64_t> gaps = {});

  const std::set<std::int64_t>& gaps() const { return gaps_; }
  std::int64_t genus() const { return static_cast<std::int64_t>(gaps_.size()); }
  bool allows(std::int64_t s) const { return s > 0 && gaps_.count(s) == 0; }
  /// Elements of S in [1, bound].
  std::vector<std::int64_t> pole_orders(std::int64_t bound) const;

  /// t^n lies in F.
  bool contains_monomial(std::int64_t n) const { return n < 0 && allows(-n); }
  /// Every term of f lies in F.
  bool contains(const LaurentPoly& f) const;

  std::string to_string() const;

private:
  std::set<std::int64_t> gaps_;
};

/// F-perp inside the window span: t^{-m} for m = 1..W and t^m for gaps m <= W.
std::vector<LaurentPoly> fperp_basis(const FPoint& f, std::int64_t window);

/// <Xa, b> + <a, Xb> = 0 on all window basis pairs.
bool is_in_sp(const QuadraticElement& a, std::int64_t window);
/// Additionally X(H'_+) is inside H'_+ on the window.
bool is_in_sp_plus(const QuadraticElement& a, std::int64_t window);
/// X(F-perp) is inside F on the window.
bool is_in_sp_F(const QuadraticElement& a, const FPoint& f, std::int64_t window);

}  // namespace osc
