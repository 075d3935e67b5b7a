#include "osc/operator.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace osc {

Rational Band::at(std::int64_t column) const {
  auto it = overrides.find(column);
  return it == overrides.end() ? entries(column) : it->second;
}

bool Band::is_zero() const { return entries.is_zero() && overrides.empty(); }

void Band::canonicalize() {
  for (auto it = overrides.begin(); it != overrides.end();) {
    if (it->second == entries(it->first)) {
      it = overrides.erase(it);
    } else {
      ++it;
    }
  }
}

HOperator HOperator::multiplication(const LaurentPoly& f) {
  HOperator op;
  for (const auto& [n, c] : f.terms()) op.add_band(n, Band{Polynomial(c), {}});
  return op;
}

HOperator HOperator::witt_derivation(std::int64_t p) {
  HOperator op;
  op.add_band(p, Band{-Polynomial::variable(), {}});
  return op;
}

void HOperator::add_band(std::int64_t offset, const Band& band) {
  auto it = bands_.find(offset);
  if (it == bands_.end()) {
    Band b = band;
    b.canonicalize();
    if (!b.is_zero()) bands_.emplace(offset, std::move(b));
    return;
  }
  Band& cur = it->second;
  std::set<std::int64_t> keys;
  for (const auto& [j, v] : cur.overrides) keys.insert(j);
  for (const auto& [j, v] : band.overrides) keys.insert(j);
  std::map<std::int64_t, Rational> merged;
  for (auto j : keys) merged.emplace(j, cur.at(j) + band.at(j));
  cur.entries += band.entries;
  cur.overrides = std::move(merged);
  cur.canonicalize();
  if (cur.is_zero()) bands_.erase(it);
}

Rational HOperator::entry(std::int64_t row, std::int64_t column) const {
  auto it = bands_.find(row - column);
  return it == bands_.end() ? Rational(0) : it->second.at(column);
}

LaurentPoly HOperator::apply(const LaurentPoly& f) const {
  LaurentPoly out;
  for (const auto& [j, c] : f.terms()) {
    for (const auto& [d, band] : bands_) out.add_term(j + d, c * band.at(j));
  }
  return out;
}

std::int64_t HOperator::bandwidth() const {
  std::int64_t w = 0;
  for (const auto& [d, band] : bands_) w = std::max(w, std::abs(d));
  return w;
}

HOperator& HOperator::operator+=(const HOperator& o) {
  for (const auto& [d, band] : o.bands_) add_band(d, band);
  return *this;
}

HOperator& HOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    bands_.clear();
    return *this;
  }
  for (auto& [d, band] : bands_) {
    band.entries *= c;
    for (auto& [j, v] : band.overrides) v *= c;
  }
  return *this;
}

Rational psi(const HOperator& a, const HOperator& b) {
  // Only bands with opposite offsets give diagonal entries of the composite.
  // Tr(pi+ A pi- B pi+): start at t^i (i >= 0), B lands on t^{i+dB} < 0, A returns to t^i.
  Rational total(0);
  for (const auto& [da, band_a] : a.bands()) {
    auto it = b.bands().find(-da);
    if (it == b.bands().end()) continue;
    const std::int64_t db = -da;
    const Band& band_b = it->second;
    for (std::int64_t i = 0; i + db < 0; ++i) total += band_a.at(i + db) * band_b.at(i);
    for (std::int64_t i = 0; i + da < 0; ++i) total -= band_b.at(i + da) * band_a.at(i);
  }
  return total;
}

Rational SpMatrix::at(std::int64_t row, std::int64_t column) const {
  auto it = entries_.find({row, column});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SpMatrix::set(std::int64_t row, std::int64_t column, const Rational& value) {
  if (!in_window(row) || !in_window(column)) return;
  if (value.is_zero()) {
    entries_.erase({row, column});
  } else {
    entries_[{row, column}] = value;
  }
}

std::int64_t SpMatrix::bandwidth() const {
  std::int64_t w = 0;
  for (const auto& [rc, v] : entries_) w = std::max(w, std::abs(rc.first - rc.second));
  return w;
}

SpMatrix commutator(const SpMatrix& a, const SpMatrix& b) {
  SpMatrix out(std::min(a.window_, b.window_));
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> acc;
  auto accumulate = [&acc](const SpMatrix& x, const SpMatrix& y, const Rational& sign) {
    // (x y)[r, c] = sum_k x[r, k] y[k, c]
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, Rational>>> x_by_col;
    for (const auto& [rc, v] : x.entries_) x_by_col[rc.second].emplace_back(rc.first, v);
    for (const auto& [kc, yv] : y.entries_) {
      auto it = x_by_col.find(kc.first);
      if (it == x_by_col.end()) continue;
      for (const auto& [r, xv] : it->second) acc[{r, kc.second}] += sign * xv * yv;
    }
  };
  accumulate(a, b, Rational(1));
  accumulate(b, a, Rational(-1));
  for (const auto& [rc, v] : acc) out.set(rc.first, rc.second, v);
  return out;
}

SpMatrix SpMatrix::restricted(std::int64_t inner) const {
  SpMatrix out(inner);
  for (const auto& [rc, v] : entries_) out.set(rc.first, rc.second, v);
  return out;
}

bool SpMatrix::preserves_form() const {
  // With X t^k = sum_r X[r,k] t^r and <t^r, t^s> = r delta_{r+s,0}:
  // <X t^a, t^b> + <t^a, X t^b> = -b X[-b, a] + a X[-a, b].
  const std::int64_t margin = bandwidth();
  const std::int64_t inner = window_ - margin;
  for (std::int64_t a = -inner; a <= inner; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -inner; b <= inner; ++b) {
      if (b == 0) continue;
      Rational lhs = Rational(-b) * at(-b, a) + Rational(a) * at(-a, b);
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

Rational psi(const SpMatrix& a, const SpMatrix& b) {
  // Row and column 0 are absent from the window, so i runs over 1..W.
  Rational total(0);
  const std::int64_t w = std::min(a.window(), b.window());
  for (std::int64_t i = 1; i <= w; ++i) {
    for (std::int64_t j = -w; j <= -1; ++j) {
      total += a.at(i, j) * b.at(j, i);
      total -= b.at(i, j) * a.at(j, i);
    }
  }
  return total;
}

}  // namespace osc
