#pragma once

// Banded linear operators on H = span{t^j : j in Z} and the trace cocycle
// psi(A, B) = Tr(pi+ A pi- B pi+ - pi+ B pi- A pi+).
//
// An HOperator is a finite set of bands. The band at offset d sends t^j to
// entry(j) * t^{j+d}; its entries are a polynomial in the column index j with
// finitely many overridden columns. This covers multiplication operators,
// vector fields -t^{p+1} d/dt, and every completed quadratic element.

#include "osc/laurent.hpp"
#include "osc/polynomial.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace osc {

struct Band {
  Polynomial entries;                          // as a function of the column j
  std::map<std::int64_t, Rational> overrides;  // column -> entry

  Rational at(std::int64_t column) const;
  bool is_zero() const;
  void canonicalize();
  friend bool operator==(const Band&, const Band&) = default;
};

class HOperator {
public:
  using Bands = std::map<std::int64_t, Band>;

  HOperator() = default;

  /// g -> f * g on all of H, including the constants.
  static HOperator multiplication(const LaurentPoly& f);
  /// The derivation -t^{p+1} d/dt on H; sends t^{-p} to p * t^0.
  static HOperator witt_derivation(std::int64_t p);

  void add_band(std::int64_t offset, const Band& band);

  const Bands& bands() const { return bands_; }
  /// Coefficient of t^row in the image of t^column.
  Rational entry(std::int64_t row, std::int64_t column) const;
  LaurentPoly apply(const LaurentPoly& f) const;
  /// Largest |offset| over nonzero bands, 0 for the zero operator.
  std::int64_t bandwidth() const;
  bool is_zero() const { return bands_.empty(); }

  HOperator& operator+=(const HOperator& o);
  HOperator& operator*=(const Rational& c);
  friend HOperator operator+(HOperator a, const HOperator& b) { return a += b; }
  friend HOperator operator*(const Rational& c, HOperator a) { return a *= c; }

  friend bool operator==(const HOperator&, const HOperator&) = default;

private:
  Bands bands_;
};

/// The trace cocycle. Finite: only columns 0..bandwidth contribute.
Rational psi(const HOperator& a, const HOperator& b);

/// A banded endomorphism of H' restricted to the window [-W, W] \ {0}.
class SpMatrix {
public:
  explicit SpMatrix(std::int64_t window) : window_(window) {}

  std::int64_t window() const { return window_; }
  bool in_window(std::int64_t index) const { return index != 0 && index >= -window_ && index <= window_; }

  Rational at(std::int64_t row, std::int64_t column) const;
  void set(std::int64_t row, std::int64_t column, const Rational& value);
  const std::map<std::pair<std::int64_t, std::int64_t>, Rational>& entries() const { return entries_; }
  std::int64_t bandwidth() const;

  /// Matrix commutator [A, B] = AB - BA computed inside the window.
  friend SpMatrix commutator(const SpMatrix& a, const SpMatrix& b);
  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

  /// Restriction to rows and columns with |index| <= inner.
  SpMatrix restricted(std::int64_t inner) const;

  /// <Xa, b> + <a, Xb> = 0 for all window basis pairs whose images stay
  /// inside the window (pairs within bandwidth of the edge are skipped).
  bool preserves_form() const;

private:
  std::int64_t window_;
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> entries_;
};

/// psi of two window matrices, extended by zero to H.
Rational psi(const SpMatrix& a, const SpMatrix& b);

}  // namespace osc
