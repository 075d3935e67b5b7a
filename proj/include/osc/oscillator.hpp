#pragma once

// Witt x| H' and its oscillator images.
//
// tau(L_p) = 1/2 sum_i :b_{-i} b_{i+p}: is the diagonal series of offset p
// with coefficient identically 1. sigma adds a multiple of b_p; its
// coefficient is a parameter (see sigma_coefficient below).

#include "osc/laurent.hpp"
#include "osc/operator.hpp"
#include "osc/quadratic.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace osc {

/// Coefficient s in sigma(L_p) = tau(L_p) + s (p + 1) b_p. The default +1/2
/// makes sigma_hat a Lie homomorphism into the Weyl-quadratic algebra and
/// satisfies the pullback identity; -1/2 is kept for comparison.
inline Rational default_sigma_coefficient() { return Rational(1, 2); }

QuadraticElement tau(std::int64_t p);
/// Identical to tau as an element; the central term only appears in brackets.
QuadraticElement tau_hat(std::int64_t p);
QuadraticElement sigma(std::int64_t p, const Rational& s = default_sigma_coefficient());
QuadraticElement sigma_hat(std::int64_t p, const Rational& s = default_sigma_coefficient());

/// Finite element of Witt x| H': sum_p witt[p] L_p + shift, L_p = -t^{p+1} d/dt.
struct WittElement {
  std::map<std::int64_t, Rational> witt;
  LaurentPoly shift;

  static WittElement L(std::int64_t p);
  static WittElement b(std::int64_t q);

  bool is_zero() const { return witt.empty() && shift.is_zero(); }
  WittElement& operator+=(const WittElement& o);
  WittElement& operator*=(const Rational& c);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator*(const Rational& c, WittElement a) { return a *= c; }
  friend bool operator==(const WittElement&, const WittElement&) = default;

  /// Derivation part acting on H (t^{-p} -> p t^0 is kept).
  HOperator derivation() const;
  std::string to_string() const;
};

/// [L_p, L_q] = (p - q) L_{p+q}, [L_p, b_q] = -q b_{p+q} (zero when p + q = 0).
WittElement bracket(const WittElement& x, const WittElement& y);

/// Linear extension of sigma (and of sigma_hat, which adds nothing on generators).
QuadraticElement sigma(const WittElement& x, const Rational& s = default_sigma_coefficient());

/// psi on Witt x| H' with L_p acting on H as a derivation and H' by multiplication.
Rational psi(const WittElement& x, const WittElement& y);

}  // namespace osc
