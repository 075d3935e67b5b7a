#pragma once

// Executable identity checks. Each check returns a Verdict that serializes
// to {check, parameters, pass, witnesses}.

#include "osc/cocycles.hpp"
#include "osc/fpoint.hpp"
#include "osc/oscillator.hpp"
#include "osc/quadratic.hpp"

#include "json.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace osc {

struct Verdict {
  explicit Verdict(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool pass = true;
  std::vector<std::string> witnesses;

  /// Records a failure; keeps at most `limit` witnesses.
  void fail(const std::string& witness, std::size_t limit = 10);
  nlohmann::ordered_json to_json() const;
};

/// A named bilinear antisymmetric form on sp(H') x| H' (and Witt x| H').
struct CocycleHandle {
  using Fn = std::function<Rational(const SemidirectElement&, const SemidirectElement&)>;

  std::string name;
  Fn eval;

  static CocycleHandle psi();
  static CocycleHandle alpha();
  static CocycleHandle beta();
  static CocycleHandle gamma();
  static CocycleHandle custom(std::string name, Fn fn);
  /// a alpha + b beta + c gamma.
  static CocycleHandle combination(const Rational& a, const Rational& b, const Rational& c);

  Rational operator()(const SemidirectElement& u, const SemidirectElement& v) const { return eval(u, v); }
  Rational operator()(const QuadraticElement& u, const QuadraticElement& v) const;
  /// eval(u, v) = -eval(v, u) on all pairs of the probe list.
  bool antisymmetric_on(const std::vector<QuadraticElement>& probes) const;
};

/// {1, b_m (0 < |m| <= mode_bound), :b_i b_j: (i <= j, 0 < |i|,|j| <= mode_bound),
///  T(p) (|p| <= tau_bound)}.
std::vector<QuadraticElement> generator_set(std::int64_t mode_bound = 4, std::int64_t tau_bound = 3);

/// c(x,[y,z]) + c(y,[z,x]) + c(z,[x,y]) with brackets in sp(H') x| H'.
Rational cocycle_defect(const CocycleHandle& c, const QuadraticElement& x, const QuadraticElement& y,
                        const QuadraticElement& z);

Verdict check_jacobi(const std::vector<QuadraticElement>& generators);
/// alpha and beta have zero defect on all triples; gamma has defect 2 on the
/// triple (:b1b1:, :b1b-2:, b-1) and sign(pi) * 2 on its permutations.
Verdict check_cocycle_defects(const std::vector<QuadraticElement>& generators);
/// alpha vanishes on pairs of sp_F generators; beta on pairs b_{-s}, b_{-s'}.
Verdict check_splitting(const FPoint& f, std::int64_t window);
/// -1/2 alpha(sigma u, sigma v) + beta(sigma u, sigma v) = psi(u, v) for
/// u, v in {L_p, b_q : |p|, |q| <= bound}.
Verdict check_pullback_sigma(std::int64_t bound, const Rational& s = default_sigma_coefficient());
/// Left minus right side of the pullback identity on one pair.
Rational pullback_defect(const WittElement& u, const WittElement& v, const Rational& s = default_sigma_coefficient());
/// [sigma_hat u, sigma_hat v] - sigma_hat [u, v] = psi(u, v) K on generators.
Verdict check_sigma_hat_homomorphism(std::int64_t bound, const Rational& s = default_sigma_coefficient());

/// The gauge probes (L2, L-2), (b1, b-1), (L1, b-1) on Witt x| H'.
std::array<std::pair<WittElement, WittElement>, 3> fit_probes();
/// (A, B, C) with c = A alpha + B beta + C gamma on the gauge probes.
/// Coefficients are meaningful only modulo coboundaries; the probe gauge is
/// fixed. Throws std::domain_error if the probe matrix is singular.
std::array<Rational, 3> fit_cocycle_coefficients(const CocycleHandle& c);

/// Trace alpha and gamma against (1/6) Res f dh'' and -1/2 Res(f dk' - h dg')
/// for f, h = -t^{p+1}, g, k = t^q, |p|, |q| <= window.
Verdict check_closed_forms(std::int64_t window);
Rational alpha_closed_form(const LaurentPoly& f, const LaurentPoly& h);
Rational gamma_closed_form(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h, const LaurentPoly& k);

/// [T(p), T(q)] = (p - q) T(p+q) + delta (p^3 - p)/12 K for |p|, |q| <= bound.
Verdict check_oscillator_virasoro(std::int64_t bound);
/// Central-forgetting projections and the action of tau on H'.
Verdict check_projections(std::int64_t bound);
/// -1/2 psi(tau(L_p), tau(L_-p)) = (p^3 - p)/12 for p = 1..bound.
Verdict check_virasoro_central_value(std::int64_t bound);

struct CentralScalars {
  Rational c;
  Rational lambda_fiber{2};
  Rational theta_fiber{-1};
  Rational a_side;  // c / 2
  Rational x_side;  // -c
  Rational mp_value;  // -1/2 psi(T(2), T(-2))
  bool consistent = false;

  nlohmann::ordered_json to_json() const;
};

CentralScalars central_scalars(const Rational& c);

/// Every check at the given probe bound.
std::vector<Verdict> verify_all(std::int64_t probe_bound);

}  // namespace osc
