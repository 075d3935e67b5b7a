#include "doctest.h"

#include "oracles.hpp"
#include "osc/cocycles.hpp"
#include "osc/fpoint.hpp"
#include "osc/oscillator.hpp"
#include "osc/quadratic.hpp"
#include "osc/verify.hpp"

using namespace osc;

namespace {

QuadraticElement b(std::int64_t m) { return QuadraticElement::mode(m); }
QuadraticElement bb(std::int64_t a, std::int64_t c) { return QuadraticElement::pair(a, c); }
LaurentPoly t(std::int64_t n, Rational c = Rational(1)) { return LaurentPoly::monomial(n, c); }

// Applying [A, B] and the commutator of actions to all basis vectors up to max_degree.
bool bracket_matches_fock(const QuadraticElement& a, const QuadraticElement& c, std::int64_t max_degree) {
  const QuadraticElement br = bracket(a, c);
  for (const auto& v : oracle::basis_up_to(max_degree)) {
    if (apply_quadratic(br, v) != oracle::commutator_action(a, c, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normal_order_lift examples") {
  const QuadraticElement x = normal_order_lift(t(1), t(-1));
  CHECK(x.coefficient(1, -1) == Rational(1));
  CHECK(x.coefficient(-1, 1) == Rational(1));
  CHECK(x == bb(-1, 1));
  const QuadraticElement sq = normal_order_lift(t(-2), t(-2));
  CHECK(sq.coefficient(-2, -2) == Rational(2));  // 1/2 * c(a,a) = 1 on the pair
  CHECK(normal_order_lift(t(1) + t(2), t(-1)) == bb(1, -1) + bb(2, -1));
  CHECK_THROWS_AS(normal_order_lift(LaurentPoly::constant(Rational(1)), t(1)), std::invalid_argument);
}

TEST_CASE("bracket examples") {
  CHECK(bracket(b(1), b(-1)) == QuadraticElement::unit());
  CHECK(bracket(bb(1, -2), b(-1)) == b(-2));
  CHECK(bracket(b(-1), bb(1, 1)) == Rational(-2) * b(1));
  const QuadraticElement expected = Rational(4) * tau_hat(0) + QuadraticElement::central_element(Rational(1, 2));
  CHECK(bracket(tau_hat(2), tau_hat(-2)) == expected);
  // Independent oracle: the Fock action on all basis vectors of degree <= 8.
  CHECK(bracket_matches_fock(tau_hat(2), tau_hat(-2), 8));
}

TEST_CASE("bracket agrees with the Fock commutator on mixed elements") {
  const std::vector<QuadraticElement> xs{
      b(3), b(-2), bb(1, 1), bb(-1, -1), bb(-3, 2), bb(2, 2), tau_hat(1), tau_hat(-1), tau_hat(0),
      Rational(1, 2) * bb(-1, 4) + b(2), tau_hat(3) - Rational(2) * bb(1, 2), sigma_hat(2), sigma_hat(-3)};
  for (const auto& x : xs) {
    for (const auto& y : xs) CHECK(bracket_matches_fock(x, y, 6));
  }
}

TEST_CASE("quad_to_endo examples") {
  const SpMatrix m1 = quad_to_endo(bb(-1, 1), 4);
  CHECK(m1.at(1, 1) == Rational(-1));
  const SpMatrix m0 = quad_to_endo(tau(0), 6);
  CHECK(m0.at(3, 3) == Rational(-3));
  // Signs follow from <t^a, t^b> = a delta: t^2 -> -2 t^-3, t^3 -> -3 t^-2.
  const SpMatrix m = quad_to_endo(bb(-2, -3), 6);
  CHECK(m.at(-3, 2) == Rational(-2));
  CHECK(m.at(-2, 3) == Rational(-3));
  for (std::int64_t r = -6; r <= 6; ++r) CHECK(m.at(r, 5).is_zero());
  CHECK_THROWS_AS(quad_to_endo(b(1), 4), std::invalid_argument);
}

TEST_CASE("quad_to_endo matches the Fock commutator with modes") {
  // [A, b_k] = A(t^k) as a linear element; check through the Fock action.
  const std::vector<QuadraticElement> xs{bb(-2, -3), bb(1, 4), bb(-1, 3), tau(2), tau(-1), tau(0)};
  for (const auto& x : xs) {
    const SpMatrix m = quad_to_endo(x, 10);
    for (std::int64_t k = -5; k <= 5; ++k) {
      if (k == 0) continue;
      LaurentPoly image;
      for (std::int64_t r = -10; r <= 10; ++r) image.add_term(r, m.at(r, k));
      const QuadraticElement lin = QuadraticElement::linear_element(image);
      for (const auto& v : oracle::basis_up_to(5)) {
        CHECK(apply_quadratic(lin, v) == oracle::commutator_action(x, b(k), v));
      }
    }
  }
}

TEST_CASE("psi examples") {
  CHECK(psi(b(1), b(-1)) == Rational(1));
  CHECK(psi(tau(2), tau(-2)) == Rational(-1));
  CHECK(psi(bb(2, 3), bb(1, 1)).is_zero());
  CHECK(psi(bb(2, 3), tau(0)).is_zero());
}

TEST_CASE("psi on banded operators agrees with the window-matrix trace") {
  const std::vector<QuadraticElement> xs{tau(2), tau(-2), tau(3), tau(-3), bb(-1, -2), bb(1, 2), bb(-3, 1), tau(1)};
  for (const auto& x : xs) {
    for (const auto& y : xs) CHECK(psi(x, y) == psi(quad_to_endo(x, 12), quad_to_endo(y, 12)));
  }
}

TEST_CASE("alpha, beta, gamma examples") {
  CHECK(gamma(bb(1, 1), b(-2)) == Rational(2));
  CHECK(beta(b(1), b(-1)) == Rational(1));
  CHECK(gamma(bb(1, -2), b(1)).is_zero());
  CHECK_THROWS_AS(alpha(QuadraticElement::unit(), b(1)), std::invalid_argument);
}

TEST_CASE("tau examples") {
  CHECK(tau(0).act_on(t(3)) == t(3, Rational(-3)));
  CHECK(commutator(quad_to_endo(tau(1), 6), quad_to_endo(tau(-1), 6)).restricted(4) ==
        quad_to_endo(Rational(2) * tau(0), 6).restricted(4));
  const QuadraticElement br = bracket(tau_hat(3), tau_hat(-3)) - Rational(6) * tau_hat(0);
  CHECK(br == QuadraticElement::central_element(Rational(2)));
  CHECK(tau(4) == tau_hat(4));
  // The exclusions a = 0 and a = p are structural.
  CHECK(tau(3).coefficient(0, 3).is_zero());
  CHECK(tau(3).coefficient(-1, 4) == Rational(1));
}

TEST_CASE("sigma examples") {
  CHECK(sigma(0).linear().is_zero());
  CHECK(sigma(WittElement::b(3)) == b(3));
  // The formula as printed uses the coefficient -1/2.
  CHECK(sigma(2, Rational(-1, 2)) == tau(2) - Rational(3, 2) * b(2));
  // Default coefficient +1/2 (see the pullback tests in test_verify).
  CHECK(sigma(2) == tau(2) + Rational(3, 2) * b(2));
  CHECK(sigma(-1).linear().is_zero());
  CHECK(sigma_hat(5) == sigma(5));
}

TEST_CASE("sp membership examples") {
  for (std::int64_t p = -5; p <= 5; ++p) CHECK(is_in_sp(tau(p), 12));
  CHECK(is_in_sp_plus(bb(2, 3), 8));
  CHECK_FALSE(is_in_sp_plus(bb(-2, -3), 8));
  const FPoint g1({1});
  CHECK(is_in_sp_F(bb(-2, 5), g1, 8));
  CHECK_FALSE(is_in_sp_F(tau(0), g1, 8));
  const FPoint g0;
  for (std::int64_t i = -4; i <= -1; ++i) {
    for (std::int64_t j = -4; j <= 4; ++j) {
      if (j != 0) CHECK(is_in_sp_F(bb(i, j), g0, 8));
    }
  }
}

TEST_CASE("property: window matrices preserve the form") {
  const std::vector<QuadraticElement> xs{tau(3), bb(-2, 5), bb(1, 1), Rational(2, 3) * bb(-4, -1) + tau(-2)};
  for (const auto& x : xs) CHECK(quad_to_endo(x, 10).preserves_form());
}

TEST_CASE("property: quadratic elements are symmetric along every diagonal") {
  const QuadraticElement x = bracket(tau(3), bb(-1, 4)) + bracket(tau(-2), tau(5)) + bb(2, 2);
  for (const auto& [d, s] : x.quadratic()) CHECK(s.is_symmetric());
}

TEST_CASE("property: Jacobi on a reduced generator set") {
  CHECK(check_jacobi(generator_set(2, 2)).pass);
}

TEST_CASE("property: cocycle antisymmetry") {
  const auto gens = generator_set(3, 2);
  std::vector<QuadraticElement> probes;
  for (const auto& g : gens) probes.push_back(g.without_central());
  for (const auto& h : {CocycleHandle::psi(), CocycleHandle::alpha(), CocycleHandle::beta(), CocycleHandle::gamma()}) {
    CHECK(h.antisymmetric_on(probes));
  }
}

TEST_CASE("property: quad_to_endo is a homomorphism on the window interior") {
  const std::vector<QuadraticElement> xs{tau(2), tau(-3), bb(-1, 2), bb(3, -1), bb(-2, -2), bb(1, 3)};
  const std::int64_t w = 12;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      const std::int64_t margin = quad_to_endo(x, w).bandwidth() + quad_to_endo(y, w).bandwidth();
      const SpMatrix lhs = quad_to_endo(semidirect_bracket(x, y), w).restricted(w - margin);
      const SpMatrix rhs = commutator(quad_to_endo(x, w), quad_to_endo(y, w)).restricted(w - margin);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("property: oscillator Virasoro relations") {
  CHECK(check_oscillator_virasoro(4).pass);
}

TEST_CASE("property: sigma_hat is a homomorphism from the psi-extension of Witt x| H'") {
  for (std::int64_t p = -4; p <= 4; ++p) {
    for (std::int64_t q = -4; q <= 4; ++q) {
      if (q == 0) continue;
      const QuadraticElement lhs = bracket(sigma_hat(p), b(q)) - sigma(bracket(WittElement::L(p), WittElement::b(q)));
      CHECK(lhs == QuadraticElement::central_element(psi(WittElement::L(p), WittElement::b(q))));
    }
  }
  CHECK(check_sigma_hat_homomorphism(4).pass);
}

TEST_CASE("property: central-forgetting projections") {
  CHECK(check_projections(5).pass);
}

TEST_CASE("property: closed-form cocycles on Witt x| H'") {
  CHECK(check_closed_forms(5).pass);
}

TEST_CASE("Witt derivation convention") {
  // L_p acts on H as -t^{p+1} d/dt and keeps t^{-p} -> p t^0.
  const HOperator d = HOperator::witt_derivation(2);
  CHECK(d.apply(t(-2)) == LaurentPoly::constant(Rational(2)));
  CHECK(tau(2).act_on(t(-2)).is_zero());
  CHECK(psi(WittElement::L(2), WittElement::L(-2)) == psi(tau(2), tau(-2)));
  for (std::int64_t q = -5; q <= 5; ++q) {
    if (q == 0) continue;
    CHECK(psi(WittElement::L(-q), WittElement::b(q)) == Rational(q * (q - 1), 2));
  }
}
