#include "osc/verify.hpp"

#include "osc/coinvariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace osc {

void Verdict::fail(const std::string& witness, std::size_t limit) {
  pass = false;
  if (witnesses.size() < limit) witnesses.push_back(witness);
}

nlohmann::ordered_json Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["parameters"] = parameters;
  j["pass"] = pass;
  j["witnesses"] = witnesses;
  return j;
}

CocycleHandle CocycleHandle::psi() { return {"psi", [](const auto& u, const auto& v) { return psi_total(u, v); }}; }
CocycleHandle CocycleHandle::alpha() { return {"alpha", [](const auto& u, const auto& v) { return osc::alpha(u, v); }}; }
CocycleHandle CocycleHandle::beta() { return {"beta", [](const auto& u, const auto& v) { return osc::beta(u, v); }}; }
CocycleHandle CocycleHandle::gamma() { return {"gamma", [](const auto& u, const auto& v) { return osc::gamma(u, v); }}; }

CocycleHandle CocycleHandle::custom(std::string name, Fn fn) { return {std::move(name), std::move(fn)}; }

CocycleHandle CocycleHandle::combination(const Rational& a, const Rational& b, const Rational& c) {
  return {"custom", [a, b, c](const SemidirectElement& u, const SemidirectElement& v) {
            return a * osc::alpha(u, v) + b * osc::beta(u, v) + c * osc::gamma(u, v);
          }};
}

Rational CocycleHandle::operator()(const QuadraticElement& u, const QuadraticElement& v) const {
  return eval(SemidirectElement::from(u), SemidirectElement::from(v));
}

bool CocycleHandle::antisymmetric_on(const std::vector<QuadraticElement>& probes) const {
  for (const auto& u : probes) {
    for (const auto& v : probes) {
      if ((*this)(u, v) != -(*this)(v, u)) return false;
    }
  }
  return true;
}

std::vector<QuadraticElement> generator_set(std::int64_t mode_bound, std::int64_t tau_bound) {
  std::vector<QuadraticElement> out{QuadraticElement::unit()};
  for (std::int64_t m = -mode_bound; m <= mode_bound; ++m) {
    if (m != 0) out.push_back(QuadraticElement::mode(m));
  }
  for (std::int64_t i = -mode_bound; i <= mode_bound; ++i) {
    for (std::int64_t j = i; j <= mode_bound; ++j) {
      if (i != 0 && j != 0) out.push_back(QuadraticElement::pair(i, j));
    }
  }
  for (std::int64_t p = -tau_bound; p <= tau_bound; ++p) out.push_back(tau_hat(p));
  return out;
}

Rational cocycle_defect(const CocycleHandle& c, const QuadraticElement& x, const QuadraticElement& y,
                        const QuadraticElement& z) {
  const QuadraticElement x0 = x.without_central();
  const QuadraticElement y0 = y.without_central();
  const QuadraticElement z0 = z.without_central();
  return c(x0, semidirect_bracket(y0, z0)) + c(y0, semidirect_bracket(z0, x0)) + c(z0, semidirect_bracket(x0, y0));
}

Verdict check_jacobi(const std::vector<QuadraticElement>& gens) {
  Verdict v{"jacobi"};
  const std::size_t n = gens.size();
  v.parameters["generators"] = n;
  std::vector<std::vector<QuadraticElement>> br(n, std::vector<QuadraticElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      br[i][j] = bracket(gens[i], gens[j]);
      br[j][i] = -br[i][j];
    }
  }
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++triples;
        QuadraticElement sum = bracket(gens[i], br[j][k]) + bracket(gens[j], br[k][i]) + bracket(gens[k], br[i][j]);
        if (!sum.is_zero()) {
          v.fail(gens[i].debug_string() + " | " + gens[j].debug_string() + " | " + gens[k].debug_string());
        }
      }
    }
  }
  v.parameters["triples"] = triples;
  return v;
}

Verdict check_cocycle_defects(const std::vector<QuadraticElement>& gens) {
  Verdict v{"cocycle-defects"};
  const std::size_t n = gens.size();
  v.parameters["generators"] = n;
  std::vector<SemidirectElement> se;
  std::vector<QuadraticElement> g0;
  for (const auto& g : gens) {
    g0.push_back(g.without_central());
    se.push_back(SemidirectElement::from(g0.back()));
  }
  std::vector<std::vector<SemidirectElement>> br(n, std::vector<SemidirectElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) br[i][j] = SemidirectElement::from(semidirect_bracket(g0[i], g0[j]));
  }
  for (const auto& c : {CocycleHandle::alpha(), CocycleHandle::beta()}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          Rational d = c(se[i], br[j][k]) + c(se[j], br[k][i]) + c(se[k], br[i][j]);
          if (!d.is_zero()) v.fail(c.name + " defect " + d.to_string() + " at " + std::to_string(i) + "," +
                                   std::to_string(j) + "," + std::to_string(k));
        }
      }
    }
  }
  const std::array<QuadraticElement, 3> triple{QuadraticElement::pair(1, 1), QuadraticElement::pair(1, -2),
                                               QuadraticElement::mode(-1)};
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b];
    }
    const Rational expected(inversions % 2 == 0 ? 2 : -2);
    Rational d = cocycle_defect(CocycleHandle::gamma(), triple[perm[0]], triple[perm[1]], triple[perm[2]]);
    if (d != expected) v.fail("gamma defect " + d.to_string() + " on permutation " + std::to_string(perm[0]) +
                              std::to_string(perm[1]) + std::to_string(perm[2]));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

Verdict check_splitting(const FPoint& f, std::int64_t window) {
  Verdict v{"splitting"};
  v.parameters["gaps"] = std::vector<std::int64_t>(f.gaps().begin(), f.gaps().end());
  v.parameters["W"] = window;
  const auto gens = sp_f_generators(f, window);
  std::vector<HOperator> ops;
  for (const auto& g : gens) {
    if (!is_in_sp_F(g, f, window)) v.fail("generator outside sp_F: " + g.debug_string());
    ops.push_back(g.quadratic_operator());
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      Rational a = psi(ops[i], ops[j]);
      if (!a.is_zero()) v.fail("alpha = " + a.to_string() + " on " + gens[i].debug_string() + ", " + gens[j].debug_string());
    }
  }
  const auto poles = f.pole_orders(window);
  for (auto s : poles) {
    for (auto r : poles) {
      Rational b = symplectic_form(LaurentPoly::monomial(-s), LaurentPoly::monomial(-r));
      if (!b.is_zero()) v.fail("beta nonzero on b(-" + std::to_string(s) + "), b(-" + std::to_string(r) + ")");
    }
  }
  v.parameters["pairs"] = ops.size() * (ops.size() ? ops.size() - 1 : 0) / 2;
  return v;
}

namespace {

std::vector<std::pair<std::string, WittElement>> witt_probes(std::int64_t bound) {
  std::vector<std::pair<std::string, WittElement>> out;
  for (std::int64_t p = -bound; p <= bound; ++p) out.emplace_back("L(" + std::to_string(p) + ")", WittElement::L(p));
  for (std::int64_t q = -bound; q <= bound; ++q) {
    if (q != 0) out.emplace_back("b(" + std::to_string(q) + ")", WittElement::b(q));
  }
  return out;
}

}  // namespace

Rational pullback_defect(const WittElement& u, const WittElement& v, const Rational& s) {
  const SemidirectElement su = SemidirectElement::from(sigma(u, s));
  const SemidirectElement sv = SemidirectElement::from(sigma(v, s));
  return Rational(-1, 2) * alpha(su, sv) + beta(su, sv) - psi(u, v);
}

Verdict check_pullback_sigma(std::int64_t bound, const Rational& s) {
  Verdict v{"pullback-sigma"};
  v.parameters["bound"] = bound;
  v.parameters["sigma_coefficient"] = s.to_string();
  const auto probes = witt_probes(bound);
  for (const auto& [nu, u] : probes) {
    for (const auto& [nv, w] : probes) {
      Rational d = pullback_defect(u, w, s);
      if (!d.is_zero()) v.fail("(" + nu + ", " + nv + "): defect " + d.to_string());
    }
  }
  v.parameters["pairs"] = probes.size() * probes.size();
  return v;
}

Verdict check_sigma_hat_homomorphism(std::int64_t bound, const Rational& s) {
  Verdict v{"sigma-hat-homomorphism"};
  v.parameters["bound"] = bound;
  v.parameters["sigma_coefficient"] = s.to_string();
  const auto probes = witt_probes(bound);
  for (const auto& [nu, u] : probes) {
    for (const auto& [nw, w] : probes) {
      QuadraticElement lhs = bracket(sigma(u, s), sigma(w, s)) - sigma(bracket(u, w), s);
      QuadraticElement rhs = QuadraticElement::central_element(psi(u, w));
      if (lhs != rhs) v.fail("(" + nu + ", " + nw + "): " + (lhs - rhs).debug_string());
    }
  }
  return v;
}

std::array<std::pair<WittElement, WittElement>, 3> fit_probes() {
  return {{{WittElement::L(2), WittElement::L(-2)},
           {WittElement::b(1), WittElement::b(-1)},
           {WittElement::L(1), WittElement::b(-1)}}};
}

std::array<Rational, 3> fit_cocycle_coefficients(const CocycleHandle& c) {
  // Rows: probes. Columns: alpha, beta, gamma.
  std::array<std::array<Rational, 4>, 3> m;
  const auto probes = fit_probes();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto u = SemidirectElement::from(probes[i].first);
    const auto w = SemidirectElement::from(probes[i].second);
    m[i] = {alpha(u, w), beta(u, w), gamma(u, w), c(u, w)};
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    while (piv < 3 && m[piv][col].is_zero()) ++piv;
    if (piv == 3) throw std::domain_error("singular probe matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return {m[0][3], m[1][3], m[2][3]};
}

Rational alpha_closed_form(const LaurentPoly& f, const LaurentPoly& h) {
  return Rational(1, 6) * residue(f * derivative(derivative(derivative(h))));
}

Rational gamma_closed_form(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& h, const LaurentPoly& k) {
  return Rational(-1, 2) * residue(f * derivative(derivative(k)) - h * derivative(derivative(g)));
}

Verdict check_closed_forms(std::int64_t window) {
  Verdict v{"closed-forms"};
  v.parameters["window"] = window;
  std::size_t pairs = 0;
  for (std::int64_t p1 = -window; p1 <= window; ++p1) {
    for (std::int64_t q1 = -window; q1 <= window; ++q1) {
      if (q1 == 0) continue;
      const WittElement u = WittElement::L(p1) + WittElement::b(q1);
      const auto su = SemidirectElement::from(u);
      const LaurentPoly f = LaurentPoly::monomial(p1 + 1, Rational(-1));
      const LaurentPoly g = LaurentPoly::monomial(q1);
      for (std::int64_t p2 = -window; p2 <= window; ++p2) {
        for (std::int64_t q2 = -window; q2 <= window; ++q2) {
          if (q2 == 0) continue;
          ++pairs;
          const WittElement w = WittElement::L(p2) + WittElement::b(q2);
          const auto sw = SemidirectElement::from(w);
          const LaurentPoly h = LaurentPoly::monomial(p2 + 1, Rational(-1));
          const LaurentPoly k = LaurentPoly::monomial(q2);
          std::string tag = "(L(" + std::to_string(p1) + ")+b(" + std::to_string(q1) + "), L(" + std::to_string(p2) +
                            ")+b(" + std::to_string(q2) + "))";
          if (alpha(su, sw) != alpha_closed_form(f, h)) v.fail("alpha " + tag);
          if (gamma(su, sw) != gamma_closed_form(f, g, h, k)) v.fail("gamma " + tag);
          if (beta(su, sw) != -residue(g * derivative(k))) v.fail("beta " + tag);
        }
      }
    }
  }
  v.parameters["pairs"] = pairs;
  return v;
}

Verdict check_oscillator_virasoro(std::int64_t bound) {
  Verdict v{"oscillator-virasoro"};
  v.parameters["bound"] = bound;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      QuadraticElement expected = Rational(p - q) * tau_hat(p + q);
      if (p + q == 0) expected += QuadraticElement::central_element(Rational(p * p * p - p, 12));
      if (bracket(tau_hat(p), tau_hat(q)) != expected) {
        v.fail("[T(" + std::to_string(p) + "), T(" + std::to_string(q) + ")]");
      }
    }
  }
  return v;
}

Verdict check_projections(std::int64_t bound) {
  Verdict v{"projections"};
  v.parameters["bound"] = bound;
  const std::int64_t window = 3 * bound + 2;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    const std::string tag = std::to_string(p);
    if (tau_hat(p).without_central() != tau(p)) v.fail("tau_hat(" + tag + ") does not project to tau");
    if (sigma_hat(p).without_central() != sigma(p)) v.fail("sigma_hat(" + tag + ") does not project to sigma");
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (bracket(tau_hat(p), tau_hat(q)).without_central() != semidirect_bracket(tau(p), tau(q))) {
        v.fail("projection is not a homomorphism at (" + tag + ", " + std::to_string(q) + ")");
      }
      if (bracket(sigma_hat(p), sigma_hat(q)).without_central() != semidirect_bracket(sigma(p), sigma(q))) {
        v.fail("sigma projection is not a homomorphism at (" + tag + ", " + std::to_string(q) + ")");
      }
    }
    // tau(L_p) acts on H' as -t^{p+1} d/dt followed by dropping t^0.
    const SpMatrix m = quad_to_endo(tau(p), window);
    for (std::int64_t j = -window; j <= window; ++j) {
      if (j == 0 || !m.in_window(j + p)) continue;
      const Rational expected = j + p == 0 ? Rational(0) : Rational(-j);
      if (m.at(j + p, j) != expected) v.fail("tau(" + tag + ") on t^" + std::to_string(j));
    }
  }
  return v;
}

Verdict check_virasoro_central_value(std::int64_t bound) {
  Verdict v{"virasoro-central-value"};
  v.parameters["bound"] = bound;
  for (std::int64_t p = 1; p <= bound; ++p) {
    Rational value = Rational(-1, 2) * psi(tau(p), tau(-p));
    if (value != Rational(p * p * p - p, 12)) v.fail("p = " + std::to_string(p) + ": " + value.to_string());
  }
  return v;
}

nlohmann::ordered_json CentralScalars::to_json() const {
  nlohmann::ordered_json j;
  j["c"] = c.to_string();
  j["mp_cocycle"] = "-1/2*alpha";
  j["u2_cocycle"] = "-1/2*alpha + beta";
  j["lambda_fiber_scalar"] = lambda_fiber.to_string();
  j["theta_fiber_scalar"] = theta_fiber.to_string();
  j["a_side_multiple"] = a_side.to_string();
  j["x_side_multiple"] = x_side.to_string();
  j["mp_cocycle_on_T2_Tm2"] = mp_value.to_string();
  j["consistent"] = consistent;
  return j;
}

CentralScalars central_scalars(const Rational& c) {
  CentralScalars s;
  s.c = c;
  s.a_side = c / s.lambda_fiber;
  s.x_side = c / s.theta_fiber;
  s.mp_value = Rational(-1, 2) * psi(tau(2), tau(-2));
  // The mp cocycle is the restriction of the Weyl-quadratic one to purely
  // quadratic elements, where beta vanishes.
  const Rational u2_value = Rational(-1, 2) * alpha(tau(2), tau(-2)) + beta(tau(2), tau(-2));
  s.consistent = s.a_side == c * Rational(1, 2) && s.x_side == -c && s.mp_value == Rational(1, 2) && u2_value == s.mp_value;
  return s;
}

std::vector<Verdict> verify_all(std::int64_t probe_bound) {
  if (probe_bound < 1) throw std::invalid_argument("probe bound must be positive");
  std::vector<Verdict> out;
  const auto gens = generator_set(probe_bound, std::max<std::int64_t>(probe_bound - 1, 1));
  out.push_back(check_jacobi(gens));
  out.push_back(check_cocycle_defects(gens));
  out.push_back(check_virasoro_central_value(2 * probe_bound));
  out.push_back(check_oscillator_virasoro(probe_bound));
  out.push_back(check_closed_forms(probe_bound));
  out.push_back(check_pullback_sigma(probe_bound));
  out.push_back(check_sigma_hat_homomorphism(probe_bound));
  out.push_back(check_projections(probe_bound));
  for (const auto& gaps : std::vector<std::set<std::int64_t>>{{}, {1}, {1, 2}, {1, 3}}) {
    out.push_back(check_splitting(FPoint(gaps), 2 * probe_bound));
  }
  Verdict fit{"fit-psi"};
  const auto abc = fit_cocycle_coefficients(CocycleHandle::psi());
  fit.parameters["gauge"] = "(L(2),L(-2)), (b(1),b(-1)), (L(1),b(-1))";
  fit.parameters["coefficients"] = {abc[0].to_string(), abc[1].to_string(), abc[2].to_string()};
  if (abc[0] != Rational(1) || abc[1] != Rational(1) || abc[2] != Rational(1)) fit.fail("coefficients differ from (1,1,1)");
  out.push_back(fit);
  return out;
}

}  // namespace osc
