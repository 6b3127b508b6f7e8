#include "fpcheck/gallery.hpp"

#include <cmath>

namespace fpcheck {

namespace {

MetricSpace two_point_space() {
  return MetricSpace::finite({"-1", "1"}, {{0.0, 2.0}, {2.0, 0.0}});
}

MetricSpace default_line() { return MetricSpace::real_line(-10.0, 10.0); }

Scenario make_flip() {
  Scenario s;
  s.name = "flip";
  s.description =
      "Two-point space {-1,1} with the sign flip; satisfies the linear-bracket "
      "condition at any one fixed eps yet has no fixed point. eps=0.5 and the "
      "matching lambda are representative defaults.";
  s.space = two_point_space();
  s.map = SelfMap::negate();
  s.spec.family = ConditionFamily::BerindeLinear;
  s.spec.quantifier = Quantifier::FixedEps;
  s.spec.fixed_eps = 0.5;
  s.spec.pata.lambda_cap = *flip_lambda(0.5, 1.0, Gauge::power(1.0));
  s.spec.pata.alpha = 1.0;
  s.spec.pata.beta = 0.0;
  s.spec.pata.gauge = Gauge::power(1.0);
  s.spec.base = Point::finite(1);
  s.iteration.x0 = Point::finite(1);
  s.expected.condition_holds = true;
  s.expected.fixed_point = false;
  return s;
}

Scenario make_banach() {
  Scenario s;
  s.name = "banach";
  s.description =
      "Affine contraction x -> 0.5x + 1 under the embedded linear-bracket "
      "condition with Lambda = 1/(4(1-lambda)); slope 0.5, box [-10,10] and "
      "x0 = 0 are representative defaults.";
  s.space = default_line();
  s.map = SelfMap::affine(0.5, 1.0);
  s.spec = banach_embedding(0.5, ConditionFamily::PataOriginal, Point::real(0.0));
  s.iteration.x0 = Point::real(0.0);
  s.expected.condition_holds = true;
  s.expected.fixed_point = true;
  s.expected.audits_pass = true;
  return s;
}

Scenario make_translation() {
  Scenario s;
  s.name = "translation";
  s.description =
      "Unit translation on the line: nonexpansive (an isometry) but without a "
      "fixed point.";
  s.space = default_line();
  s.map = SelfMap::translation(1.0);
  s.spec.family = ConditionFamily::Nonexpansive;
  s.spec.base = Point::real(0.0);
  s.iteration.x0 = Point::real(0.0);
  s.expected.condition_holds = true;
  s.expected.fixed_point = false;
  return s;
}

Scenario make_constant() {
  Scenario s;
  s.name = "constant";
  s.description =
      "Constant map to 1: satisfies the linear-bracket condition with "
      "Lambda = 0 for every eps.";
  s.space = default_line();
  s.map = SelfMap::constant(Point::real(1.0));
  s.spec.family = ConditionFamily::BerindeLinear;
  s.spec.quantifier = Quantifier::ForallEps;
  s.spec.pata.lambda_cap = 0.0;
  s.spec.pata.alpha = 1.0;
  s.spec.pata.beta = 0.0;
  s.spec.pata.gauge = Gauge::power(1.0);
  s.spec.base = Point::real(0.0);
  s.iteration.x0 = Point::real(0.0);
  s.expected.condition_holds = true;
  s.expected.fixed_point = true;
  s.expected.audits_pass = true;
  return s;
}

Scenario make_identity_almost() {
  Scenario s;
  s.name = "identity-almost";
  s.description =
      "Identity map under the almost-contraction condition with delta = L = "
      "0.5; holds because delta + L >= 1, and every point is fixed.";
  s.space = default_line();
  s.map = SelfMap::affine(1.0, 0.0);
  s.spec.family = ConditionFamily::AlmostContraction;
  s.spec.almost_delta = 0.5;
  s.spec.almost_bound = 0.5;
  s.spec.base = Point::real(0.0);
  s.iteration.x0 = Point::real(0.0);
  s.expected.condition_holds = true;
  s.expected.fixed_point = true;
  s.expected.audits_pass = true;
  return s;
}

Scenario make_growth_bound() {
  Scenario s;
  s.name = "growth-bound";
  s.description =
      "Unit translation under the pure growth bound L*(1+||x||+||y||) with "
      "L = 1: the bound holds on the sampling box yet the orbit escapes.";
  s.space = default_line();
  s.map = SelfMap::translation(1.0);
  s.spec.family = ConditionFamily::GrowthBound;
  s.spec.growth_bound = 1.0;
  s.spec.base = Point::real(0.0);
  s.iteration.x0 = Point::real(0.0);
  s.expected.condition_holds = true;
  s.expected.fixed_point = false;
  return s;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "flip", "banach", "translation", "constant", "identity-almost", "growth-bound"};
  return names;
}

Scenario scenario(const std::string& name) {
  if (name == "flip") return make_flip();
  if (name == "banach") return make_banach();
  if (name == "translation") return make_translation();
  if (name == "constant") return make_constant();
  if (name == "identity-almost") return make_identity_almost();
  if (name == "growth-bound") return make_growth_bound();
  throw InvalidArgument("unknown scenario name: " + name);
}

FalsificationReport falsify_berinde_thm11() {
  FalsificationReport rep;
  rep.title = "thm11";
  Scenario s = make_banach();
  s.spec = banach_embedding(0.5, ConditionFamily::BerindeLinear, Point::real(0.0));

  // (1) The affine contraction verifies the condition with exponent beta = 0.
  VerificationReport ver = verify(s.spec, s.space, s.map, s.sampling.eps_grid,
                                  s.sampling.pairs, s.sampling.seed);
  rep.steps.push_back({"the affine contraction satisfies the condition with beta = 0 "
                       "for every eps",
                       "verify over eps grid and pair samples",
                       ver.holds,
                       {{"lambda_cap", s.spec.pata.lambda_cap},
                        {"beta", s.spec.pata.beta},
                        {"min_margin", ver.min_margin}}});

  // (2) Picard converges to the unique fixed point x* = 2.
  Orbit orbit = picard(s.space, s.map, s.iteration.x0, s.iteration.max_iter,
                       s.iteration.tol_conv);
  Orbit orbit2 = picard(s.space, s.map, Point::real(5.0), s.iteration.max_iter,
                        s.iteration.tol_conv);
  bool converged = orbit.verdict == OrbitVerdict::Converged &&
                   orbit2.verdict == OrbitVerdict::Converged &&
                   distance(s.space, orbit.limit, orbit2.limit) < 1e-6;
  rep.steps.push_back({"Picard iteration converges to a unique fixed point",
                       "two starts reach the same limit",
                       converged,
                       {{"x_star", orbit.limit.scalar()},
                        {"x_star_from_5", orbit2.limit.scalar()},
                        {"residual", orbit.fixed_point_residual}}});

  // (3) The claimed error cap Lambda*(1+4||x*||)*beta vanishes with beta = 0.
  double star_norm = norm(s.space, s.spec.base, orbit.limit);
  double cap = s.spec.pata.lambda_cap * (1.0 + 4.0 * star_norm) * s.spec.pata.beta;
  rep.steps.push_back({"the claimed constant cap is zero",
                       "Lambda*(1+4*||x*||)*beta == 0",
                       cap == 0.0,
                       {{"cap", cap}, {"x_star_norm", star_norm}}});

  // (4) Yet the first iterate sits a positive distance from x*.
  double measured = distance(s.space, orbit.limit, apply(s.space, s.map, s.iteration.x0));
  double omega1 = omega(OmegaVariant::Berinde, s.spec.pata.alpha, s.spec.pata.gauge, 1);
  double predicted = cap * omega1;
  rep.steps.push_back({"the first iterate violates the zero cap",
                       "d(x*, f(x0)) > cap * omega_1",
                       measured > predicted,
                       {{"measured", measured},
                        {"predicted", predicted},
                        {"omega_1", omega1}}});

  // (5) Rebasing keeps the condition satisfied, so the cap cannot be rescued
  // by moving the base point.
  ConditionSpec rebased = rebase(s.spec, Point::real(3.0), s.space);
  VerificationReport ver2 = verify(rebased, s.space, s.map, s.sampling.eps_grid,
                                   s.sampling.pairs, s.sampling.seed);
  rep.steps.push_back({"the condition survives a base change with "
                       "Lambda' = Lambda*(1+2*d(x0, x0'))",
                       "verify after rebase to x0' = 3",
                       ver2.holds,
                       {{"lambda_rebased", rebased.pata.lambda_cap},
                        {"min_margin", ver2.min_margin}}});

  rep.as_expected = true;
  for (const auto& step : rep.steps) rep.as_expected = rep.as_expected && step.passed;
  rep.conclusion = rep.as_expected
                       ? "contradiction: a non-constant map satisfies the hypothesis while "
                         "its orbit violates the zero error cap; the claimed bound admits "
                         "only constant maps"
                       : "no contradiction reproduced";
  return rep;
}

FalsificationReport falsify_thm11b(double eps) {
  FalsificationReport rep;
  rep.title = "thm11b";
  Scenario s = make_flip();
  s.spec.fixed_eps = eps;

  auto lam = flip_lambda(eps, s.spec.pata.alpha, s.spec.pata.gauge);
  if (!lam)
    throw InvalidArgument("gauge vanishes at this eps; no finite Lambda works");
  s.spec.pata.lambda_cap = *lam;

  // Lambda solves Lambda*eps^alpha*psi(eps) = eps, the smallest value for
  // which the flip map clears the inequality at this one eps.
  VerificationReport ver = verify(s.spec, s.space, s.map, s.sampling.eps_grid,
                                  s.sampling.pairs, s.sampling.seed);
  rep.steps.push_back({"the flip map satisfies the condition at the single fixed eps",
                       "verify over all 4 ordered pairs",
                       ver.holds,
                       {{"eps", eps},
                        {"lambda", *lam},
                        {"lambda_eps_alpha_psi", *lam * std::pow(eps, s.spec.pata.alpha) *
                                                     gauge_eval(s.spec.pata.gauge, eps)},
                        {"min_margin", ver.min_margin}}});

  Orbit orbit = picard(s.space, s.map, s.iteration.x0, 100, 1e-9);
  bool cycles = orbit.verdict == OrbitVerdict::Cycle && orbit.cycle_period == 2;
  rep.steps.push_back({"the flip map has no fixed point",
                       "Picard iteration enters a period-2 cycle",
                       cycles,
                       {{"cycle_period", static_cast<double>(orbit.cycle_period)},
                        {"steps_used",
                         static_cast<double>(orbit.points.size() - 1)}}});

  rep.as_expected = true;
  for (const auto& step : rep.steps) rep.as_expected = rep.as_expected && step.passed;
  rep.conclusion =
      rep.as_expected ? "hypothesis holds, conclusion fails" : "demonstration failed";
  return rep;
}

FalsificationReport insufficiency_demo(InsufficiencyCase which) {
  FalsificationReport rep;
  Scenario s;
  if (which == InsufficiencyCase::Eps0) {
    rep.title = "eps0";
    s = make_translation();
    rep.steps.push_back({"the unit translation is nonexpansive", "", false, {}});
  } else {
    rep.title = "eps1";
    s = make_growth_bound();
    rep.steps.push_back({"the unit translation satisfies the growth bound with L = 1 "
                         "on the sampling box",
                         "", false, {}});
  }

  VerificationReport ver = verify(s.spec, s.space, s.map, s.sampling.eps_grid,
                                  s.sampling.pairs, s.sampling.seed);
  rep.steps.back().check = "verify over pair samples";
  rep.steps.back().passed = ver.holds;
  rep.steps.back().numbers = {{"min_margin", ver.min_margin}};

  Orbit orbit = picard(s.space, s.map, s.iteration.x0, s.iteration.max_iter,
                       s.iteration.tol_conv);
  rep.steps.push_back({"the translation has no fixed point",
                       "Picard iteration diverges",
                       orbit.verdict == OrbitVerdict::Diverged,
                       {{"last_norm", norm(s.space, s.spec.base, orbit.points.back())},
                        {"steps_used",
                         static_cast<double>(orbit.points.size() - 1)}}});

  rep.as_expected = true;
  for (const auto& step : rep.steps) rep.as_expected = rep.as_expected && step.passed;
  rep.conclusion = rep.as_expected
                       ? "contradiction: the single-eps specialization holds yet no "
                         "fixed point exists"
                       : "demonstration failed";
  return rep;
}

}  // namespace fpcheck
