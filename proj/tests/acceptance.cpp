// Acceptance suite: every criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fpcheck/runner.hpp"

using namespace fpcheck;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void criterion(int number, const char* title, const std::function<bool()>& body) {
  g_notes.clear();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title);
  if (!ok) {
    ++g_failures;
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
  }
}

bool expect(bool cond, const std::string& msg) {
  if (!cond) note(msg);
  return cond;
}

long double omega_oracle(OmegaVariant variant, double alpha, const Gauge& g, long n) {
  long double sum = 0.0L;
  for (long k = n; k >= 1; --k) sum += (long double)gauge_eval(g, alpha / k);
  long double ratio = (long double)alpha / n;
  long double pre = variant == OmegaVariant::Pata ? powl(ratio, (long double)alpha) : ratio;
  return pre * sum;
}

MetricSpace flip_space() {
  return MetricSpace::finite({"-1", "1"}, {{0.0, 2.0}, {2.0, 0.0}});
}

bool c1_omega_oracle() {
  bool ok = true;
  for (double alpha : {1.0, 1.5, 2.0})
    for (const Gauge& g : {Gauge::power(1.0), Gauge::power(2.0)})
      for (long n : {1L, 2L, 3L, 5L, 10L, 31L, 100L, 316L, 1000L, 3162L, 10000L})
        for (OmegaVariant v : {OmegaVariant::Pata, OmegaVariant::Berinde}) {
          double got = omega(v, alpha, g, n);
          long double want = omega_oracle(v, alpha, g, n);
          double tol = 1e-12 * std::max(1.0, std::abs((double)want));
          ok &= expect(std::abs(got - (double)want) <= tol,
                       "omega mismatch at alpha=" + std::to_string(alpha) +
                           " n=" + std::to_string(n));
        }
  Gauge g1 = Gauge::power(1.0);
  for (long n : {1L, 7L, 100L, 9999L})
    ok &= expect(omega(OmegaVariant::Pata, 1.0, g1, n) ==
                     omega(OmegaVariant::Berinde, 1.0, g1, n),
                 "variants differ at alpha=1, n=" + std::to_string(n));
  long double h = 0.0L;
  double prev = 2.0;
  for (long n = 1; n <= 10000; ++n) {
    h += 1.0L / n;
    if (n <= 200 || n % 100 == 0) {
      double got = omega(OmegaVariant::Berinde, 1.0, g1, n);
      ok &= expect(std::abs(got - (double)(h / n)) <= 1e-12 * (double)(h / n),
                   "omega != H_n/n at n=" + std::to_string(n));
      ok &= expect(got <= prev + 1e-15, "omega not nonincreasing at n=" + std::to_string(n));
      prev = got;
    }
  }
  double tail = omega(OmegaVariant::Berinde, 1.0, g1, 100000);
  ok &= expect(tail < 1.3e-4, "omega_1e5 = " + std::to_string(tail));
  return ok;
}

bool c2_banach_scenario() {
  bool ok = true;
  Scenario s = scenario("banach");
  Orbit o = picard(s.space, s.map, s.iteration.x0, 40, s.iteration.tol_conv);
  ok &= expect(o.verdict == OrbitVerdict::Converged, "orbit did not converge in 40 steps");
  ok &= expect(std::abs(o.points.back().scalar() - 2.0) < 1e-9, "limit not within 1e-9 of 2");

  for (ConditionFamily form :
       {ConditionFamily::BerindeLinear, ConditionFamily::PataOriginal}) {
    ConditionSpec spec = banach_embedding(0.5, form);
    VerificationReport rep = verify(spec, s.space, s.map, 1001, 2000, 42);
    ok &= expect(rep.holds, "embedded condition fails; min margin " +
                                std::to_string(rep.min_margin));
  }
  for (int i = 0; i < 10; ++i) {
    double lambda = i / 10.0;
    double cap = 1.0 / (4.0 * (1.0 - lambda));
    ok &= expect(scalar_inequality_check(lambda, cap),
                 "scalar inequality fails at lambda=" + std::to_string(lambda));
  }
  return ok;
}

bool c3_bound_audit() {
  bool ok = true;
  Scenario s = scenario("banach");
  Orbit o = picard(s.space, s.map, s.iteration.x0, 1000, 1e-14);
  ok &= expect(o.verdict == OrbitVerdict::Converged, "audit orbit did not converge");
  PataParams params = banach_embedding(0.5, ConditionFamily::PataOriginal).pata;
  BoundAudit audit = pata_bound_audit(s.space, s.map, o, s.spec.base, params,
                                      BoundReading::Pata, OmegaVariant::Pata, 200);
  ok &= expect(std::abs(audit.c_cap - 4.5) <= 1e-12, "cap != 4.5");
  ok &= expect(audit.c_emp <= 4.5, "empirical constant exceeds 4.5");
  ok &= expect(std::abs(audit.rows[0].ratio - 1.0) <= 1e-12,
               "n=1 ratio = " + std::to_string(audit.rows[0].ratio));
  ok &= expect(audit.pass, "audit failed");
  return ok;
}

bool c4_scalar_cap_falsification() {
  bool ok = true;
  nlohmann::json doc = run_falsify("thm11", std::nullopt);
  ok &= expect(report_ok(doc), "falsify thm11 not ok");
  const auto& f = doc["falsification"];
  ok &= expect(f["conclusion"].get<std::string>().find("contradiction") == 0,
               "conclusion does not lead with contradiction");
  double measured = -1.0, cap = -1.0;
  for (const auto& step : f["steps"]) {
    if (step["numbers"].contains("measured")) measured = step["numbers"]["measured"];
    if (step["numbers"].contains("cap")) cap = step["numbers"]["cap"];
  }
  ok &= expect(std::abs(measured - 1.0) <= 1e-9, "measured gap != 1");
  ok &= expect(cap == 0.0, "cap != 0");
  return ok;
}

bool c5_fixed_eps_falsification() {
  bool ok = true;
  for (int i = 0; i <= 10; ++i) {
    double eps = i / 10.0;
    FalsificationReport rep = falsify_thm11b(eps);
    ok &= expect(rep.as_expected, "thm11b failed at eps=" + std::to_string(eps));
    for (const auto& step : rep.steps)
      for (const auto& [key, value] : step.numbers) {
        if (key == "steps_used")
          ok &= expect(value <= 10.0, "cycle not found within 10 steps");
        if (key == "cycle_period") ok &= expect(value == 2.0, "period != 2");
      }
  }
  return ok;
}

bool c6_forall_necessity() {
  bool ok = true;
  MetricSpace space = flip_space();
  SelfMap map = SelfMap::negate();
  for (double cap : {1.0, 10.0, 1000.0}) {
    ConditionSpec spec;
    spec.family = ConditionFamily::BerindeLinear;
    spec.pata.lambda_cap = cap;
    spec.pata.alpha = 1.0;
    spec.pata.beta = 0.0;
    spec.pata.gauge = Gauge::power(1.0);
    spec.base = Point::finite(1);
    VerificationReport rep = verify(spec, space, map, 1001, 4, 42);
    ok &= expect(!rep.holds, "forall held at Lambda=" + std::to_string(cap));
    auto w = find_violation(spec, space, map);
    ok &= expect(w.has_value(), "no witness at Lambda=" + std::to_string(cap));
    if (w) {
      ok &= expect(w->eps <= 2.0 / (3.0 * cap) + 1e-9,
                   "witness eps beyond the closed-form violation range");
      // Closed-form margin on the off-diagonal pair: -2e + 3*Lambda*e^2.
      double predicted = -2.0 * w->eps + 3.0 * cap * w->eps * w->eps;
      ok &= expect(std::abs(w->margin - predicted) <=
                       1e-9 * (1.0 + std::abs(predicted)),
                   "witness margin disagrees with the closed form");
    }
  }
  return ok;
}

bool c7_extreme_eps_insufficiency() {
  bool ok = true;
  for (const char* name : {"translation", "growth-bound"}) {
    Scenario s = scenario(name);
    VerificationReport rep = verify(s.spec, s.space, s.map, s.sampling.eps_grid,
                                    s.sampling.pairs, s.sampling.seed);
    ok &= expect(rep.holds, std::string(name) + " condition does not hold");
    Orbit o = picard(s.space, s.map, s.iteration.x0, s.iteration.max_iter,
                     s.iteration.tol_conv);
    ok &= expect(o.verdict == OrbitVerdict::Diverged,
                 std::string(name) + " orbit did not diverge");
  }
  ok &= expect(report_ok(run_falsify("eps0", std::nullopt)), "eps0 demo failed");
  ok &= expect(report_ok(run_falsify("eps1", std::nullopt)), "eps1 demo failed");
  return ok;
}

bool c8_almost_contraction_suite() {
  bool ok = true;
  Scenario s = scenario("banach");
  double eps = 0.5;
  double bound = s.spec.pata.lambda_cap * std::pow(eps, s.spec.pata.alpha) *
                 gauge_eval(s.spec.pata.gauge, eps);  // 0.125

  ConditionSpec b316 = s.spec;
  b316.family = ConditionFamily::Berinde316;
  b316.quantifier = Quantifier::FixedEps;
  b316.fixed_eps = eps;
  ConditionSpec almost;
  almost.family = ConditionFamily::AlmostContraction;
  almost.almost_delta = 1.0 - eps;
  almost.almost_bound = bound;
  almost.base = s.spec.base;

  for (const auto& [x, y] : sample_pairs(s.space, 2000, 42)) {
    double a = margin(b316, eps, x, y, s.space, s.map);
    double b = margin(almost, eps, x, y, s.space, s.map);
    if (std::abs(a - b) > 1e-12 * (1.0 + std::abs(a))) {
      ok &= expect(false, "margin identity violated");
      break;
    }
  }
  ok &= expect(verify(almost, s.space, s.map, 2, 2000, 42).holds,
               "almost-contraction verification failed");

  Orbit o = picard(s.space, s.map, s.iteration.x0, 1000, 1e-14);
  AlmostAudit audit = almost_estimate_audit(s.space, o, eps);
  ok &= expect(audit.pass, "estimate audit failed");
  ok &= expect(std::abs(audit.max_ratio - 1.0) <= 1e-12,
               "max ratio = " + std::to_string(audit.max_ratio));

  Scenario id = scenario("identity-almost");
  Orbit oid = picard(id.space, id.map, id.iteration.x0, 100, 1e-9);
  AlmostAudit aid = almost_estimate_audit(id.space, oid, 1.0 - id.spec.almost_delta);
  ok &= expect(aid.pass && aid.max_ratio == 0.0, "identity audit not trivial");
  return ok;
}

bool c9_rebase_dominance() {
  bool ok = true;
  MetricSpace space = MetricSpace::real_line(-10.0, 10.0);
  SelfMap map = SelfMap::affine(0.5, 1.0);
  ConditionSpec spec = banach_embedding(0.5, ConditionFamily::BerindeLinear);
  auto pairs = sample_pairs(space, 200, 7);
  std::vector<double> eps_grid;
  for (int i = 0; i <= 20; ++i) eps_grid.push_back(i / 20.0);
  std::uint64_t state = 2026;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    Point moved_base = Point::real(-10.0 + 20.0 * uniform01(state));
    ConditionSpec moved = rebase(spec, moved_base, space);
    for (const auto& [x, y] : pairs) {
      for (double eps : eps_grid) {
        double m0 = margin(spec, eps, x, y, space, map);
        double m1 = margin(moved, eps, x, y, space, map);
        if (m1 < m0 - 1e-12 * (1.0 + std::abs(m0))) {
          ok &= expect(false, "rebased margin shrank at trial " + std::to_string(trial));
          break;
        }
      }
    }
  }
  return ok;
}

bool c10_determinism() {
  bool ok = true;
  for (const auto& name : scenario_names()) {
    Scenario s = scenario(name);
    ok &= expect(run_verify(s).dump() == run_verify(s).dump(),
                 name + " verify report not byte-identical");
    ok &= expect(run_iterate(s).dump() == run_iterate(s).dump(),
                 name + " iterate report not byte-identical");
  }
  ok &= expect(run_falsify("thm11", std::nullopt).dump() ==
                   run_falsify("thm11", std::nullopt).dump(),
               "falsify report not byte-identical");
  return ok;
}

}  // namespace

int main() {
  criterion(1, "omega matches the direct-summation oracle", c1_omega_oracle);
  criterion(2, "affine contraction scenario converges and verifies", c2_banach_scenario);
  criterion(3, "convergence-rate bound audit (exponent reading)", c3_bound_audit);
  criterion(4, "scalar-cap contradiction chain", c4_scalar_cap_falsification);
  criterion(5, "fixed-eps refutation across the eps grid", c5_fixed_eps_falsification);
  criterion(6, "forall-eps necessity on the flip map", c6_forall_necessity);
  criterion(7, "eps=0 / eps=1 specializations are insufficient",
            c7_extreme_eps_insufficiency);
  criterion(8, "almost-contraction margin identity and estimate audit",
            c8_almost_contraction_suite);
  criterion(9, "rebasing never shrinks margins", c9_rebase_dominance);
  criterion(10, "reports are deterministic", c10_determinism);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
