#include <doctest.h>

#include <cmath>

#include "fpcheck/iteration.hpp"

using namespace fpcheck;

namespace {

MetricSpace flip_space() {
  return MetricSpace::finite({"-1", "1"}, {{0.0, 2.0}, {2.0, 0.0}});
}

// Direct-summation oracle on long double, accumulated in reverse order so it
// is an independent route to the same sum.
long double omega_oracle(OmegaVariant variant, double alpha, const Gauge& g, long n) {
  long double sum = 0.0L;
  for (long k = n; k >= 1; --k) sum += (long double)gauge_eval(g, alpha / k);
  long double ratio = (long double)alpha / n;
  long double pre = variant == OmegaVariant::Pata ? powl(ratio, (long double)alpha) : ratio;
  return pre * sum;
}

}  // namespace

TEST_CASE("picard converges geometrically for the affine contraction") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  Orbit o = picard(line, SelfMap::affine(0.5, 1.0), Point::real(0.0), 10000, 1e-9);
  CHECK(o.verdict == OrbitVerdict::Converged);
  CHECK(o.converged_at <= 35);
  CHECK(std::abs(o.limit.scalar() - 2.0) < 1e-9);
  CHECK(o.fixed_point_residual < 1e-9);
  // Contraction gap decay.
  for (std::size_t n = 1; n < o.step_gaps.size(); ++n)
    CHECK(o.step_gaps[n] <= 0.5 * o.step_gaps[n - 1] + 1e-15);
}

TEST_CASE("picard detects the period-2 flip cycle") {
  Orbit o = picard(flip_space(), SelfMap::negate(), Point::finite(1), 100, 1e-9);
  CHECK(o.verdict == OrbitVerdict::Cycle);
  CHECK(o.cycle_period == 2);
  CHECK(o.points.size() <= 11);
}

TEST_CASE("picard flags the escaping translation as diverged") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  Orbit o = picard(line, SelfMap::translation(1.0), Point::real(0.0), 10000, 1e-9);
  CHECK(o.verdict == OrbitVerdict::Diverged);
}

TEST_CASE("picard reports budget exhaustion for slow contractions") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  Orbit o = picard(line, SelfMap::affine(0.9999, 0.0), Point::real(1.0), 50, 1e-9);
  CHECK(o.verdict == OrbitVerdict::BudgetExhausted);
}

TEST_CASE("omega closed values") {
  Gauge g = Gauge::power(1.0);
  CHECK(omega(OmegaVariant::Pata, 1.0, g, 2) == doctest::Approx(0.75).epsilon(1e-15));
  // alpha = 2, n = 2: (2/2)^2 * (psi(2) + psi(1)) with the clamp psi(2) = 1.
  CHECK(omega(OmegaVariant::Pata, 2.0, g, 2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(omega(OmegaVariant::Pata, 1.0, g, 0), InvalidArgument);
}

TEST_CASE("omega variants coincide exactly at alpha = 1") {
  Gauge g = Gauge::power(2.0);
  for (long n : {1L, 2L, 7L, 100L, 5000L})
    CHECK(omega(OmegaVariant::Pata, 1.0, g, n) == omega(OmegaVariant::Berinde, 1.0, g, n));
}

TEST_CASE("omega matches the direct-summation oracle") {
  for (double alpha : {1.0, 1.5, 2.0})
    for (const Gauge& g : {Gauge::power(1.0), Gauge::power(2.0)})
      for (long n : {1L, 2L, 3L, 10L, 137L, 1000L, 10000L})
        for (OmegaVariant v : {OmegaVariant::Pata, OmegaVariant::Berinde}) {
          double got = omega(v, alpha, g, n);
          long double want = omega_oracle(v, alpha, g, n);
          CHECK(std::abs(got - (double)want) <= 1e-12 * std::max(1.0, std::abs((double)want)));
        }
}

TEST_CASE("omega at alpha 1 with the identity gauge is H_n / n") {
  Gauge g = Gauge::power(1.0);
  long double h = 0.0L;
  double prev = 2.0;
  for (long n = 1; n <= 2000; ++n) {
    h += 1.0L / n;
    double got = omega(OmegaVariant::Berinde, 1.0, g, n);
    CHECK(std::abs(got - (double)(h / n)) <= 1e-12 * (double)(h / n));
    CHECK(got <= prev + 1e-15);  // nonincreasing
    prev = got;
  }
}

TEST_CASE("omega is monotone in the gauge") {
  for (long n : {1L, 5L, 50L})
    CHECK(omega(OmegaVariant::Pata, 1.5, Gauge::power(1.0), n) >=
          omega(OmegaVariant::Pata, 1.5, Gauge::power(2.0), n));
}

TEST_CASE("bound audit for the embedded contraction") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  SelfMap map = SelfMap::affine(0.5, 1.0);
  Orbit o = picard(line, map, Point::real(0.0), 1000, 1e-14);
  REQUIRE(o.verdict == OrbitVerdict::Converged);

  PataParams params = banach_embedding(0.5, ConditionFamily::PataOriginal).pata;
  BoundAudit audit = pata_bound_audit(line, map, o, Point::real(0.0), params,
                                      BoundReading::Pata, OmegaVariant::Pata, 200);
  CHECK(audit.c_cap == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(audit.rows.size() == 200);
  CHECK(audit.rows[0].ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(audit.c_emp <= 4.5);
  CHECK(audit.pass);

  // Zero-exponent scalar reading: cap 0, but the first ratio is 1 -> fail.
  PataParams beta0 = banach_embedding(0.5, ConditionFamily::BerindeLinear).pata;
  BoundAudit audit0 = pata_bound_audit(line, map, o, Point::real(0.0), beta0,
                                       BoundReading::Berinde, OmegaVariant::Berinde, 200);
  CHECK(audit0.c_cap == 0.0);
  CHECK_FALSE(audit0.pass);
  CHECK(audit0.c_emp == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bound audit on a constant map passes under any cap") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  SelfMap map = SelfMap::constant(Point::real(1.0));
  Orbit o = picard(line, map, Point::real(0.0), 100, 1e-14);
  REQUIRE(o.verdict == OrbitVerdict::Converged);
  PataParams params;
  params.lambda_cap = 0.0;
  BoundAudit audit = pata_bound_audit(line, map, o, Point::real(0.0), params,
                                      BoundReading::Pata, OmegaVariant::Pata, 50);
  CHECK(audit.c_emp == 0.0);
  CHECK(audit.pass);
}

TEST_CASE("bound audit requires a converged orbit") {
  Orbit o = picard(flip_space(), SelfMap::negate(), Point::finite(1), 100, 1e-9);
  PataParams params;
  CHECK_THROWS_AS(pata_bound_audit(flip_space(), SelfMap::negate(), o, Point::finite(1),
                                   params, BoundReading::Pata, OmegaVariant::Pata, 10),
                  InvalidArgument);
}

TEST_CASE("a-posteriori estimate is an equality for the affine contraction") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  SelfMap map = SelfMap::affine(0.5, 1.0);
  Orbit o = picard(line, map, Point::real(0.0), 1000, 1e-14);
  AlmostAudit audit = almost_estimate_audit(line, o, 0.5);
  CHECK(audit.pass);
  CHECK(audit.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a-posteriori estimate is trivial on stationary orbits") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  Orbit o = picard(line, SelfMap::affine(1.0, 0.0), Point::real(3.0), 100, 1e-9);
  REQUIRE(o.verdict == OrbitVerdict::Converged);
  AlmostAudit audit = almost_estimate_audit(line, o, 0.5);
  CHECK(audit.pass);
  CHECK(audit.max_ratio == 0.0);
  CHECK_THROWS_AS(almost_estimate_audit(line, o, 0.0), InvalidArgument);
  CHECK_THROWS_AS(almost_estimate_audit(line, o, 1.0), InvalidArgument);
}

TEST_CASE("audits are deterministic") {
  MetricSpace line = MetricSpace::real_line(-10.0, 10.0);
  SelfMap map = SelfMap::affine(0.5, 1.0);
  Orbit o = picard(line, map, Point::real(0.0), 1000, 1e-14);
  PataParams params = banach_embedding(0.5, ConditionFamily::PataOriginal).pata;
  BoundAudit a = pata_bound_audit(line, map, o, Point::real(0.0), params,
                                  BoundReading::Pata, OmegaVariant::Pata, 100);
  BoundAudit b = pata_bound_audit(line, map, o, Point::real(0.0), params,
                                  BoundReading::Pata, OmegaVariant::Pata, 100);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].lhs == b.rows[i].lhs);
    CHECK(a.rows[i].omega_n == b.rows[i].omega_n);
    CHECK(a.rows[i].ratio == b.rows[i].ratio);
  }
}
