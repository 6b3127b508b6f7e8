#include "fpcheck/iteration.hpp"

#include <algorithm>
#include <cmath>

namespace fpcheck {

namespace {

constexpr double kDivergenceThreshold = 1e12;
constexpr int kCycleWindow = 16;
constexpr double kCycleTol = 1e-12;

}  // namespace

Orbit picard(const MetricSpace& space, const SelfMap& map, const Point& x0,
             int max_iter, double tol_conv) {
  if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
  if (!(tol_conv > 0.0)) throw InvalidArgument("tol_conv must be positive");

  Orbit orbit;
  orbit.start = x0;
  orbit.points.push_back(x0);

  for (int n = 0; n < max_iter; ++n) {
    Point next = apply(space, map, orbit.points.back());
    double gap = distance(space, next, orbit.points.back());
    orbit.points.push_back(next);
    orbit.step_gaps.push_back(gap);

    if (gap < tol_conv) {
      orbit.verdict = OrbitVerdict::Converged;
      orbit.converged_at = n + 1;
      orbit.limit = next;
      orbit.fixed_point_residual = distance(space, apply(space, map, next), next);
      return orbit;
    }
    if (distance(space, next, x0) > kDivergenceThreshold) {
      orbit.verdict = OrbitVerdict::Diverged;
      return orbit;
    }
    // Cycle check against the trailing window; period 1 is the converged case.
    // The revisit tolerance never exceeds tol_conv, so slowly converging
    // orbits are not misread as cycles before the gap test fires.
    double cycle_tol = std::min(kCycleTol, tol_conv);
    int last = static_cast<int>(orbit.points.size()) - 1;
    for (int p = 2; p <= kCycleWindow && last - p >= 0; ++p) {
      if (distance(space, next, orbit.points[last - p]) < cycle_tol) {
        orbit.verdict = OrbitVerdict::Cycle;
        orbit.cycle_period = p;
        orbit.cycle_offset = last - p;
        return orbit;
      }
    }
  }

  // Budget exhausted. An orbit whose step gaps never decayed while the norms
  // grew monotonically is escaping, not converging slowly; the hard threshold
  // alone cannot catch a unit-step translation within any practical budget.
  orbit.verdict = OrbitVerdict::BudgetExhausted;
  if (orbit.step_gaps.size() >= 4 &&
      orbit.step_gaps.back() >= orbit.step_gaps.front() * (1.0 - 1e-12)) {
    bool norms_increasing = true;
    int window = std::min<int>(32, static_cast<int>(orbit.points.size()) - 1);
    double prev = distance(space, orbit.points[orbit.points.size() - 1 - window], x0);
    for (int k = window - 1; k >= 0; --k) {
      double cur = distance(space, orbit.points[orbit.points.size() - 1 - k], x0);
      if (cur <= prev) {
        norms_increasing = false;
        break;
      }
      prev = cur;
    }
    if (norms_increasing) orbit.verdict = OrbitVerdict::Diverged;
  }
  return orbit;
}

double omega(OmegaVariant variant, double alpha, const Gauge& g, long n) {
  if (n < 1) throw InvalidArgument("omega needs n >= 1");
  if (!(alpha >= 1.0)) throw InvalidArgument("alpha must be >= 1");
  double sum = 0.0;
  for (long k = 1; k <= n; ++k) sum += gauge_eval(g, alpha / k);
  double ratio = alpha / n;
  double prefactor = variant == OmegaVariant::Pata ? std::pow(ratio, alpha) : ratio;
  return prefactor * sum;
}

BoundAudit pata_bound_audit(const MetricSpace& space, const SelfMap& map,
                            const Orbit& orbit, const Point& base,
                            const PataParams& params, BoundReading reading,
                            OmegaVariant variant, long n_max) {
  if (orbit.verdict != OrbitVerdict::Converged)
    throw InvalidArgument("bound audit needs a converged orbit");
  params.validate();

  const Point& star = orbit.limit;
  double star_norm = norm(space, base, star);
  BoundAudit audit;
  audit.fixed_point_residual = orbit.fixed_point_residual;
  audit.c_cap = reading == BoundReading::Pata
                    ? params.lambda_cap * std::pow(1.0 + 4.0 * star_norm, params.beta)
                    : params.lambda_cap * (1.0 + 4.0 * star_norm) * params.beta;

  Point current = orbit.points.back();
  double omega_sum = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    Point xn = n < static_cast<long>(orbit.points.size())
                   ? orbit.points[n]
                   : (current = apply(space, map, current));
    omega_sum += gauge_eval(params.gauge, params.alpha / n);
    double ratio_an = params.alpha / n;
    double prefactor = variant == OmegaVariant::Pata ? std::pow(ratio_an, params.alpha)
                                                     : ratio_an;
    double omega_n = prefactor * omega_sum;

    AuditRow row;
    row.n = n;
    row.lhs = distance(space, star, xn);
    row.omega_n = omega_n;
    row.bound = audit.c_cap * omega_n;
    if (omega_n > 0.0) {
      row.ratio = row.lhs / omega_n;
      audit.c_emp = std::max(audit.c_emp, row.ratio);
    }
    audit.rows.push_back(row);
  }
  audit.pass = audit.c_emp <= audit.c_cap + 1e-9;
  return audit;
}

AlmostAudit almost_estimate_audit(const MetricSpace& space, const Orbit& orbit,
                                  double eps) {
  if (orbit.verdict != OrbitVerdict::Converged)
    throw InvalidArgument("estimate audit needs a converged orbit");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");

  const Point& star = orbit.limit;
  long top = static_cast<long>(orbit.points.size()) - 1;
  AlmostAudit audit;
  audit.pass = true;
  for (long n = 1; n <= top; ++n) {
    double gap = orbit.step_gaps[n - 1];  // d(x_n, x_{n-1})
    double decay = 1.0;
    for (long i = 1; n + i - 1 <= top; ++i) {
      decay *= 1.0 - eps;
      double rhs_val = decay / eps * gap;
      double lhs_val = distance(space, orbit.points[n + i - 1], star);
      audit.rows.push_back({n, i, lhs_val, rhs_val});
      if (lhs_val > rhs_val + 1e-12 * (1.0 + lhs_val + rhs_val)) audit.pass = false;
      if (rhs_val > 0.0) audit.max_ratio = std::max(audit.max_ratio, lhs_val / rhs_val);
    }
  }
  return audit;
}

}  // namespace fpcheck
