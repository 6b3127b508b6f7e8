#pragma once

#include <cstdint>
#include <vector>

#include "fpcheck/conditions.hpp"
#include "fpcheck/gauge.hpp"
#include "fpcheck/metric_core.hpp"

namespace fpcheck {

enum class OrbitVerdict { Converged, Cycle, Diverged, BudgetExhausted };

struct Orbit {
  Point start;
  std::vector<Point> points;      // x_0 .. x_N
  std::vector<double> step_gaps;  // d(x_{n+1}, x_n) for n = 0 .. N-1
  OrbitVerdict verdict = OrbitVerdict::BudgetExhausted;
  int converged_at = -1;      // step index where the gap first dropped below tol
  int cycle_period = 0;
  int cycle_offset = 0;
  Point limit;                // last iterate, when Converged
  double fixed_point_residual = 0.0;  // d(x*, f(x*)), when Converged
};

/// Picard iteration x_{n+1} = f(x_n). Stops on a step gap below tol_conv
/// (Converged), a revisited point within the cycle window (Cycle), iterates
/// escaping past the divergence threshold (Diverged), or budget exhaustion.
/// A budget-exhausted orbit whose norms grew monotonically with no gap decay
/// is classified Diverged; see the translation demo.
Orbit picard(const MetricSpace& space, const SelfMap& map, const Point& x0,
             int max_iter, double tol_conv);

enum class OmegaVariant { Pata, Berinde };

/// The vanishing rate sequence: prefactor (alpha/n)^alpha (Pata) or (alpha/n)
/// (Berinde) times sum_{k=1}^n psi(alpha/k), with the clamped gauge.
double omega(OmegaVariant variant, double alpha, const Gauge& g, long n);

enum class BoundReading { Pata, Berinde };

struct AuditRow {
  long n = 0;
  double lhs = 0.0;     // d(x*, x_n)
  double omega_n = 0.0;
  double bound = 0.0;   // C_cap * omega_n
  double ratio = 0.0;   // lhs / omega_n, rows with omega_n > 0 only
};

struct BoundAudit {
  std::vector<AuditRow> rows;
  double c_emp = 0.0;  // max ratio
  double c_cap = 0.0;  // Lambda*(1+4||x*||)^beta (Pata) or Lambda*(1+4||x*||)*beta (Berinde)
  bool pass = false;   // c_emp <= c_cap + tol
  double fixed_point_residual = 0.0;
};

/// Audits d(x*, x_n) <= C * omega_n(alpha) for n = 1..n_max, extending the
/// orbit past its recorded length by continued application of the map.
BoundAudit pata_bound_audit(const MetricSpace& space, const SelfMap& map,
                            const Orbit& orbit, const Point& base,
                            const PataParams& params, BoundReading reading,
                            OmegaVariant variant, long n_max = 200);

struct AlmostAuditRow {
  long n = 0;
  long i = 0;
  double lhs = 0.0;  // d(x_{n+i-1}, x*)
  double rhs = 0.0;  // (1-eps)^i / eps * d(x_n, x_{n-1})
};

struct AlmostAudit {
  std::vector<AlmostAuditRow> rows;
  double max_ratio = 0.0;  // over rows with rhs > 0
  bool pass = false;       // every row satisfies lhs <= rhs + tol
};

/// Checks the a-posteriori estimate d(x_{n+i-1}, x*) <= (1-eps)^i/eps *
/// d(x_n, x_{n-1}) over all (n >= 1, i >= 1) inside the orbit.
AlmostAudit almost_estimate_audit(const MetricSpace& space, const Orbit& orbit,
                                  double eps);

}  // namespace fpcheck
