#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpcheck/gauge.hpp"
#include "fpcheck/metric_core.hpp"

namespace fpcheck {

/// Contraction-condition families. The eps-parameterized families share the
/// shape d(f(x),f(y)) <= (1-eps)*d(x,y) + Lambda*eps^alpha*psi(eps)*F(x,y)
/// and differ in the factor F; the eps-free families are checked once.
enum class ConditionFamily {
  Banach,             // lambda * d(x,y), lambda in [0,1)
  Nonexpansive,       // d(x,y)
  PataOriginal,       // bracket^beta, bracket = 1 + ||x|| + ||y||
  BerindeLinear,      // bracket^1; beta is carried but inert in the inequality
  GrowthBound,        // L * bracket
  Berinde316,         // factor d(y, f(x))
  AlmostContraction,  // delta * d(x,y) + L * d(y, f(x))
};

bool family_uses_eps(ConditionFamily f);

struct PataParams {
  double lambda_cap = 0.0;  // Lambda >= 0
  double alpha = 1.0;       // >= 1
  double beta = 0.0;        // in [0, alpha]
  Gauge gauge = Gauge::power(1.0);

  void validate() const;
};

enum class Quantifier { ForallEps, ExistsEps, FixedEps };

struct ConditionSpec {
  ConditionFamily family = ConditionFamily::BerindeLinear;
  PataParams pata;              // PataOriginal / BerindeLinear / Berinde316
  double banach_lambda = 0.0;   // Banach
  double growth_bound = 0.0;    // GrowthBound L
  double almost_delta = 0.0;    // AlmostContraction delta in [0,1)
  double almost_bound = 0.0;    // AlmostContraction L
  Quantifier quantifier = Quantifier::ForallEps;
  double fixed_eps = 0.0;       // used when quantifier == FixedEps
  Point base = Point::real(0.0);

  void validate() const;
};

double rhs(const ConditionSpec& spec, double eps, const Point& x, const Point& y,
           const MetricSpace& space, const SelfMap& map);

/// margin := rhs - d(f(x), f(y)); nonnegative means the inequality holds
/// at (eps, x, y).
double margin(const ConditionSpec& spec, double eps, const Point& x, const Point& y,
              const MetricSpace& space, const SelfMap& map);

/// Relative slack accepted by verification: margin >= -verify_tol(...).
double verify_tol(double rhs_value, double dxy);

struct Witness {
  double eps = 0.0;
  Point x;
  Point y;
  double margin = 0.0;
  int pair_index = 0;
};

struct EpsSummary {
  double eps = 0.0;
  double min_margin = 0.0;
};

struct VerificationReport {
  bool holds = false;
  double min_margin = 0.0;
  Witness worst_witness;
  std::vector<EpsSummary> per_eps;
  int eps_count = 0;
  int pair_count = 0;
  std::uint64_t seed = 0;
  bool grid_certified_only = false;  // EXISTS_EPS passes are grid-level only
};

/// Checks the condition over the eps grid and the sampled pair set.
/// FORALL: min over grid x pairs; EXISTS: some grid eps whose min over pairs
/// clears the tolerance; FIXED: that eps only. The grid always contains 0 and
/// 1 plus the geometric ladder 2^-k, k=1..40.
VerificationReport verify(const ConditionSpec& spec, const MetricSpace& space,
                          const SelfMap& map, int eps_grid_size = 1001,
                          int pair_budget = 2000, std::uint64_t seed = 42);

/// Coarse grid scan followed by 20 rounds of local eps refinement around the
/// worst point. Absent witness is a normal return.
std::optional<Witness> find_violation(const ConditionSpec& spec, const MetricSpace& space,
                                      const SelfMap& map, std::uint64_t seed = 42,
                                      int eps_grid_size = 101, int pair_budget = 500);

/// Parameters under which any lambda-contraction satisfies the linear-bracket
/// condition for every eps: Lambda = 1/(4(1-lambda)), alpha = 1, psi = id.
ConditionSpec banach_embedding(double lambda, ConditionFamily form,
                               Point base = Point::real(0.0));

/// Grid check of min over eps in [0,1] of (1 - eps + Lambda*eps^2) >= lambda.
/// The analytic minimum over R is 1 - 1/(4*Lambda) at eps = 1/(2*Lambda).
bool scalar_inequality_check(double lambda, double lambda_cap, int gridsize = 1001);

/// Moves the base point and scales Lambda' = Lambda * (1 + 2*d(base, new_base)),
/// which preserves the condition for bracket families with beta <= 1.
ConditionSpec rebase(const ConditionSpec& spec, const Point& new_base,
                     const MetricSpace& space);

/// Smallest Lambda solving Lambda * eps^alpha * psi(eps) = eps, i.e. the value
/// that makes the two-point flip map satisfy the linear-bracket condition at
/// one fixed eps; returns 0 at eps = 0 (nonexpansive case). Returns nullopt
/// when psi(eps) = 0 with eps > 0 (no finite Lambda works).
std::optional<double> flip_lambda(double eps, double alpha, const Gauge& g);

}  // namespace fpcheck
