#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpcheck/conditions.hpp"
#include "fpcheck/iteration.hpp"
#include "fpcheck/metric_core.hpp"

namespace fpcheck {

struct SamplingConfig {
  int eps_grid = 1001;
  int pairs = 2000;
  std::uint64_t seed = 42;
};

struct IterationConfig {
  Point x0 = Point::real(0.0);
  int max_iter = 10000;
  double tol_conv = 1e-9;
};

struct ExpectedVerdicts {
  std::optional<bool> condition_holds;
  std::optional<bool> fixed_point;
  std::optional<bool> audits_pass;
};

/// A named, self-describing bundle: space + map + condition + iteration
/// defaults + the verdicts the bundle is expected to reproduce.
struct Scenario {
  std::string name;
  std::string description;
  MetricSpace space;
  SelfMap map;
  ConditionSpec spec;
  IterationConfig iteration;
  SamplingConfig sampling;
  ExpectedVerdicts expected;
};

const std::vector<std::string>& scenario_names();

/// Looks up a published scenario bundle; throws InvalidArgument on unknown
/// names.
Scenario scenario(const std::string& name);

struct FalsificationStep {
  std::string claim;
  std::string check;
  bool passed = false;
  std::vector<std::pair<std::string, double>> numbers;
};

struct FalsificationReport {
  std::string title;
  std::vector<FalsificationStep> steps;
  std::string conclusion;
  bool as_expected = false;  // every step's check passed
};

/// The contradiction chain for the claimed theorem with the scalar bound
/// factor: an affine contraction verifies the condition with exponent 0, the
/// resulting error cap is zero, yet the orbit starts a positive distance from
/// the fixed point.
FalsificationReport falsify_berinde_thm11();

/// The fixed-eps refutation: the two-point flip map satisfies the condition
/// at any single eps in [0,1] with the matching Lambda, yet has no fixed
/// point (period-2 cycle).
FalsificationReport falsify_thm11b(double eps);

enum class InsufficiencyCase { Eps0, Eps1 };

/// eps=0 (nonexpansive) and eps=1 (pure growth bound) specializations each
/// admit the unit translation, which has no fixed point.
FalsificationReport insufficiency_demo(InsufficiencyCase which);

}  // namespace fpcheck
