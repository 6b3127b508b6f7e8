#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpcheck {

/// An increasing comparison function psi on [0, inf) with psi(0) = 0.
/// Every gauge is clamped: psi(t) = psi(1) for t > 1, which keeps the rate
/// sequence omega_n(alpha) defined for all alpha >= 1.
struct Gauge {
  enum class Family { Power, Identity, Table };

  Family family = Family::Identity;
  double gamma = 1.0;  // Power: psi(t) = t^gamma on [0,1]
  // Table: monotone breakpoints (t, value) on [0,1] with value 0 at t=0;
  // evaluated by linear interpolation.
  std::vector<std::pair<double, double>> table;

  static Gauge power(double gamma);
  static Gauge identity();
  static Gauge from_table(std::vector<std::pair<double, double>> breakpoints);
};

double gauge_eval(const Gauge& g, double t);

struct GaugeReport {
  bool zero_at_zero = true;
  bool monotone = true;
  bool vanishing = true;
  // Witness of a monotonicity violation: (t1, t2) with t1 < t2 and
  // eval(t1) > eval(t2).
  std::optional<std::pair<double, double>> monotone_witness;
  int gridsize = 0;
};

/// Checks eval(0)=0, monotonicity on a uniform grid over [0,2], and vanishing
/// at 0 (eval(10^-k) < 1e-6 for some k <= 12).
GaugeReport check_gauge(const Gauge& g, int gridsize);

}  // namespace fpcheck
