#include "fpcheck/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "fpcheck/metric_core.hpp"

namespace fpcheck {

Gauge Gauge::power(double gamma) {
  if (!(gamma > 0.0)) throw InvalidArgument("power gauge needs gamma > 0");
  Gauge g;
  g.family = Family::Power;
  g.gamma = gamma;
  return g;
}

Gauge Gauge::identity() {
  Gauge g;
  g.family = Family::Identity;
  return g;
}

Gauge Gauge::from_table(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.size() < 2) throw InvalidArgument("table gauge needs >= 2 breakpoints");
  if (breakpoints.front().first != 0.0 || breakpoints.front().second != 0.0)
    throw InvalidArgument("table gauge must start at (0, 0)");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i].first > breakpoints[i - 1].first))
      throw InvalidArgument("table gauge abscissae must be strictly increasing");
    if (breakpoints[i].first > 1.0)
      throw InvalidArgument("table gauge breakpoints must lie in [0, 1]");
    if (breakpoints[i].second < 0.0)
      throw InvalidArgument("table gauge values must be nonnegative");
  }
  Gauge g;
  g.family = Family::Table;
  g.table = std::move(breakpoints);
  return g;
}

double gauge_eval(const Gauge& g, double t) {
  if (t < 0.0) throw InvalidArgument("gauge argument must be nonnegative");
  double s = std::min(t, 1.0);  // clamp: psi(t) = psi(1) for t > 1
  switch (g.family) {
    case Gauge::Family::Power:
      return std::pow(s, g.gamma);
    case Gauge::Family::Identity:
      return s;
    case Gauge::Family::Table: {
      if (s >= g.table.back().first) return g.table.back().second;
      auto it = std::upper_bound(
          g.table.begin(), g.table.end(), s,
          [](double v, const std::pair<double, double>& bp) { return v < bp.first; });
      auto hi = *it;
      auto lo = *(it - 1);
      double w = (s - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  return 0.0;
}

GaugeReport check_gauge(const Gauge& g, int gridsize) {
  if (gridsize < 2) throw InvalidArgument("gridsize must be >= 2");
  GaugeReport rep;
  rep.gridsize = gridsize;
  rep.zero_at_zero = gauge_eval(g, 0.0) == 0.0;

  double prev_t = 0.0, prev_v = gauge_eval(g, 0.0);
  for (int i = 1; i < gridsize; ++i) {
    double t = 2.0 * i / (gridsize - 1);
    double v = gauge_eval(g, t);
    if (v < prev_v) {
      rep.monotone = false;
      if (!rep.monotone_witness) rep.monotone_witness = {prev_t, t};
    }
    prev_t = t;
    prev_v = v;
  }

  rep.vanishing = false;
  for (int k = 1; k <= 12; ++k) {
    if (gauge_eval(g, std::pow(10.0, -k)) <= 1e-6) {
      rep.vanishing = true;
      break;
    }
  }
  return rep;
}

}  // namespace fpcheck
