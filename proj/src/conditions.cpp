#include "fpcheck/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace fpcheck {

namespace {

constexpr int kLadderDepth = 40;  // geometric eps ladder 2^-1 .. 2^-40
constexpr int kRefineRounds = 20;

// Per-pair geometry, precomputed once so the eps sweep is pure arithmetic.
struct PairGeometry {
  double dxy = 0.0;      // d(x, y)
  double bracket = 0.0;  // 1 + ||x|| + ||y||
  double dfxfy = 0.0;    // d(f(x), f(y))
  double dyfx = 0.0;     // d(y, f(x))
};

PairGeometry pair_geometry(const ConditionSpec& spec, const MetricSpace& space,
                           const SelfMap& map, const Point& x, const Point& y) {
  PairGeometry g;
  g.dxy = distance(space, x, y);
  g.bracket = 1.0 + norm(space, spec.base, x) + norm(space, spec.base, y);
  Point fx = apply(space, map, x);
  Point fy = apply(space, map, y);
  g.dfxfy = distance(space, fx, fy);
  g.dyfx = distance(space, y, fx);
  return g;
}

double rhs_from(const ConditionSpec& spec, double eps, const PairGeometry& g) {
  switch (spec.family) {
    case ConditionFamily::Banach:
      return spec.banach_lambda * g.dxy;
    case ConditionFamily::Nonexpansive:
      return g.dxy;
    case ConditionFamily::PataOriginal:
      return (1.0 - eps) * g.dxy +
             spec.pata.lambda_cap * std::pow(eps, spec.pata.alpha) *
                 gauge_eval(spec.pata.gauge, eps) * std::pow(g.bracket, spec.pata.beta);
    case ConditionFamily::BerindeLinear:
      return (1.0 - eps) * g.dxy +
             spec.pata.lambda_cap * std::pow(eps, spec.pata.alpha) *
                 gauge_eval(spec.pata.gauge, eps) * g.bracket;
    case ConditionFamily::GrowthBound:
      return spec.growth_bound * g.bracket;
    case ConditionFamily::Berinde316:
      return (1.0 - eps) * g.dxy +
             spec.pata.lambda_cap * std::pow(eps, spec.pata.alpha) *
                 gauge_eval(spec.pata.gauge, eps) * g.dyfx;
    case ConditionFamily::AlmostContraction:
      return spec.almost_delta * g.dxy + spec.almost_bound * g.dyfx;
  }
  throw InvalidArgument("unknown condition family");
}

void check_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidArgument("eps must lie in [0, 1]");
}

// Uniform grid on [0,1] plus the geometric ladder near zero, where the
// decisive violations occur.
std::vector<double> eps_grid(const ConditionSpec& spec, int grid_size) {
  if (!family_uses_eps(spec.family)) return {0.0};
  if (spec.quantifier == Quantifier::FixedEps) return {spec.fixed_eps};
  if (grid_size < 2) throw InvalidArgument("eps grid size must be >= 2");
  std::vector<double> grid;
  grid.reserve(grid_size + kLadderDepth);
  for (int i = 0; i < grid_size; ++i)
    grid.push_back(static_cast<double>(i) / (grid_size - 1));
  for (int k = 1; k <= kLadderDepth; ++k) grid.push_back(std::ldexp(1.0, -k));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

struct Cell {
  double margin = std::numeric_limits<double>::infinity();
  int eps_index = -1;
  int pair_index = -1;
};

// Smallest margin wins; ties resolve to the smaller eps, then the smaller
// pair index, so the reduction is order-independent.
bool cell_worse(const Cell& a, const Cell& b) {
  if (a.margin != b.margin) return a.margin < b.margin;
  if (a.eps_index != b.eps_index) return a.eps_index < b.eps_index;
  return a.pair_index < b.pair_index;
}

}  // namespace

bool family_uses_eps(ConditionFamily f) {
  switch (f) {
    case ConditionFamily::PataOriginal:
    case ConditionFamily::BerindeLinear:
    case ConditionFamily::Berinde316:
      return true;
    default:
      return false;
  }
}

void PataParams::validate() const {
  if (!(lambda_cap >= 0.0)) throw InvalidArgument("Lambda must be >= 0");
  if (!(alpha >= 1.0)) throw InvalidArgument("alpha must be >= 1");
  if (!(beta >= 0.0 && beta <= alpha))
    throw InvalidArgument("beta must lie in [0, alpha]");
}

void ConditionSpec::validate() const {
  switch (family) {
    case ConditionFamily::Banach:
      if (!(banach_lambda >= 0.0 && banach_lambda < 1.0))
        throw InvalidArgument("Banach lambda must lie in [0, 1)");
      break;
    case ConditionFamily::GrowthBound:
      if (!(growth_bound >= 0.0)) throw InvalidArgument("growth bound L must be >= 0");
      break;
    case ConditionFamily::AlmostContraction:
      if (!(almost_delta >= 0.0 && almost_delta < 1.0))
        throw InvalidArgument("almost-contraction delta must lie in [0, 1)");
      if (!(almost_bound >= 0.0)) throw InvalidArgument("almost-contraction L must be >= 0");
      break;
    default:
      pata.validate();
      break;
  }
  if (quantifier == Quantifier::FixedEps) check_eps(fixed_eps);
}

double rhs(const ConditionSpec& spec, double eps, const Point& x, const Point& y,
           const MetricSpace& space, const SelfMap& map) {
  if (family_uses_eps(spec.family)) check_eps(eps);
  return rhs_from(spec, eps, pair_geometry(spec, space, map, x, y));
}

double margin(const ConditionSpec& spec, double eps, const Point& x, const Point& y,
              const MetricSpace& space, const SelfMap& map) {
  if (family_uses_eps(spec.family)) check_eps(eps);
  PairGeometry g = pair_geometry(spec, space, map, x, y);
  return rhs_from(spec, eps, g) - g.dfxfy;
}

double verify_tol(double rhs_value, double dxy) {
  return 1e-9 * (1.0 + std::abs(rhs_value) + dxy);
}

VerificationReport verify(const ConditionSpec& spec, const MetricSpace& space,
                          const SelfMap& map, int eps_grid_size, int pair_budget,
                          std::uint64_t seed) {
  spec.validate();
  std::vector<double> grid = eps_grid(spec, eps_grid_size);
  std::vector<std::pair<Point, Point>> pairs = sample_pairs(space, pair_budget, seed);

  std::vector<PairGeometry> geom(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    geom[i] = pair_geometry(spec, space, map, pairs[i].first, pairs[i].second);

  VerificationReport rep;
  rep.eps_count = static_cast<int>(grid.size());
  rep.pair_count = static_cast<int>(pairs.size());
  rep.seed = seed;
  rep.per_eps.resize(grid.size());

  // Each eps slot is filled independently; the final reduction is a
  // deterministic scan, so the result does not depend on thread scheduling.
  std::vector<Cell> worst_per_eps(grid.size());
  std::vector<bool> holds_per_eps(grid.size());

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
      double eps = grid[e];
      Cell worst;
      bool eps_holds = true;
      for (std::size_t p = 0; p < geom.size(); ++p) {
        double r = rhs_from(spec, eps, geom[p]);
        double m = r - geom[p].dfxfy;
        Cell cell{m, static_cast<int>(e), static_cast<int>(p)};
        if (cell_worse(cell, worst)) worst = cell;
        if (m < -verify_tol(r, geom[p].dxy)) eps_holds = false;
      }
      worst_per_eps[e] = worst;
      holds_per_eps[e] = eps_holds;
      rep.per_eps[e] = {eps, worst.margin};
    }
  };

  std::size_t n = grid.size();
  unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
  if (threads > 1 && n > 16) {
    std::vector<std::future<void>> futs;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t b = t * chunk;
      if (b >= n) break;
      std::size_t e = std::min(n, b + chunk);
      futs.push_back(std::async(std::launch::async, run_range, b, e));
    }
    for (auto& f : futs) f.get();
  } else {
    run_range(0, n);
  }

  Cell global;
  bool all_hold = true;
  bool any_holds = false;
  for (std::size_t e = 0; e < n; ++e) {
    if (cell_worse(worst_per_eps[e], global)) global = worst_per_eps[e];
    all_hold = all_hold && holds_per_eps[e];
    any_holds = any_holds || holds_per_eps[e];
  }

  rep.min_margin = global.margin;
  rep.worst_witness = {grid[global.eps_index], pairs[global.pair_index].first,
                       pairs[global.pair_index].second, global.margin,
                       global.pair_index};
  switch (spec.quantifier) {
    case Quantifier::ForallEps:
      rep.holds = all_hold;
      break;
    case Quantifier::ExistsEps:
      rep.holds = any_holds;
      rep.grid_certified_only = family_uses_eps(spec.family);
      break;
    case Quantifier::FixedEps:
      rep.holds = all_hold;  // single-eps grid
      break;
  }
  if (!family_uses_eps(spec.family)) rep.holds = all_hold;
  return rep;
}

std::optional<Witness> find_violation(const ConditionSpec& spec, const MetricSpace& space,
                                      const SelfMap& map, std::uint64_t seed,
                                      int eps_grid_size, int pair_budget) {
  spec.validate();
  std::vector<double> grid = eps_grid(spec, eps_grid_size);
  std::vector<std::pair<Point, Point>> pairs = sample_pairs(space, pair_budget, seed);
  std::vector<PairGeometry> geom(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    geom[i] = pair_geometry(spec, space, map, pairs[i].first, pairs[i].second);

  auto worst_at = [&](double eps) {
    Cell worst;
    for (std::size_t p = 0; p < geom.size(); ++p) {
      double m = rhs_from(spec, eps, geom[p]) - geom[p].dfxfy;
      Cell cell{m, 0, static_cast<int>(p)};
      if (cell_worse(cell, worst)) worst = cell;
    }
    return worst;
  };

  double best_eps = grid[0];
  Cell best = worst_at(grid[0]);
  for (std::size_t e = 1; e < grid.size(); ++e) {
    Cell c = worst_at(grid[e]);
    if (c.margin < best.margin) {
      best = c;
      best_eps = grid[e];
    }
  }

  if (family_uses_eps(spec.family) && spec.quantifier != Quantifier::FixedEps) {
    // Local refinement: halve the eps step around the current worst point.
    double step = grid.size() > 1 ? 1.0 / (eps_grid_size - 1) : 0.0;
    for (int round = 0; round < kRefineRounds; ++round) {
      step *= 0.5;
      for (double cand : {best_eps - step, best_eps + step}) {
        if (cand < 0.0 || cand > 1.0) continue;
        Cell c = worst_at(cand);
        if (c.margin < best.margin) {
          best = c;
          best_eps = cand;
        }
      }
    }
  }

  const PairGeometry& g = geom[best.pair_index];
  double r = rhs_from(spec, best_eps, g);
  if (best.margin < -verify_tol(r, g.dxy)) {
    return Witness{best_eps, pairs[best.pair_index].first, pairs[best.pair_index].second,
                   best.margin, best.pair_index};
  }
  return std::nullopt;
}

ConditionSpec banach_embedding(double lambda, ConditionFamily form, Point base) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw InvalidArgument("banach embedding needs lambda in [0, 1)");
  if (form != ConditionFamily::BerindeLinear && form != ConditionFamily::PataOriginal)
    throw InvalidArgument("banach embedding targets the bracket families");
  ConditionSpec spec;
  spec.family = form;
  spec.pata.lambda_cap = 1.0 / (4.0 * (1.0 - lambda));
  spec.pata.alpha = 1.0;
  // In the linear form the exponent never enters the inequality; in the
  // original form the exponent-1 bracket dominates d(x,y) by the same algebra.
  spec.pata.beta = form == ConditionFamily::BerindeLinear ? 0.0 : 1.0;
  spec.pata.gauge = Gauge::power(1.0);
  spec.quantifier = Quantifier::ForallEps;
  spec.base = std::move(base);
  return spec;
}

bool scalar_inequality_check(double lambda, double lambda_cap, int gridsize) {
  if (!(lambda_cap > 0.0)) throw InvalidArgument("Lambda must be positive");
  if (gridsize < 2) throw InvalidArgument("gridsize must be >= 2");
  double min_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < gridsize; ++i) {
    double eps = static_cast<double>(i) / (gridsize - 1);
    min_val = std::min(min_val, 1.0 - eps + lambda_cap * eps * eps);
  }
  // Include the interior vertex eps = 1/(2*Lambda) when it lies in [0,1].
  double vertex = 1.0 / (2.0 * lambda_cap);
  if (vertex <= 1.0)
    min_val = std::min(min_val, 1.0 - vertex + lambda_cap * vertex * vertex);
  return min_val >= lambda - 1e-12;
}

ConditionSpec rebase(const ConditionSpec& spec, const Point& new_base,
                     const MetricSpace& space) {
  if (spec.family != ConditionFamily::BerindeLinear &&
      spec.family != ConditionFamily::PataOriginal)
    throw InvalidArgument("rebase needs a base-dependent bracket family");
  if (spec.family == ConditionFamily::PataOriginal && spec.pata.beta > 1.0)
    throw InvalidArgument("rebase needs beta <= 1");
  double d = distance(space, spec.base, new_base);
  ConditionSpec out = spec;
  out.base = new_base;
  out.pata.lambda_cap = spec.pata.lambda_cap * (1.0 + 2.0 * d);
  return out;
}

std::optional<double> flip_lambda(double eps, double alpha, const Gauge& g) {
  check_eps(eps);
  if (!(alpha >= 1.0)) throw InvalidArgument("alpha must be >= 1");
  if (eps == 0.0) return 0.0;  // nonexpansive case
  double psi = gauge_eval(g, eps);
  if (psi == 0.0) return std::nullopt;  // no finite Lambda works
  return std::pow(eps, 1.0 - alpha) / psi;
}

}  // namespace fpcheck
