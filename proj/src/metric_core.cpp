#include "fpcheck/metric_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace fpcheck {

namespace {

constexpr double kRelTol = 1e-12;

int grid_points_per_axis(int dim) {
  switch (dim) {
    case 1: return 41;
    case 2: return 9;
    default: return 5;  // dim 3: 125 grid points, 15625 ordered pairs
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw InvalidArgument(msg);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

MetricSpace MetricSpace::finite(std::vector<std::string> labels,
                                std::vector<std::vector<double>> matrix) {
  require(!labels.empty(), "finite space needs at least one point");
  require(matrix.size() == labels.size(), "distance matrix must be square");
  for (const auto& row : matrix) {
    require(row.size() == labels.size(), "distance matrix must be square");
    for (double v : row) require(std::isfinite(v), "distances must be finite");
  }
  MetricSpace s;
  s.kind = SpaceKind::Finite;
  s.labels = std::move(labels);
  s.dist = std::move(matrix);
  return s;
}

MetricSpace MetricSpace::real_line(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b), "interval bounds must be finite");
  require(a < b, "sampling interval must satisfy a < b");
  MetricSpace s;
  s.kind = SpaceKind::RealLine;
  s.lo = a;
  s.hi = b;
  return s;
}

MetricSpace MetricSpace::euclidean(std::vector<double> lo, std::vector<double> hi) {
  require(!lo.empty() && lo.size() <= 3, "euclidean dimension must be 1..3");
  require(lo.size() == hi.size(), "box bounds must have equal dimension");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    require(std::isfinite(lo[i]) && std::isfinite(hi[i]), "box bounds must be finite");
    require(lo[i] < hi[i], "sampling box must satisfy lo < hi componentwise");
  }
  MetricSpace s;
  s.kind = SpaceKind::Euclidean;
  s.dim = static_cast<int>(lo.size());
  s.box_lo = std::move(lo);
  s.box_hi = std::move(hi);
  return s;
}

SelfMap SelfMap::affine(double slope, double offset) {
  SelfMap m;
  m.family = Family::Affine;
  m.slope = slope;
  m.offset = offset;
  return m;
}

SelfMap SelfMap::constant(Point target) {
  SelfMap m;
  m.family = Family::Constant;
  m.target = std::move(target);
  return m;
}

SelfMap SelfMap::translation(double offset) {
  SelfMap m;
  m.family = Family::Translation;
  m.offset = offset;
  return m;
}

SelfMap SelfMap::translation_vec(std::vector<double> offset) {
  SelfMap m;
  m.family = Family::Translation;
  m.voffset = std::move(offset);
  return m;
}

SelfMap SelfMap::negate() {
  SelfMap m;
  m.family = Family::Negate;
  return m;
}

SelfMap SelfMap::finite_table(std::vector<int> table) {
  SelfMap m;
  m.family = Family::FiniteTable;
  m.table = std::move(table);
  return m;
}

SelfMap SelfMap::compose(std::vector<SelfMap> parts) {
  require(!parts.empty(), "compose needs at least one map");
  SelfMap m;
  m.family = Family::Compose;
  m.parts = std::move(parts);
  return m;
}

static void check_point(const MetricSpace& space, const Point& p) {
  switch (space.kind) {
    case SpaceKind::Finite:
      require(p.is_finite(), "point kind does not match finite space");
      require(p.index() >= 0 && p.index() < space.size(), "finite point index out of range");
      break;
    case SpaceKind::RealLine:
      require(p.is_real(), "point kind does not match real line");
      break;
    case SpaceKind::Euclidean:
      require(p.is_vec(), "point kind does not match euclidean space");
      require(static_cast<int>(p.coords().size()) == space.dim,
              "point dimension does not match space");
      break;
  }
}

double distance(const MetricSpace& space, const Point& a, const Point& b) {
  check_point(space, a);
  check_point(space, b);
  switch (space.kind) {
    case SpaceKind::Finite:
      return space.dist[a.index()][b.index()];
    case SpaceKind::RealLine:
      return std::abs(a.scalar() - b.scalar());
    case SpaceKind::Euclidean: {
      double s = 0.0;
      for (int i = 0; i < space.dim; ++i) {
        double d = a.coords()[i] - b.coords()[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
  }
  return 0.0;
}

double norm(const MetricSpace& space, const Point& base, const Point& x) {
  return distance(space, x, base);
}

Point apply(const MetricSpace& space, const SelfMap& map, const Point& x) {
  check_point(space, x);
  switch (map.family) {
    case SelfMap::Family::Affine:
      require(space.kind != SpaceKind::Finite, "affine map needs a continuous space");
      if (space.kind == SpaceKind::RealLine)
        return Point::real(map.slope * x.scalar() + map.offset);
      {
        std::vector<double> v = x.coords();
        for (double& c : v) c = map.slope * c + map.offset;
        return Point::vec(std::move(v));
      }
    case SelfMap::Family::Constant:
      check_point(space, map.target);
      return map.target;
    case SelfMap::Family::Translation:
      if (space.kind == SpaceKind::RealLine) return Point::real(x.scalar() + map.offset);
      require(space.kind == SpaceKind::Euclidean, "translation needs a continuous space");
      {
        require(static_cast<int>(map.voffset.size()) == space.dim,
                "translation offset dimension mismatch");
        std::vector<double> v = x.coords();
        for (int i = 0; i < space.dim; ++i) v[i] += map.voffset[i];
        return Point::vec(std::move(v));
      }
    case SelfMap::Family::Negate:
      if (space.kind == SpaceKind::RealLine) return Point::real(-x.scalar());
      if (space.kind == SpaceKind::Euclidean) {
        std::vector<double> v = x.coords();
        for (double& c : v) c = -c;
        return Point::vec(std::move(v));
      }
      // Finite: only the two-point space, where negation swaps the points.
      require(space.size() == 2, "negate on a finite space needs exactly two points");
      return Point::finite(1 - x.index());
    case SelfMap::Family::FiniteTable:
      require(space.kind == SpaceKind::Finite, "table map needs a finite space");
      require(static_cast<int>(map.table.size()) == space.size(), "table size mismatch");
      {
        int t = map.table[x.index()];
        require(t >= 0 && t < space.size(), "table target index out of range");
        return Point::finite(t);
      }
    case SelfMap::Family::Compose: {
      require(!map.parts.empty(), "compose needs at least one map");
      Point p = x;
      for (const auto& part : map.parts) p = apply(space, part, p);
      return p;
    }
  }
  throw InvalidArgument("unknown map family");
}

std::vector<Point> sample_points(const MetricSpace& space, int count, std::uint64_t seed) {
  require(count >= 1, "count must be >= 1");
  std::vector<Point> pts;
  switch (space.kind) {
    case SpaceKind::Finite:
      for (int i = 0; i < space.size(); ++i) pts.push_back(Point::finite(i));
      return pts;
    case SpaceKind::RealLine: {
      int g = grid_points_per_axis(1);
      for (int i = 0; i < g; ++i)
        pts.push_back(Point::real(space.lo + (space.hi - space.lo) * i / (g - 1)));
      for (int i = 0; i < count; ++i) {
        std::uint64_t st = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
        pts.push_back(Point::real(space.lo + (space.hi - space.lo) * uniform01(st)));
      }
      return pts;
    }
    case SpaceKind::Euclidean: {
      int g = grid_points_per_axis(space.dim);
      std::vector<int> idx(space.dim, 0);
      for (;;) {
        std::vector<double> v(space.dim);
        for (int k = 0; k < space.dim; ++k)
          v[k] = space.box_lo[k] + (space.box_hi[k] - space.box_lo[k]) * idx[k] / (g - 1);
        pts.push_back(Point::vec(std::move(v)));
        int k = 0;
        while (k < space.dim && ++idx[k] == g) idx[k++] = 0;
        if (k == space.dim) break;
      }
      for (int i = 0; i < count; ++i) {
        std::uint64_t st = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
        std::vector<double> v(space.dim);
        for (int k = 0; k < space.dim; ++k)
          v[k] = space.box_lo[k] + (space.box_hi[k] - space.box_lo[k]) * uniform01(st);
        pts.push_back(Point::vec(std::move(v)));
      }
      return pts;
    }
  }
  return pts;
}

std::vector<std::pair<Point, Point>> sample_pairs(const MetricSpace& space,
                                                  int count, std::uint64_t seed) {
  require(count >= 1, "count must be >= 1");
  std::vector<std::pair<Point, Point>> pairs;
  if (space.kind == SpaceKind::Finite) {
    for (int i = 0; i < space.size(); ++i)
      for (int j = 0; j < space.size(); ++j)
        pairs.emplace_back(Point::finite(i), Point::finite(j));
    return pairs;
  }
  // Grid pairs are exhaustive over the axis grid; the remaining budget is
  // filled with per-index seeded uniform pairs.
  std::vector<Point> grid = sample_points(space, 1, seed);
  grid.pop_back();  // drop the single uniform point appended by sample_points
  for (const auto& a : grid)
    for (const auto& b : grid) pairs.emplace_back(a, b);
  for (int i = 0; i < count; ++i) {
    std::uint64_t st = seed ^ (0xd1342543de82ef95ULL * (i + 1));
    auto draw = [&]() -> Point {
      if (space.kind == SpaceKind::RealLine)
        return Point::real(space.lo + (space.hi - space.lo) * uniform01(st));
      std::vector<double> v(space.dim);
      for (int k = 0; k < space.dim; ++k)
        v[k] = space.box_lo[k] + (space.box_hi[k] - space.box_lo[k]) * uniform01(st);
      return Point::vec(std::move(v));
    };
    Point a = draw();
    Point b = draw();
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

AxiomReport check_metric_axioms(const MetricSpace& space, int sample_count,
                                std::uint64_t seed) {
  AxiomReport rep;
  std::vector<Point> pts = sample_points(space, std::max(1, sample_count), seed);
  rep.points_checked = static_cast<int>(pts.size());
  bool exact = space.kind == SpaceKind::Finite;

  auto slack = [&](double a, double b, double c) {
    return exact ? 0.0 : kRelTol * (1.0 + std::abs(a) + std::abs(b) + std::abs(c));
  };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    double dii = distance(space, pts[i], pts[i]);
    if (dii != 0.0 && std::abs(dii) > slack(dii, 0, 0)) {
      rep.identity_ok = false;
      rep.violations.push_back({"identity", {pts[i]}, "d(x,x) != 0"});
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      double dij = distance(space, pts[i], pts[j]);
      if (dij < 0.0) {
        rep.nonneg_ok = false;
        rep.violations.push_back({"nonnegativity", {pts[i], pts[j]}, "d(x,y) < 0"});
      }
      if (exact && i != j && dij <= 0.0) {
        rep.identity_ok = false;
        rep.violations.push_back({"identity", {pts[i], pts[j]},
                                  "distinct points at distance <= 0"});
      }
      double dji = distance(space, pts[j], pts[i]);
      if (std::abs(dij - dji) > slack(dij, dji, 0)) {
        rep.symmetry_ok = false;
        rep.violations.push_back({"symmetry", {pts[i], pts[j]}, "d(x,y) != d(y,x)"});
      }
    }
  }
  // Triangle inequality over all sampled triples; exhaustive and exact on
  // finite spaces.
  for (std::size_t i = 0; i < pts.size() && rep.violations.size() < 64; ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = 0; k < pts.size(); ++k) {
        double dij = distance(space, pts[i], pts[j]);
        double dik = distance(space, pts[i], pts[k]);
        double dkj = distance(space, pts[k], pts[j]);
        if (dij > dik + dkj + slack(dij, dik, dkj)) {
          rep.triangle_ok = false;
          rep.violations.push_back({"triangle", {pts[i], pts[j], pts[k]},
                                    "d(a,b) > d(a,c)+d(c,b)"});
        }
      }
  return rep;
}

}  // namespace fpcheck
