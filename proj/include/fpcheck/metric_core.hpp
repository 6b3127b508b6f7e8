#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fpcheck {

/// Thrown on precondition violations (kind mismatches, out-of-range indices,
/// malformed parameters).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { Finite, RealLine, Euclidean };

/// A point of a metric space: finite-space label index, real scalar, or
/// real vector. The kind must match the space it is used with.
struct Point {
  std::variant<int, double, std::vector<double>> value;

  static Point finite(int index) { return Point{index}; }
  static Point real(double x) { return Point{x}; }
  static Point vec(std::vector<double> v) { return Point{std::move(v)}; }

  bool is_finite() const { return std::holds_alternative<int>(value); }
  bool is_real() const { return std::holds_alternative<double>(value); }
  bool is_vec() const { return std::holds_alternative<std::vector<double>>(value); }

  int index() const { return std::get<int>(value); }
  double scalar() const { return std::get<double>(value); }
  const std::vector<double>& coords() const { return std::get<std::vector<double>>(value); }
};

/// A metric space: a finite labelled set with an explicit distance matrix,
/// the real line with a sampling interval, or R^d (d <= 3) with a sampling box.
/// For the continuous kinds the interval/box bounds only the sampling region,
/// not the space itself.
struct MetricSpace {
  SpaceKind kind = SpaceKind::RealLine;

  // Finite
  std::vector<std::string> labels;
  std::vector<std::vector<double>> dist;

  // RealLine
  double lo = 0.0, hi = 0.0;

  // Euclidean
  int dim = 0;
  std::vector<double> box_lo, box_hi;

  static MetricSpace finite(std::vector<std::string> labels,
                            std::vector<std::vector<double>> matrix);
  static MetricSpace real_line(double a, double b);
  static MetricSpace euclidean(std::vector<double> lo, std::vector<double> hi);

  int size() const { return static_cast<int>(labels.size()); }
};

/// A self-map of the space, drawn from a closed set of families so scenarios
/// stay declarative and serializable.
struct SelfMap {
  enum class Family { Affine, Constant, Translation, Negate, FiniteTable, Compose };

  Family family = Family::Affine;
  double slope = 0.0;            // Affine
  double offset = 0.0;           // Affine / Translation (real line)
  std::vector<double> voffset;   // Translation (euclidean)
  Point target;                  // Constant
  std::vector<int> table;        // FiniteTable
  std::vector<SelfMap> parts;    // Compose, applied left-to-right

  static SelfMap affine(double slope, double offset);
  static SelfMap constant(Point target);
  static SelfMap translation(double offset);
  static SelfMap translation_vec(std::vector<double> offset);
  static SelfMap negate();
  static SelfMap finite_table(std::vector<int> table);
  static SelfMap compose(std::vector<SelfMap> parts);
};

double distance(const MetricSpace& space, const Point& a, const Point& b);

/// ||x|| := d(x, base).
double norm(const MetricSpace& space, const Point& base, const Point& x);

Point apply(const MetricSpace& space, const SelfMap& map, const Point& x);

struct AxiomViolation {
  std::string axiom;  // "nonnegativity" | "identity" | "symmetry" | "triangle"
  std::vector<Point> witness;
  std::string detail;
};

struct AxiomReport {
  bool nonneg_ok = true;
  bool identity_ok = true;
  bool symmetry_ok = true;
  bool triangle_ok = true;
  std::vector<AxiomViolation> violations;
  int points_checked = 0;

  bool all_ok() const { return nonneg_ok && identity_ok && symmetry_ok && triangle_ok; }
};

/// Exact exhaustive check on finite spaces; sampled check (grid + seeded
/// uniform points, relative tolerance 1e-12) on continuous spaces.
AxiomReport check_metric_axioms(const MetricSpace& space,
                                int sample_count = 64, std::uint64_t seed = 42);

/// Finite spaces: all ordered pairs, count ignored. Continuous spaces: all
/// ordered pairs of a fixed grid (41 points per axis in 1D) plus `count`
/// seeded uniform pairs. Same seed yields the same list; each sampled pair is
/// seeded by its own index so the result does not depend on evaluation order.
std::vector<std::pair<Point, Point>> sample_pairs(const MetricSpace& space,
                                                  int count, std::uint64_t seed);

/// Deterministic point sample with the same grid-plus-uniform scheme.
std::vector<Point> sample_points(const MetricSpace& space, int count, std::uint64_t seed);

// splitmix64; used for all seeded sampling so results are platform-stable.
std::uint64_t splitmix64(std::uint64_t& state);
double uniform01(std::uint64_t& state);

}  // namespace fpcheck
