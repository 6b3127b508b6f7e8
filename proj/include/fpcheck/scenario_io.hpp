#pragma once

#include <string>

#include <json.hpp>

#include "fpcheck/gallery.hpp"
#include "fpcheck/iteration.hpp"

namespace fpcheck {

/// Thrown for syntactically or structurally invalid scenario documents;
/// semantic constraint violations raise InvalidArgument with the offending
/// constraint named.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a scenario document. Unknown keys are rejected; omitted iteration
/// and sampling blocks receive the defaults (eps_grid=1001, pairs=2000,
/// seed=42, max_iter=10000, tol=1e-9).
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario(const nlohmann::json& doc);

/// Canonical document form; parse_scenario(scenario_to_json(s)) reproduces s.
nlohmann::json scenario_to_json(const Scenario& s);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j, const MetricSpace& space);

nlohmann::json gauge_to_json(const Gauge& g);
Gauge gauge_from_json(const nlohmann::json& j);

/// Parses compact CLI gauge specs: "pow:<gamma>" or "identity".
Gauge gauge_from_string(const std::string& text);

nlohmann::json verification_to_json(const VerificationReport& r);
nlohmann::json orbit_to_json(const Orbit& o, const MetricSpace& space);
nlohmann::json bound_audit_to_json(const BoundAudit& a);
nlohmann::json almost_audit_to_json(const AlmostAudit& a);
nlohmann::json falsification_to_json(const FalsificationReport& r);

/// Provenance block embedded in every report: tool version plus the seed,
/// grid sizes, and tolerance constants actually used.
nlohmann::json provenance_block(const SamplingConfig& sampling,
                                const IterationConfig& iteration);

/// Flattens bound-audit rows as "n,lhs,omega,bound,ratio" with a header line;
/// numbers carry 17 significant digits so round-trips are bit-stable.
std::string bound_audit_csv(const BoundAudit& a);

std::string format_double(double v);  // 17 significant digits

extern const char* const kToolVersion;

}  // namespace fpcheck
