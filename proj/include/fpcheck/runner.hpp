#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fpcheck/scenario_io.hpp"

namespace fpcheck {

/// Command drivers behind the C API and the CLI. Each returns a full report
/// document (result + canonical scenario + provenance); `ok` in the document
/// is the verdict the exit code is derived from: when the scenario carries
/// expected verdicts, ok means the outcome matched them, otherwise ok is the
/// plain holds/pass outcome.
nlohmann::json run_verify(const Scenario& s);
nlohmann::json run_iterate(const Scenario& s);
nlohmann::json run_audit(const Scenario& s, BoundReading reading, OmegaVariant variant,
                         long n_max = 200);
nlohmann::json run_falsify(const std::string& case_name, std::optional<double> eps);

bool report_ok(const nlohmann::json& report);

}  // namespace fpcheck
