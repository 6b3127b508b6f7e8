#include "fpcheck/runner.hpp"

#include <algorithm>
#include <cmath>

namespace fpcheck {

namespace {

using nlohmann::json;

// Audits pin x* by iterating to a much tighter gap than the scenario's
// convergence tolerance; the recorded limit must sit within the audit
// tolerances of the true fixed point.
constexpr double kAuditTol = 1e-14;

json base_document(const char* command, const Scenario& s) {
  json doc;
  doc["command"] = command;
  doc["scenario"] = scenario_to_json(s);
  doc["provenance"] = provenance_block(s.sampling, s.iteration);
  return doc;
}

}  // namespace

json run_verify(const Scenario& s) {
  VerificationReport rep = verify(s.spec, s.space, s.map, s.sampling.eps_grid,
                                  s.sampling.pairs, s.sampling.seed);
  json doc = base_document("verify", s);
  doc["verification"] = verification_to_json(rep);
  bool ok = rep.holds;
  if (s.expected.condition_holds) {
    doc["expectation_met"] = rep.holds == *s.expected.condition_holds;
    ok = rep.holds == *s.expected.condition_holds;
  }
  doc["ok"] = ok;
  return doc;
}

json run_iterate(const Scenario& s) {
  Orbit orbit = picard(s.space, s.map, s.iteration.x0, s.iteration.max_iter,
                       s.iteration.tol_conv);
  json doc = base_document("iterate", s);
  doc["orbit"] = orbit_to_json(orbit, s.space);
  bool has_fixed_point = orbit.verdict == OrbitVerdict::Converged;
  bool ok = has_fixed_point;
  if (s.expected.fixed_point) {
    doc["expectation_met"] = has_fixed_point == *s.expected.fixed_point;
    ok = has_fixed_point == *s.expected.fixed_point;
  }
  doc["ok"] = ok;
  return doc;
}

json run_audit(const Scenario& s, BoundReading reading, OmegaVariant variant,
               long n_max) {
  Orbit orbit = picard(s.space, s.map, s.iteration.x0,
                       std::max(s.iteration.max_iter, 1000),
                       std::min(s.iteration.tol_conv, kAuditTol));
  json doc = base_document("audit", s);
  doc["orbit"] = orbit_to_json(orbit, s.space);

  bool all_pass = true;
  bool any_audit = false;

  bool has_pata = s.spec.family == ConditionFamily::PataOriginal ||
                  s.spec.family == ConditionFamily::BerindeLinear ||
                  s.spec.family == ConditionFamily::Berinde316;
  if (has_pata) {
    BoundAudit audit = pata_bound_audit(s.space, s.map, orbit, s.spec.base, s.spec.pata,
                                        reading, variant, n_max);
    doc["bound_audit"] = bound_audit_to_json(audit);
    doc["bound_audit"]["reading"] = reading == BoundReading::Pata ? "pata" : "berinde";
    doc["bound_audit"]["variant"] = variant == OmegaVariant::Pata ? "pata" : "berinde";
    all_pass = all_pass && audit.pass;
    any_audit = true;
  }

  std::optional<double> almost_eps;
  if (s.spec.family == ConditionFamily::AlmostContraction)
    almost_eps = 1.0 - s.spec.almost_delta;
  else if (s.spec.family == ConditionFamily::Berinde316 &&
           s.spec.quantifier == Quantifier::FixedEps && s.spec.fixed_eps > 0.0 &&
           s.spec.fixed_eps < 1.0)
    almost_eps = s.spec.fixed_eps;
  if (almost_eps) {
    AlmostAudit audit = almost_estimate_audit(s.space, orbit, *almost_eps);
    doc["almost_audit"] = almost_audit_to_json(audit);
    doc["almost_audit"]["eps"] = *almost_eps;
    all_pass = all_pass && audit.pass;
    any_audit = true;
  }

  if (!any_audit) throw InvalidArgument("condition family has no audit defined");
  bool ok = all_pass;
  if (s.expected.audits_pass) {
    doc["expectation_met"] = all_pass == *s.expected.audits_pass;
    ok = all_pass == *s.expected.audits_pass;
  }
  doc["ok"] = ok;
  return doc;
}

json run_falsify(const std::string& case_name, std::optional<double> eps) {
  FalsificationReport rep;
  if (case_name == "thm11") {
    rep = falsify_berinde_thm11();
  } else if (case_name == "thm11b") {
    rep = falsify_thm11b(eps.value_or(0.5));
  } else if (case_name == "eps0") {
    rep = insufficiency_demo(InsufficiencyCase::Eps0);
  } else if (case_name == "eps1") {
    rep = insufficiency_demo(InsufficiencyCase::Eps1);
  } else {
    throw InvalidArgument("unknown falsification case: " + case_name +
                          " (expected thm11, thm11b, eps0 or eps1)");
  }
  json doc;
  doc["command"] = "falsify";
  doc["falsification"] = falsification_to_json(rep);
  doc["provenance"] = provenance_block(SamplingConfig{}, IterationConfig{});
  doc["ok"] = rep.as_expected;
  return doc;
}

bool report_ok(const json& report) {
  return report.value("ok", false);
}

}  // namespace fpcheck
