#include "fpcheck/fpcheck.h"

#include <exception>
#include <memory>
#include <optional>
#include <string>

#include "fpcheck/runner.hpp"

using nlohmann::json;

struct fpc_report {
  std::string json_text;
  std::string csv_text;
  bool ok = false;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
fpc_status guarded(fpc_report** out, Fn&& fn) {
  if (out == nullptr) {
    set_error("output pointer is null");
    return FPC_ERR_INVALID;
  }
  *out = nullptr;
  try {
    g_last_error.clear();
    auto rep = std::make_unique<fpc_report>();
    fn(*rep);
    bool ok = rep->ok;
    *out = rep.release();
    return ok ? FPC_OK : FPC_VERDICT_FAILED;
  } catch (const fpcheck::ParseError& e) {
    set_error(e.what());
    return FPC_ERR_PARSE;
  } catch (const fpcheck::InvalidArgument& e) {
    set_error(e.what());
    return FPC_ERR_INVALID;
  } catch (const json::exception& e) {
    set_error(e.what());
    return FPC_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FPC_ERR_INTERNAL;
  }
}

fpcheck::Scenario parse_or_throw(const char* scenario_json) {
  if (scenario_json == nullptr) throw fpcheck::ParseError("scenario document is null");
  return fpcheck::parse_scenario(std::string(scenario_json));
}

void fill_from_document(fpc_report& rep, const json& doc) {
  rep.json_text = doc.dump(2) + "\n";
  rep.ok = fpcheck::report_ok(doc);
}

fpcheck::BoundReading reading_from(const char* s) {
  std::string v = s ? s : "pata";
  if (v == "pata") return fpcheck::BoundReading::Pata;
  if (v == "berinde") return fpcheck::BoundReading::Berinde;
  throw fpcheck::InvalidArgument("reading must be 'pata' or 'berinde'");
}

fpcheck::OmegaVariant variant_from(const char* s) {
  std::string v = s ? s : "pata";
  if (v == "pata") return fpcheck::OmegaVariant::Pata;
  if (v == "berinde") return fpcheck::OmegaVariant::Berinde;
  throw fpcheck::InvalidArgument("variant must be 'pata' or 'berinde'");
}

}  // namespace

extern "C" {

fpc_status fpc_verify(const char* scenario_json, fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    fill_from_document(rep, fpcheck::run_verify(parse_or_throw(scenario_json)));
  });
}

fpc_status fpc_iterate(const char* scenario_json, fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    fill_from_document(rep, fpcheck::run_iterate(parse_or_throw(scenario_json)));
  });
}

fpc_status fpc_audit(const char* scenario_json, const char* reading,
                     const char* variant, fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    fpcheck::Scenario s = parse_or_throw(scenario_json);
    fpcheck::BoundReading r = reading_from(reading);
    fpcheck::OmegaVariant v = variant_from(variant);
    json doc = fpcheck::run_audit(s, r, v);
    fill_from_document(rep, doc);
    if (doc.contains("bound_audit")) {
      // Rebuild the audit for the CSV rendering from the emitted rows.
      fpcheck::BoundAudit audit;
      for (const auto& row : doc["bound_audit"]["rows"]) {
        audit.rows.push_back({row["n"].get<long>(), row["lhs"].get<double>(),
                              row["omega"].get<double>(), row["bound"].get<double>(),
                              row["ratio"].get<double>()});
      }
      rep.csv_text = fpcheck::bound_audit_csv(audit);
    }
  });
}

fpc_status fpc_falsify(const char* case_name, double eps, fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    if (case_name == nullptr) throw fpcheck::InvalidArgument("case name is null");
    std::optional<double> e;
    if (eps >= 0.0) e = eps;
    fill_from_document(rep, fpcheck::run_falsify(case_name, e));
  });
}

fpc_status fpc_omega(const char* variant, double alpha, const char* gauge,
                     long n, double* out) {
  if (out == nullptr) {
    set_error("output pointer is null");
    return FPC_ERR_INVALID;
  }
  try {
    g_last_error.clear();
    fpcheck::Gauge g = fpcheck::gauge_from_string(gauge ? gauge : "pow:1");
    *out = fpcheck::omega(variant_from(variant), alpha, g, n);
    return FPC_OK;
  } catch (const fpcheck::ParseError& e) {
    set_error(e.what());
    return FPC_ERR_PARSE;
  } catch (const fpcheck::InvalidArgument& e) {
    set_error(e.what());
    return FPC_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FPC_ERR_INTERNAL;
  }
}

fpc_status fpc_gallery_list(fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    json names = json::array();
    for (const auto& n : fpcheck::scenario_names()) names.push_back(n);
    rep.json_text = names.dump(2) + "\n";
    rep.ok = true;
  });
}

fpc_status fpc_gallery_scenario(const char* name, fpc_report** out) {
  return guarded(out, [&](fpc_report& rep) {
    if (name == nullptr) throw fpcheck::InvalidArgument("scenario name is null");
    fpcheck::Scenario s = fpcheck::scenario(name);
    rep.json_text = fpcheck::scenario_to_json(s).dump(2) + "\n";
    rep.ok = true;
  });
}

const char* fpc_report_json(const fpc_report* report) {
  return report ? report->json_text.c_str() : nullptr;
}

const char* fpc_report_csv(const fpc_report* report) {
  if (report == nullptr || report->csv_text.empty()) return nullptr;
  return report->csv_text.c_str();
}

int fpc_report_ok(const fpc_report* report) { return report && report->ok ? 1 : 0; }

void fpc_report_free(fpc_report* report) { delete report; }

const char* fpc_last_error(void) { return g_last_error.c_str(); }

const char* fpc_version(void) { return fpcheck::kToolVersion; }

}  // extern "C"
