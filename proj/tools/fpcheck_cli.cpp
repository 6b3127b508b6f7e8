// Command-line front end; talks to the core only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpcheck/fpcheck.h"

namespace {

int status_to_exit(fpc_status status) {
  switch (status) {
    case FPC_OK: return 0;
    case FPC_VERDICT_FAILED: return 1;
    default: return 2;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int write_output(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int emit_report(fpc_status status, fpc_report* report, const std::string& out_path,
                bool csv) {
  if (status >= FPC_ERR_PARSE) {
    std::cerr << "error: " << fpc_last_error() << "\n";
    fpc_report_free(report);
    return 2;
  }
  const char* text = csv ? fpc_report_csv(report) : fpc_report_json(report);
  if (text == nullptr) {
    std::cerr << "error: no " << (csv ? "CSV" : "JSON") << " payload in report\n";
    fpc_report_free(report);
    return 2;
  }
  int rc = write_output(text, out_path);
  fpc_report_free(report);
  return rc != 0 ? rc : status_to_exit(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point contraction condition checker"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  std::string reading = "pata", variant = "pata", format = "json";
  std::string gauge = "pow:1";
  std::string falsify_case, gallery_name;
  double alpha = 1.0, eps = -1.0;
  long n = 1;
  bool list_scenarios = false;

  auto* verify = app.add_subcommand("verify", "Check a condition over eps and pair grids");
  verify->add_option("--scenario", scenario_path, "Scenario document")->required();
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* iterate = app.add_subcommand("iterate", "Run Picard iteration");
  iterate->add_option("--scenario", scenario_path, "Scenario document")->required();
  iterate->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* audit = app.add_subcommand("audit", "Audit the convergence-rate bounds");
  audit->add_option("--scenario", scenario_path, "Scenario document")->required();
  audit->add_option("--reading", reading, "Constant-cap reading: pata|berinde");
  audit->add_option("--variant", variant, "omega variant: pata|berinde");
  audit->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  audit->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* omega_cmd = app.add_subcommand("omega", "Evaluate the rate sequence omega_n");
  omega_cmd->add_option("--variant", variant, "pata|berinde");
  omega_cmd->add_option("--alpha", alpha, "alpha >= 1");
  omega_cmd->add_option("--gauge", gauge, "pow:<gamma> or identity");
  omega_cmd->add_option("--n", n, "index n >= 1")->required();

  auto* falsify = app.add_subcommand("falsify", "Run a falsification driver");
  falsify->add_option("--case", falsify_case, "thm11|thm11b|eps0|eps1")->required();
  falsify->add_option("--eps", eps, "fixed eps for thm11b (default 0.5)");
  falsify->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* gallery = app.add_subcommand("gallery", "Published scenario bundles");
  gallery->add_flag("--list", list_scenarios, "Print scenario names, one per line");
  gallery->add_option("--name", gallery_name, "Emit the named scenario document");
  gallery->add_option("--out", out_path, "Write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (verify->parsed() || iterate->parsed() || audit->parsed()) {
    std::string doc;
    if (!read_file(scenario_path, doc)) {
      std::cerr << "error: cannot read " << scenario_path << "\n";
      return 2;
    }
    fpc_report* report = nullptr;
    fpc_status status;
    bool csv = false;
    if (verify->parsed()) {
      status = fpc_verify(doc.c_str(), &report);
    } else if (iterate->parsed()) {
      status = fpc_iterate(doc.c_str(), &report);
    } else {
      status = fpc_audit(doc.c_str(), reading.c_str(), variant.c_str(), &report);
      csv = format == "csv";
    }
    return emit_report(status, report, out_path, csv);
  }

  if (omega_cmd->parsed()) {
    double value = 0.0;
    fpc_status status = fpc_omega(variant.c_str(), alpha, gauge.c_str(), n, &value);
    if (status != FPC_OK) {
      std::cerr << "error: " << fpc_last_error() << "\n";
      return 2;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g\n", value);
    std::cout << buf;
    return 0;
  }

  if (falsify->parsed()) {
    fpc_report* report = nullptr;
    fpc_status status = fpc_falsify(falsify_case.c_str(), eps, &report);
    return emit_report(status, report, out_path, false);
  }

  if (gallery->parsed()) {
    if (!list_scenarios && gallery_name.empty()) {
      std::cerr << "error: gallery needs --list or --name\n";
      return 2;
    }
    fpc_report* report = nullptr;
    fpc_status status;
    if (list_scenarios) {
      status = fpc_gallery_list(&report);
      if (status != FPC_OK) {
        std::cerr << "error: " << fpc_last_error() << "\n";
        fpc_report_free(report);
        return 2;
      }
      // One name per line; minimal JSON-array-of-strings scan.
      std::string text = fpc_report_json(report);
      fpc_report_free(report);
      std::string out;
      bool in_str = false;
      std::string cur;
      for (char c : text) {
        if (c == '"') {
          if (in_str) {
            out += cur;
            out += '\n';
            cur.clear();
          }
          in_str = !in_str;
        } else if (in_str) {
          cur += c;
        }
      }
      return write_output(out.c_str(), out_path);
    }
    status = fpc_gallery_scenario(gallery_name.c_str(), &report);
    return emit_report(status, report, out_path, false);
  }

  return 2;
}
