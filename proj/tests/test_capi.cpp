#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "fpcheck/fpcheck.h"

namespace {

const char* kBanachDoc = R"({
  "space": {"kind": "real_line", "interval": [-10, 10]},
  "map": {"family": "affine", "slope": 0.5, "offset": 1},
  "condition": {
    "family": "pata_original",
    "quantifier": "forall",
    "lambda_cap": 0.5,
    "alpha": 1,
    "beta": 1,
    "gauge": {"family": "power", "gamma": 1},
    "base": 0
  },
  "sampling": {"eps_grid": 101, "pairs": 200, "seed": 42}
})";

bool json_contains(const fpc_report* rep, const char* needle) {
  const char* text = fpc_report_json(rep);
  return text != nullptr && std::strstr(text, needle) != nullptr;
}

}  // namespace

TEST_CASE("verify through the C API") {
  fpc_report* rep = nullptr;
  fpc_status status = fpc_verify(kBanachDoc, &rep);
  CHECK(status == FPC_OK);
  REQUIRE(rep != nullptr);
  CHECK(fpc_report_ok(rep) == 1);
  CHECK(json_contains(rep, "\"holds\": true"));
  CHECK(fpc_report_csv(rep) == nullptr);
  fpc_report_free(rep);
}

TEST_CASE("iterate and audit through the C API") {
  fpc_report* rep = nullptr;
  CHECK(fpc_iterate(kBanachDoc, &rep) == FPC_OK);
  CHECK(json_contains(rep, "\"verdict\": \"converged\""));
  fpc_report_free(rep);

  rep = nullptr;
  CHECK(fpc_audit(kBanachDoc, "pata", "pata", &rep) == FPC_OK);
  REQUIRE(rep != nullptr);
  const char* csv = fpc_report_csv(rep);
  REQUIRE(csv != nullptr);
  CHECK(std::strncmp(csv, "n,lhs,omega,bound,ratio\n", 24) == 0);
  fpc_report_free(rep);

  rep = nullptr;
  CHECK(fpc_audit(kBanachDoc, "sideways", "pata", &rep) == FPC_ERR_INVALID);
  CHECK(rep == nullptr);
}

TEST_CASE("parse errors surface with a message") {
  fpc_report* rep = nullptr;
  CHECK(fpc_verify("{broken", &rep) == FPC_ERR_PARSE);
  CHECK(rep == nullptr);
  CHECK(std::strlen(fpc_last_error()) > 0);
  CHECK(fpc_verify(nullptr, &rep) == FPC_ERR_PARSE);
}

TEST_CASE("omega through the C API") {
  double value = 0.0;
  CHECK(fpc_omega("pata", 1.0, "pow:1", 2, &value) == FPC_OK);
  CHECK(value == 0.75);
  CHECK(fpc_omega("pata", 1.0, "pow:1", 0, &value) == FPC_ERR_INVALID);
  CHECK(fpc_omega("pata", 1.0, "wat", 2, &value) == FPC_ERR_PARSE);
}

TEST_CASE("falsification drivers through the C API") {
  for (const char* name : {"thm11", "thm11b", "eps0", "eps1"}) {
    CAPTURE(name);
    fpc_report* rep = nullptr;
    CHECK(fpc_falsify(name, -1.0, &rep) == FPC_OK);
    CHECK(fpc_report_ok(rep) == 1);
    fpc_report_free(rep);
  }
  fpc_report* rep = nullptr;
  CHECK(fpc_falsify("bogus", -1.0, &rep) == FPC_ERR_INVALID);
}

TEST_CASE("gallery through the C API") {
  fpc_report* rep = nullptr;
  CHECK(fpc_gallery_list(&rep) == FPC_OK);
  CHECK(json_contains(rep, "flip"));
  CHECK(json_contains(rep, "banach"));
  fpc_report_free(rep);

  rep = nullptr;
  CHECK(fpc_gallery_scenario("flip", &rep) == FPC_OK);
  CHECK(json_contains(rep, "\"negate\""));
  fpc_report_free(rep);

  rep = nullptr;
  CHECK(fpc_gallery_scenario("nope", &rep) == FPC_ERR_INVALID);
}

TEST_CASE("null handles are tolerated") {
  CHECK(fpc_report_json(nullptr) == nullptr);
  CHECK(fpc_report_csv(nullptr) == nullptr);
  CHECK(fpc_report_ok(nullptr) == 0);
  fpc_report_free(nullptr);
  CHECK(fpc_version() != nullptr);
}
