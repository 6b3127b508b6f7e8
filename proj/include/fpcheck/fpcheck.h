/* C interface to the fixed-point condition checker.
 *
 * All entry points return an fpc_status; results are returned through an
 * opaque fpc_report handle that owns a JSON document (and, for audits, a CSV
 * rendering). On any non-OK status fpc_last_error() describes the failure for
 * the calling thread. Strings returned by accessors stay valid until the
 * report is freed.
 */
#ifndef FPCHECK_H
#define FPCHECK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpc_status {
  FPC_OK = 0,              /* ran and the verdict is positive */
  FPC_VERDICT_FAILED = 1,  /* ran but the expectation/verdict is negative */
  FPC_ERR_PARSE = 2,       /* malformed document or argument */
  FPC_ERR_INVALID = 3,     /* semantic constraint violated */
  FPC_ERR_INTERNAL = 4
} fpc_status;

typedef struct fpc_report fpc_report;

/* Scenario commands. scenario_json is a UTF-8 scenario document. */
fpc_status fpc_verify(const char* scenario_json, fpc_report** out);
fpc_status fpc_iterate(const char* scenario_json, fpc_report** out);

/* reading/variant: "pata" or "berinde". */
fpc_status fpc_audit(const char* scenario_json, const char* reading,
                     const char* variant, fpc_report** out);

/* case_name: thm11, thm11b, eps0 or eps1; eps applies to thm11b (pass a
 * negative value for the default 0.5). */
fpc_status fpc_falsify(const char* case_name, double eps, fpc_report** out);

/* Rate sequence omega_n(alpha). variant: "pata" or "berinde"; gauge:
 * "pow:<gamma>" or "identity". */
fpc_status fpc_omega(const char* variant, double alpha, const char* gauge,
                     long n, double* out);

/* Gallery access. fpc_gallery_list yields a report whose JSON is the array of
 * published scenario names; fpc_gallery_scenario yields the named scenario
 * document. */
fpc_status fpc_gallery_list(fpc_report** out);
fpc_status fpc_gallery_scenario(const char* name, fpc_report** out);

/* Accessors. fpc_report_json never returns NULL on a live report;
 * fpc_report_csv returns NULL when the report has no audit rows. */
const char* fpc_report_json(const fpc_report* report);
const char* fpc_report_csv(const fpc_report* report);
int fpc_report_ok(const fpc_report* report);
void fpc_report_free(fpc_report* report);

/* Last error message for the calling thread; empty string if none. */
const char* fpc_last_error(void);

const char* fpc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FPCHECK_H */
