/* C interface to the xxzkink library.
 *
 * All library state lives behind the two opaque handle types. Functions
 * returning int use 0 for success and a negative value for failure; the
 * thread-local message from xxz_last_error() describes the most recent
 * failure. Experiment runs additionally carry the report status:
 *   0  all checks passed
 *   1  the experiment ran but a numerical check failed
 *   2  the configuration was invalid
 */
#ifndef XXZKINK_H
#define XXZKINK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define XXZ_API __declspec(dllexport)
#else
#define XXZ_API __attribute__((visibility("default")))
#endif

#define XXZ_STATUS_OK 0
#define XXZ_STATUS_CHECK_FAILED 1
#define XXZ_STATUS_INVALID_CONFIG 2

typedef struct xxz_config xxz_config;
typedef struct xxz_report xxz_report;

XXZ_API const char* xxz_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
XXZ_API const char* xxz_last_error(void);

/* Experiment names: verify-kink, profile, gap-scan, qsos, interface-2d. */
XXZ_API xxz_config* xxz_config_create(const char* experiment);
XXZ_API xxz_config* xxz_config_load(const char* path);
XXZ_API void xxz_config_destroy(xxz_config* config);

/* Applies one key=value assignment using the config-file key names. */
XXZ_API int xxz_config_set(xxz_config* config, const char* key, const char* value);
XXZ_API int xxz_config_add_z(xxz_config* config, double re, double im);
XXZ_API int xxz_config_clear_z(xxz_config* config);

/* Runs the experiment. Returns NULL only on allocation failure; run problems
 * are reported through the report status. */
XXZ_API xxz_report* xxz_run(const xxz_config* config);
XXZ_API void xxz_report_destroy(xxz_report* report);

XXZ_API int xxz_report_status(const xxz_report* report);
XXZ_API const char* xxz_report_format(const xxz_report* report); /* "json", "csv", "none" */
XXZ_API const char* xxz_report_payload(const xxz_report* report);
XXZ_API const char* xxz_report_summary(const xxz_report* report);

/* Atomically writes the payload (temp file + rename). */
XXZ_API int xxz_report_write(const xxz_report* report, const char* path);

/* Small direct entry points, mainly for language bindings. */

/* q in (0,1] with (q + 1/q)/2 = delta; fails for delta < 1. */
XXZ_API int xxz_q_from_delta(double delta, double* q_out);

/* Per-site <S3> of the kink state phi(z) on the centered n_sites chain;
 * out must hold n_sites doubles. */
XXZ_API int xxz_kink_profile(int twice_s, double delta, int n_sites, double z_re, double z_im,
                             double* out);

#ifdef __cplusplus
}
#endif

#endif
