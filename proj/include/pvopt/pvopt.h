/* Public C interface to the PV investment optimizer.
 *
 * Usage: open a session from a JSON config, run one command, then read the
 * named output documents (or write them all to a directory).  Every call
 * returns a status code; on failure pvopt_last_error() holds a message.
 * Strings returned by the API stay valid until the next call that runs a
 * command on, or closes, the same session.  Sessions are not thread-safe;
 * distinct sessions are independent.
 */
#ifndef PVOPT_H
#define PVOPT_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define PVOPT_API __declspec(dllexport)
#else
#define PVOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pvopt_session pvopt_session;

typedef enum pvopt_status {
  PVOPT_OK = 0,
  PVOPT_ERR_ARGUMENT = 1,    /* bad call arguments (null, unknown plan, ...) */
  PVOPT_ERR_IO = 2,          /* file missing or unreadable/unwritable */
  PVOPT_ERR_PARSE = 3,       /* malformed JSON or CSV */
  PVOPT_ERR_VALIDATION = 4,  /* input content rejected */
  PVOPT_ERR_NO_FEASIBLE = 5, /* optimizer found no point inside the bounds */
  PVOPT_ERR_INTERNAL = 6,
} pvopt_status;

PVOPT_API const char* pvopt_version(void);
PVOPT_API const char* pvopt_status_name(pvopt_status status);

/* Opens a session from a config file.  On success *out owns the session
 * and must be released with pvopt_session_close. */
PVOPT_API pvopt_status pvopt_session_open(const char* config_path,
                                          pvopt_session** out);
PVOPT_API void pvopt_session_close(pvopt_session* s);

/* Message for the most recent failing call on this session ("" if none). */
PVOPT_API const char* pvopt_last_error(const pvopt_session* s);

/* Replaces the optimizer seed from the config. */
PVOPT_API pvopt_status pvopt_set_seed(pvopt_session* s, uint64_t seed);

PVOPT_API pvopt_status pvopt_run_optimize(pvopt_session* s);
PVOPT_API pvopt_status pvopt_run_evaluate(pvopt_session* s,
                                          const char* plan_id, double tilt_deg,
                                          double azimuth_deg, int panels);
PVOPT_API pvopt_status pvopt_run_sweep_size(pvopt_session* s,
                                            const char* plan_id,
                                            double tilt_deg,
                                            double azimuth_deg,
                                            int panels_min, int panels_max);
PVOPT_API pvopt_status pvopt_run_sweep_orientation(
    pvopt_session* s, const char* plan_id, int panels, double tilt_min,
    double tilt_max, double tilt_step, double az_min, double az_max,
    double az_step);
PVOPT_API pvopt_status pvopt_run_validate(pvopt_session* s);

/* Output documents produced by the last successful run_* call. */
PVOPT_API size_t pvopt_output_count(const pvopt_session* s);
PVOPT_API const char* pvopt_output_name(const pvopt_session* s, size_t index);
PVOPT_API const char* pvopt_output_text(const pvopt_session* s, size_t index);

/* Writes every output document into dir (created if needed). */
PVOPT_API pvopt_status pvopt_write_outputs(pvopt_session* s, const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* PVOPT_H */
