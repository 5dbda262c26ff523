/* Public C interface for the exact spectra toolkit.
 *
 * Everything exact lives behind this wall: callers pass and receive JSON
 * or plain C values, never GMP objects.  All strings returned through
 * char** out-parameters are heap copies owned by the caller; release them
 * with ls_string_free.  Handles are opaque and freed by their matching
 * *_free call.  Every entry point is safe to call from multiple threads
 * as long as no handle is shared across threads without synchronization.
 */
#ifndef LAPLACE_SPECTRA_H
#define LAPLACE_SPECTRA_H

#if defined(_WIN32)
#define LS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define LS_API __attribute__((visibility("default")))
#else
#define LS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ls_status {
  LS_OK = 0,
  LS_ERR_USAGE = 1,      /* malformed input: bad JSON, bad key, bad value */
  LS_ERR_DOMAIN = 2,     /* mathematically meaningless request */
  LS_ERR_CAPABILITY = 3, /* outside what the implementation covers */
  LS_ERR_CAPACITY = 4,   /* past a hard size or enumeration cap */
  LS_ERR_INVARIANT = 5,  /* an internal consistency check failed */
  LS_ERR_UNDECIDED = 6,  /* a certification stayed inconclusive */
  LS_ERR_NOMEM = 7,
  LS_ERR_INTERNAL = 8
} ls_status;

/* Library version string, static storage, never freed. */
LS_API const char* ls_version(void);

/* Stable name for a status code ("ok", "usage", ...), static storage. */
LS_API const char* ls_status_name(ls_status s);

/* Message of the most recent failure on this thread, static storage valid
 * until the next failing call on the same thread.  Empty string if none. */
LS_API const char* ls_last_error(void);

/* Frees a string returned through a char** out-parameter.  NULL is ok. */
LS_API void ls_string_free(char* s);

/* Runs one command described by a JSON configuration object and returns
 * the full report as a JSON (or CSV) string in *out.
 *
 * The configuration selects the command via its "command" key; see the
 * README for the per-command schema.  On LS_OK the caller owns *out.
 * On LS_ERR_UNDECIDED *out is ALSO set, and holds the complete report of
 * the inconclusive run; every other error leaves *out untouched.
 */
LS_API ls_status ls_run_json(const char* config_json, char** out);

/* ---- direct root-system handle, for callers that want scalar answers
 *      without parsing reports ---- */

typedef struct ls_root_system ls_root_system;

/* token: "A1".."A4", "B2".."B4", "C2".."C4", "D2".."D4", "BC1".."BC4",
 * "G2".  mult_json: NULL, or an object like {"short": 2, "long": 1}
 * assigning a multiplicity to each length class.  delta_weighted != 0
 * weighs the half-sum by multiplicities. */
LS_API ls_status ls_root_system_create(const char* token, const char* mult_json,
                                int delta_weighted, ls_root_system** out);
LS_API void ls_root_system_free(ls_root_system* rs);

LS_API ls_status ls_root_system_rank(const ls_root_system* rs, int* out);
LS_API ls_status ls_root_system_positive_count(const ls_root_system* rs, int* out);
LS_API ls_status ls_root_system_weyl_order(const ls_root_system* rs, long* out);

/* Squared norm of the half-sum vector, as a "p/q" string. */
LS_API ls_status ls_root_system_delta_norm2(const ls_root_system* rs, char** out);

/* Spectral data of the weight with the given fundamental-weight
 * coordinates (a JSON array like ["1", "0"] or [1, 0]).  a2_out receives
 * (mu + delta, mu + delta) and lambda_out the operator eigenvalue, both
 * as "p/q" strings; either out-pointer may be NULL. */
LS_API ls_status ls_root_system_casimir(const ls_root_system* rs,
                                 const char* mu_fw_json, char** a2_out,
                                 char** lambda_out);

/* Full structural description, same shape as the "roots" report payload. */
LS_API ls_status ls_root_system_describe_json(const ls_root_system* rs, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LAPLACE_SPECTRA_H */
