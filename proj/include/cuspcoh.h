/* cuspcoh — exact weight combinatorics and archimedean cohomology
 * certificates for GL(n) over a modeled embedding set.
 *
 * C interface to the shared library: opaque handles plus status codes.
 * Returned strings are heap-allocated JSON documents; release them with
 * cusp_string_free. On any non-zero status, cusp_last_error() carries a
 * message for the calling thread (valid until the next failing call).
 */
#ifndef CUSPCOH_H
#define CUSPCOH_H

#include <stdint.h>

#if defined(_WIN32)
#define CUSPCOH_API __declspec(dllexport)
#else
#define CUSPCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cusp_status {
  CUSP_OK = 0,
  CUSP_E_INVALID = 1,  /* malformed input or schema violation */
  CUSP_E_STAGE = 2,    /* a mathematical pipeline stage failed */
  CUSP_E_RESOURCE = 3, /* a configured cap was exceeded */
  CUSP_E_CONTRACT = 4, /* internal invariant violated (a bug) */
  CUSP_E_INTERNAL = 5
} cusp_status;

typedef struct cusp_field cusp_field;   /* embedding set with conjugation */
typedef struct cusp_weight cusp_weight; /* per-embedding integer vectors */

CUSPCOH_API const char *cusp_version(void);
CUSPCOH_API const char *cusp_last_error(void);
CUSPCOH_API void cusp_string_free(char *text);

/* Field datum. JSON schema:
 * {"embeddings": [labels], "conjugation": {label: label},
 *  "galois_generators": [{label: label}]} */
CUSPCOH_API cusp_status cusp_field_parse(const char *json, cusp_field **out);
CUSPCOH_API void cusp_field_free(cusp_field *field);
CUSPCOH_API int cusp_field_degree(const cusp_field *field);
CUSPCOH_API int cusp_field_totally_imaginary(const cusp_field *field);
CUSPCOH_API int cusp_field_totally_real(const cusp_field *field);
/* cap <= 0 selects the default cap. */
CUSPCOH_API cusp_status cusp_field_group_order(const cusp_field *field, int64_t cap,
                                               int64_t *order_out);
/* Orbit partition of the embeddings under the commutator normal closure:
 * {"blocks": [[labels]]}. */
CUSPCOH_API cusp_status cusp_field_f1_partition(const cusp_field *field, int64_t cap,
                                                char **json_out);

/* Weight. JSON schema: {"n": int, "per_embedding": {label: [ints]}}. */
CUSPCOH_API cusp_status cusp_weight_parse(const char *json, cusp_weight **out);
CUSPCOH_API void cusp_weight_free(cusp_weight *weight);
CUSPCOH_API cusp_status cusp_weight_purity(const cusp_field *field, const cusp_weight *weight,
                                           int *is_pure, int64_t *w_out);
CUSPCOH_API cusp_status cusp_weight_strong_purity(const cusp_field *field,
                                                  const cusp_weight *weight, int64_t cap,
                                                  int *is_pure, int64_t *w_out);
/* {"w": int, "blocks": [[labels]], "kappa": [[ints]]}; CUSP_E_STAGE when the
 * weight is not strongly pure. */
CUSPCOH_API cusp_status cusp_weight_base_change(const cusp_field *field,
                                                const cusp_weight *weight, int64_t cap,
                                                char **json_out);

/* Full staged analysis of a scenario document. Writes the report JSON on
 * CUSP_OK (every stage passed) and on CUSP_E_STAGE (some stage failed; the
 * report names it). cap/jobs <= 0 defer to the scenario options/defaults. */
CUSPCOH_API cusp_status cusp_check(const char *scenario_json, int64_t cap, int jobs,
                                   char **report_json_out);

/* Property suites up to rank max_n (1..5); summary JSON always written on
 * CUSP_OK and CUSP_E_STAGE. */
CUSPCOH_API cusp_status cusp_selftest(int max_n, int64_t cap, int jobs, char **summary_json_out);

/* Deterministic table dumps. kind is one of "wedge-p" (n, q), "wedge-u"
 * (n, t), "chi-m" (n; the trivial pair), "dims" (n), "lefschetz" (n).
 * Unused parameters may be negative. */
CUSPCOH_API cusp_status cusp_dump(const char *kind, int n, int q, int t, char **json_out);

#ifdef __cplusplus
}
#endif

#endif /* CUSPCOH_H */
