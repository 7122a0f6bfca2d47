/* C interface to the mmineig library: minimum-eigenvalue bounds for
 * nonsingular M-matrices. Opaque handles, integer status codes, and a
 * thread-local error message. */
#ifndef MMINEIG_H
#define MMINEIG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mm_matrix mm_matrix;
typedef struct mm_report mm_report;

typedef enum mm_status {
    MM_OK = 0,
    MM_ERR_INPUT = 1,      /* malformed input or out-of-contract argument */
    MM_ERR_SINGULAR = 2,   /* matrix numerically singular */
    MM_ERR_NO_CONVERGENCE = 3,
    MM_ERR_INTERNAL = 4
} mm_status;

/* Message describing the last failure on this thread; never NULL. */
const char* mm_last_error(void);

/* ---- matrices ---------------------------------------------------------- */

/* entries: n*n row-major doubles. */
mm_status mm_matrix_create(int n, const double* entries, mm_matrix** out);

/* format: "plain", "csv", "json", or NULL to infer from the file extension.
 * A fixture name ("ex1", "ex2", "ex3") as path bypasses the filesystem. */
mm_status mm_matrix_parse_file(const char* path, const char* format, mm_matrix** out);

mm_status mm_matrix_fixture(const char* name, mm_matrix** out);

int mm_matrix_order(const mm_matrix* m);
double mm_matrix_get(const mm_matrix* m, int i, int j);

mm_status mm_matrix_write_file(const mm_matrix* m, const char* path, const char* format);

/* Renders to a malloc'd string; release with mm_string_free. */
mm_status mm_matrix_render(const mm_matrix* m, const char* format, char** out);

void mm_matrix_free(mm_matrix* m);
void mm_string_free(char* s);

/* ---- classification and the oracle ------------------------------------- */

typedef struct mm_class_info {
    int is_z_matrix;
    int positive_diagonal;
    int is_sdd;
    int is_wcdd;
    int is_m_matrix;
    double zero_tolerance;
} mm_class_info;

/* eps < 0 selects the default tolerance. dominance_ratios may be NULL,
 * otherwise it receives n doubles. */
mm_status mm_classify(const mm_matrix* m, double eps, mm_class_info* info,
                      double* dominance_ratios);

mm_status mm_tau_oracle(const mm_matrix* m, double tol, double* tau);

/* ---- bound reports ------------------------------------------------------ */

mm_status mm_report_run(const mm_matrix* m, int t_max, double tol, mm_report** out);

int mm_report_row_count(const mm_report* r);

typedef struct mm_bound_row {
    const char* method;  /* owned by the report */
    const char* kind;    /* "lower" or "upper" */
    int t;               /* -1 when the bound has no iteration index */
    int applicable;      /* 0/1; value is meaningless when 0 */
    double value;
    const char* reason;  /* non-empty when inapplicable; owned by the report */
} mm_bound_row;

mm_status mm_report_row(const mm_report* r, int index, mm_bound_row* row);

/* has_tau receives 0 when no oracle value exists (not an M-matrix). */
mm_status mm_report_tau(const mm_report* r, double* tau, int* has_tau);

void mm_report_free(mm_report* r);

/* ---- generators and the property suite ---------------------------------- */

mm_status mm_generate_sdd(int n, uint64_t seed, double dominance_margin, double density,
                          double magnitude, mm_matrix** out);

mm_status mm_generate_ds_inverse(int n, uint64_t seed, double strength, mm_matrix** out);

/* Runs the seeded property battery: `trials` strictly-dominant instances plus
 * trials/4 doubly-stochastic-inverse instances derived from `seed`.
 * failures_text (optional) receives one line per failure, malloc'd. */
mm_status mm_verify(int trials, int t_max, uint64_t seed, char** failures_text,
                    int* failure_count, double* max_gap);

#ifdef __cplusplus
}
#endif

#endif /* MMINEIG_H */
