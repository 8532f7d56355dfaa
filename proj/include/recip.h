/* C API for the reciprocal-matrix efficiency library.
 *
 * All functions return RECIP_OK (0) on success or a nonzero status code; a
 * human-readable diagnostic for the calling thread's last failure is available
 * via recip_last_error(). Matrices are opaque handles released with
 * recip_matrix_free(); every char* output is allocated by the library and
 * must be released with recip_free_string().
 *
 * Reports are JSON. Vertex and row indices in reports are 1-based.
 */
#ifndef RECIP_H
#define RECIP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RECIP_API __declspec(dllexport)
#else
#define RECIP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct recip_matrix recip_matrix;

typedef enum recip_status {
    RECIP_OK = 0,
    RECIP_ERR_NON_POSITIVE_ENTRY = 1,
    RECIP_ERR_RECIPROCITY = 2,
    RECIP_ERR_NON_UNIT_DIAGONAL = 3,
    RECIP_ERR_NOT_SQUARE = 4,
    RECIP_ERR_DIMENSION_MISMATCH = 5,
    RECIP_ERR_INDEX_OUT_OF_RANGE = 6,
    RECIP_ERR_ORDER_TOO_SMALL = 7,
    RECIP_ERR_ORDER_TOO_LARGE = 8,
    RECIP_ERR_ORDER_NOT_ODD = 9,
    RECIP_ERR_NOT_CONSTANT_ROW_SUMS = 10,
    RECIP_ERR_CONSISTENT_INPUT = 11,
    RECIP_ERR_SHAPE_MISMATCH = 12,
    RECIP_ERR_WRONG_ORDER = 13,
    RECIP_ERR_NO_CONVERGENCE = 14,
    RECIP_ERR_NOT_FOUND = 15,
    RECIP_ERR_UNKNOWN_PROPERTY = 16,
    RECIP_ERR_PARSE = 17,
    RECIP_ERR_INTERNAL = 18,
    RECIP_ERR_BAD_ARGUMENT = 19,
} recip_status;

/* Thread-local message for the most recent failure; never NULL. */
RECIP_API const char* recip_last_error(void);

RECIP_API void recip_free_string(char* text);
RECIP_API void recip_matrix_free(recip_matrix* matrix);

/* Parses CSV (one row per line) or JSON {"order", "entries", "tolerance"?}.
 * tolerance <= 0 selects the default reciprocity tolerance (1e-9). */
RECIP_API recip_status recip_matrix_parse(const char* text, double tolerance,
                                          recip_matrix** out);
RECIP_API recip_status recip_matrix_from_entries(const double* entries, int order,
                                                 double tolerance, recip_matrix** out);

RECIP_API int recip_matrix_order(const recip_matrix* matrix);
RECIP_API double recip_matrix_entry(const recip_matrix* matrix, int row, int column);
/* as_json = 0 writes CSV with 17 significant digits. */
RECIP_API recip_status recip_matrix_write(const recip_matrix* matrix, int as_json,
                                          char** out);

/* Full analysis against a weight vector. vector_spec is "perron", "geomean",
 * or a JSON array of positive numbers. Report fields: lambda, perron (vector,
 * residual, iterations), consistent, efficient, sccs, sinks, sources,
 * adjacency, well_behaved {kind, gap, boundary_value}, subvector_profile. */
RECIP_API recip_status recip_analyze(const recip_matrix* matrix, const char* vector_spec,
                                     double edge_tolerance, char** report_json);

/* One-row-one-column extension. mode: "constant", "perron", "inefficient",
 * "efficient". perron_vector_json (JSON array) is required for mode "perron";
 * target_order, a, c, seed apply to "inefficient"; column (1-based) applies
 * to "efficient". Result JSON: matrix, root_x, transform, target_perron,
 * warnings. */
RECIP_API recip_status recip_extend(const recip_matrix* matrix, const char* mode,
                                    int target_order, double a, double c, int column,
                                    uint64_t seed, const char* perron_vector_json,
                                    char** result_json);

/* family: "bozoki", "toeplitz", "blockdouble", "border", "random",
 * "consistent". b applies to the structured families; scale/seed to the
 * random ones. blockdouble doubles bozoki(order, b) with J. */
RECIP_API recip_status recip_generate(const char* family, int order, double b,
                                      double scale, uint64_t seed, recip_matrix** out);

/* Witness JSON: inefficient, sinks, diagonal, B, dominating_row. */
RECIP_API recip_status recip_char4(const recip_matrix* matrix, double edge_tolerance,
                                   char** witness_json);

/* CSV with header dim,samples,inefficient,sinks,sources,mean_lambda_gap. */
RECIP_API recip_status recip_survey(const int* dims, int dim_count, int samples,
                                    double scale, uint64_t seed, int workers,
                                    char** csv_out);

/* Seeded property sweep; names: ll1, lconswell, t2, t6, c4, c27, t5, thind. */
RECIP_API recip_status recip_theorem_sweep(const char* name, int samples, uint64_t seed,
                                           char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* RECIP_H */
