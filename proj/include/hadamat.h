/* hadamat: exact verification of complex Hadamard matrices, mutually
 * unbiased bases and Hadamard equivalence.
 *
 * C surface of the shared library. Matrices are opaque handles; every
 * function returns an hm_status, with hm_last_error() holding a message
 * for the most recent failure on the calling thread. Strings returned
 * through char** are heap-allocated and released with hm_string_free().
 */
#ifndef HADAMAT_H
#define HADAMAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hm_matrix hm_matrix;

typedef enum hm_status {
    HM_OK = 0,
    HM_ERR_INVALID_ARGUMENT = 1,
    HM_ERR_UNSUPPORTED_ORDER = 2,
    HM_ERR_ORDER_MISMATCH = 3,
    HM_ERR_DIMENSION_MISMATCH = 4,
    HM_ERR_DOMAIN = 5,
    HM_ERR_NOT_REPRESENTABLE = 6,
    HM_ERR_PARSE = 7,
    HM_ERR_BUDGET_EXCEEDED = 8,
    HM_ERR_UNKNOWN_NAME = 9,
    HM_ERR_EXCEEDS_MAXIMUM = 10,
    HM_ERR_COMPLEXITY_GUARD = 11,
    HM_ERR_INTERNAL = 12
} hm_status;

const char* hm_version(void);
const char* hm_last_error(void);

void hm_string_free(char* s);
void hm_matrix_free(hm_matrix* m);

/* Construction and serialization (format "hadamat-matrix v1"). */
hm_status hm_matrix_parse(const char* text, hm_matrix** out);
hm_status hm_matrix_print(const hm_matrix* m, char** out);
hm_status hm_matrix_dim(const hm_matrix* m, int* out);
hm_status hm_matrix_order(const hm_matrix* m, int* out);
hm_status hm_matrix_embed(const hm_matrix* m, int order, hm_matrix** out);

/* Catalog access; names like "F_5", "A_11", "D_1" (underscores optional). */
hm_status hm_gen_named(const char* name, hm_matrix** out);
hm_status hm_catalog_names(char** out); /* newline-separated */
hm_status hm_gen_fourier(int n, hm_matrix** out);
hm_status hm_gen_identity(int n, hm_matrix** out);
/* row: comma-separated entries in the file entry syntax (e.g.
 * "1,z5^1,z5^4,z5^4,z5^1"); order 0 derives the root order from the
 * entries. */
hm_status hm_gen_circulant(const char* row, int order, hm_matrix** out);

hm_status hm_dephase(const hm_matrix* m, hm_matrix** out);

/* kind: "hadamard" | "unitary" | "inverse-orthogonal" | "mub".
 * names may be NULL (inputs are then numbered). verdict and out_text may
 * be NULL when not wanted. */
hm_status hm_check(const char* kind, const hm_matrix* const* ms,
                   const char* const* names, size_t count, int as_json,
                   int* verdict, char** out_text);

hm_status hm_equiv(const hm_matrix* a, const hm_matrix* b, const char* name_a,
                   const char* name_b, int as_json, int* verdict, char** out_text);

/* Exhaustive circulant search; budget 0 reads HADAMAT_BUDGET (default
 * 10^8). as_matrices expands rows into full matrix files. */
hm_status hm_search(int n, int root_order, int fix_first, long budget,
                    int as_matrices, char** out_text);

/* branch: "principal" | "conjugate" | NULL (principal). */
hm_status hm_verify_paper(const char* branch, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HADAMAT_H */
