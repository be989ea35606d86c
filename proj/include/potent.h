/* C API for the potent library: degree-sequence parsing and graphicality
 * tests, potentially-H-graphic characterization predicates, the exhaustive
 * realization oracle, sigma(H, n) computation, and the predicate-vs-oracle
 * verification campaign.
 *
 * Conventions:
 *   - every fallible function returns a potent_status; potent_last_error()
 *     holds a thread-local message describing the most recent failure
 *   - objects behind opaque handles are freed with their *_free function
 *   - strings returned through char** are heap-allocated; release them with
 *     potent_string_free
 *   - sequence positions are 1-based; JSON payloads use 1-based vertex labels
 */

#ifndef POTENT_H
#define POTENT_H

#include <stddef.h>

#if defined(_WIN32)
#define POTENT_API __declspec(dllexport)
#else
#define POTENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum potent_status {
  POTENT_OK = 0,
  POTENT_ERROR_PARSE = 1,    /* malformed sequence text */
  POTENT_ERROR_DOMAIN = 2,   /* input outside the operation's domain */
  POTENT_ERROR_CAP = 3,      /* oracle vertex cap exceeded */
  POTENT_ERROR_INVALID = 4,  /* bad argument (null handle, bad index, bad tag) */
  POTENT_ERROR_LAYOFF = 5,   /* lay-off demand not satisfiable: not graphic */
  POTENT_ERROR_INTERNAL = 6
} potent_status;

typedef enum potent_target {
  POTENT_TARGET_K23 = 0,
  POTENT_TARGET_K5P4 = 1,
  POTENT_TARGET_K33 = 2,
  POTENT_TARGET_K6C6 = 3
} potent_target;

typedef enum potent_graphic_method {
  POTENT_GRAPHIC_ERDOS_GALLAI = 0,
  POTENT_GRAPHIC_KLEITMAN_WANG = 1
} potent_graphic_method;

typedef enum potent_oracle_mode {
  POTENT_ORACLE_EXHAUSTIVE = 0,
  POTENT_ORACLE_TOP_DEGREE = 1
} potent_oracle_mode;

typedef enum potent_sigma_method {
  POTENT_SIGMA_PREDICATE = 0,
  POTENT_SIGMA_ORACLE = 1
} potent_sigma_method;

typedef struct potent_sequence potent_sequence;
typedef struct potent_enum potent_enum;

POTENT_API const char* potent_last_error(void);
POTENT_API void potent_string_free(char* s);

/* sequences ---------------------------------------------------------------- */

POTENT_API potent_status potent_sequence_parse(const char* text, potent_sequence** out);
POTENT_API potent_status potent_sequence_from_terms(const int* terms, size_t count, potent_sequence** out);
POTENT_API void potent_sequence_free(potent_sequence* seq);

POTENT_API potent_status potent_sequence_format(const potent_sequence* seq, char** out);
POTENT_API int potent_sequence_length(const potent_sequence* seq);
/* 1-based position; returns -1 on a bad index */
POTENT_API int potent_sequence_term(const potent_sequence* seq, int k);
POTENT_API potent_status potent_sequence_stats(const potent_sequence* seq, long long* sigma, int* m, int* h,
                                               int* n);

/* Residual sequence after laying off d_k (1-based). POTENT_ERROR_LAYOFF
 * signals that the demand cannot be met, which certifies the sequence is not
 * graphic. */
POTENT_API potent_status potent_sequence_lay_off(const potent_sequence* seq, int k, potent_sequence** out);

POTENT_API potent_status potent_is_graphic(const potent_sequence* seq, potent_graphic_method method,
                                           int* graphic);
/* 1 when 1 <= m <= 2, h = 1 and sigma even (then the sequence is graphic). */
POTENT_API potent_status potent_theorem22_applies(const potent_sequence* seq, int* applies);

/* characterization predicates ---------------------------------------------- */

/* Verdict JSON: {"potential": bool, "violated": [{theorem, condition, bindings}]}. */
POTENT_API potent_status potent_potential_check(const potent_sequence* seq, potent_target target,
                                                char** verdict_json);

/* oracle -------------------------------------------------------------------- */

/* Witness JSON {sequence, target, mode, potential: true, graph, embedding} or
 * exhaustion JSON {sequence, target, mode, potential: false, exhausted: true,
 * states_explored}. max_vertices caps the search (hard maximum 16). */
POTENT_API potent_status potent_oracle_search(const potent_sequence* seq, potent_target target,
                                              potent_oracle_mode mode, int max_vertices, char** result_json);

/* sigma --------------------------------------------------------------------- */

/* {"target", "n", "sigma", "extremal", "method", "sequences_scanned"} */
POTENT_API potent_status potent_sigma_value(potent_target target, int n, potent_sigma_method method,
                                            int max_vertices, char** result_json);
POTENT_API potent_status potent_extremal_sequence(potent_target target, int n, potent_sequence** out);
/* Closed form where asserted (K33: n >= 11, K6C6: n >= 6); POTENT_ERROR_DOMAIN
 * when no closed form is asserted at this n. */
POTENT_API potent_status potent_sigma_closed_form(potent_target target, int n, long long* value);

/* verification campaign ------------------------------------------------------ */

/* {"target", "n_min", "n_max", "sequences_tested", "agreements", "mismatches"} */
POTENT_API potent_status potent_verify_range(potent_target target, int n_min, int n_max, int workers,
                                             int max_vertices, char** report_json);

/* graphic-sequence enumeration (lexicographically decreasing) ---------------- */

POTENT_API potent_status potent_enum_graphic_create(int n, int positive_only, potent_enum** out);
/* 1: a sequence was yielded; 0: exhausted (out untouched); negative: error */
POTENT_API int potent_enum_graphic_next(potent_enum* e, potent_sequence** out);
POTENT_API void potent_enum_free(potent_enum* e);

#ifdef __cplusplus
}
#endif

#endif /* POTENT_H */
