/* quasiflat: flat and quasi-flat matrix models of quantum permutation groups.
 *
 * C API of the shared library. All heavy objects live behind opaque handles;
 * every call returns a qf_status and reports are returned as JSON strings
 * owned by the library (release them with qf_string_free). The last error
 * message is thread-local and readable through qf_last_error.
 */

#ifndef QUASIFLAT_H
#define QUASIFLAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf_status {
  QF_OK = 0,
  QF_ERR_INVALID_ARGUMENT = 1,
  QF_ERR_PARSE = 2,
  QF_ERR_CAP_EXCEEDED = 3,
  QF_ERR_NUMERIC = 4,
  QF_ERR_PRECONDITION = 5,
  QF_ERR_INTERNAL = 6
} qf_status;

typedef struct qf_group qf_group;
typedef struct qf_square qf_square;
typedef struct qf_family qf_family;

const char* qf_version(void);
const char* qf_last_error(void);
void qf_string_free(char* s);

/* Groups parse from {"degree": N, "generators": [[...], ...]} or a bare
 * generator array; permutations are one-based image arrays. */
qf_status qf_group_parse(const char* json, qf_group** out);
void qf_group_free(qf_group* g);
qf_status qf_group_order(const qf_group* g, uint64_t* out);
qf_status qf_group_orbits(const qf_group* g, char** report_json);

/* Squares parse from a plain integer grid (0 for the * entry) or
 * {"k": K, "grid": [[...]]}. */
qf_status qf_square_parse(const char* json, qf_square** out);
void qf_square_free(qf_square* s);
qf_status qf_square_validate(const qf_square* s, char** report_json);
qf_status qf_square_hopf_group(const qf_square* s, uint64_t cap, char** report_json);

qf_status qf_latin_enumerate(int n, int k, int count_only, char** report_json);
qf_status qf_latin_admissible(int n, int k, const qf_group* g, char** report_json);

/* Families parse from {"variant": "...", ...}; see the README for the
 * variant list and parameters. */
qf_status qf_family_parse(const char* json, qf_family** out);
void qf_family_free(qf_family* f);
qf_status qf_model_sample(const qf_family* f, uint64_t seed, char** point_json);
/* Words are "block:exp,block:exp"; "h:l" leads amalgamated words and
 * "part:e1.e2" spells exponent vectors for direct-product parts. */
qf_status qf_model_eval(const qf_family* f, const char* word, const char* point_json,
                        char** matrix_json);
qf_status qf_model_trace(const qf_family* f, const char* word, long samples, uint64_t seed,
                         char** report_json);

qf_status qf_analyze_faithful(const qf_family* f, int max_len, long samples, double tol,
                              uint64_t seed, char** report_json);
qf_status qf_analyze_stationary(const qf_group* g, int k, int exact, int max_degree,
                                long samples, uint64_t seed, char** report_json);
qf_status qf_analyze_cesaro(const qf_square* s, long k_max, double tol, char** report_json);
qf_status qf_analyze_thoma(const qf_group* g, const qf_group* subgroup, char** report_json);
qf_status qf_analyze_obstruction(int k, long samples, uint64_t seed, char** report_json);

/* Orbit decomposition of an explicit 0/1 support pattern. */
qf_status qf_orbits_from_pattern(const char* pattern_json, char** report_json);

/* Runs the acceptance criteria (criterion 0 means all) with pinned seeds;
 * tol_override > 0 replaces the closed-form agreement tolerance. */
qf_status qf_selftest(uint64_t seed, int criterion, double tol_override, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* QUASIFLAT_H */
