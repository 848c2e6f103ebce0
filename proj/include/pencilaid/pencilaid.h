/* C interface to the pencilaid library.
 *
 * Every function returns a pa_status. Output strings are allocated by the
 * library and released with pa_string_free; handles with pa_pencil_free. The
 * message for the most recent failure on the calling thread is available
 * from pa_last_error. */
#ifndef PENCILAID_H
#define PENCILAID_H

#include <stdint.h>

#if defined(PENCILAID_BUILDING_LIBRARY)
#define PA_API __attribute__((visibility("default")))
#else
#define PA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
  PA_OK = 0,
  PA_ERR_NULL_ARGUMENT = 1,
  PA_ERR_PARSE = 2,
  PA_ERR_INVALID_INPUT = 3,
  PA_ERR_IRREDUCIBLE_FACTOR_TOO_LARGE = 4,
  PA_ERR_MODULUS_MISMATCH = 5,
  PA_ERR_PAIRING_VIOLATION = 6,
  PA_ERR_SIZE_IDENTITY_VIOLATION = 7,
  PA_ERR_INVALID_SPEC = 8,
  PA_ERR_UNREALIZABLE_SPEC = 9,
  PA_ERR_GENUS_TOO_LOW = 10,
  PA_ERR_UNSUPPORTED = 11,
  PA_ERR_IO = 12,
  PA_ERR_INTERNAL = 99
} pa_status;

typedef enum pa_field { PA_FIELD_REAL = 0, PA_FIELD_CLOSED = 1 } pa_field;

typedef struct pa_pencil pa_pencil;

typedef struct pa_check_report {
  int formula_inn;
  int formula_aid;
  int solver_inn;
  int solver_aid;
  int agree;
} pa_check_report;

PA_API const char* pa_version(void);
PA_API const char* pa_last_error(void);
PA_API const char* pa_status_name(pa_status status);
PA_API void pa_string_free(char* s);

/* Pencil JSON, {"pencil": ...} or bracket-list Algebra JSON. */
PA_API pa_status pa_pencil_parse(const char* json, pa_pencil** out);
/* CanonicalSpec JSON or Invariants JSON, built into a canonical pencil. */
PA_API pa_status pa_pencil_canonical(const char* json, pa_pencil** out);
PA_API void pa_pencil_free(pa_pencil* p);
PA_API pa_status pa_pencil_size(const pa_pencil* p, int* out);
PA_API pa_status pa_pencil_to_json(const pa_pencil* p, char** out);
PA_API pa_status pa_pencil_randomize(const pa_pencil* p, uint64_t seed, pa_pencil** out);
PA_API pa_status pa_pencil_direct_sum(const pa_pencil* p, const pa_pencil* q, pa_pencil** out);

PA_API pa_status pa_invariants_json(const pa_pencil* p, char** out);
PA_API pa_status pa_strictly_congruent(const pa_pencil* p, const pa_pencil* q, int* out);
/* Requires genus 2. */
PA_API pa_status pa_solve_aid_json(const pa_pencil* p, pa_field field, char** out);
PA_API pa_status pa_formula_json(const char* invariants_json, pa_field field, char** out);
/* Requires genus 2. */
PA_API pa_status pa_cross_check(const pa_pencil* p, pa_field field, pa_check_report* out);

/* Runs every case under data_dir. When out_dir is non-null, one JSON file per
 * case is written there. table receives the summary table; all_agree is 1
 * when every row agrees. */
PA_API pa_status pa_corpus_run(const char* data_dir, pa_field field, const char* out_dir,
                               char** table, int* all_agree);

#ifdef __cplusplus
}
#endif

#endif /* PENCILAID_H */
