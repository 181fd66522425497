/*
 * Copyright 2026 ulamkit contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef ULAM_ULAM_H
#define ULAM_ULAM_H

/*
 * C interface to libulam: Ulam sequence generation, pattern codes, rigidity
 * checks, regularity analysis, arithmetic-progression export and pattern
 * mining.
 *
 * Conventions
 *   - Every function returns a ulam_status. ULAM_OK is zero.
 *   - On failure, ulam_last_error() returns a message for the calling thread;
 *     it stays valid until the next libulam call on that thread.
 *   - Objects are opaque handles released with their *_free function.
 *     Handles are immutable after creation and may be read from any thread.
 *   - Strings returned through char** are heap-allocated UTF-8 and must be
 *     released with ulam_string_free.
 *   - Composite results (reports, candidates, decompositions) are returned as
 *     JSON text; see README for the field layout.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ULAM_BUILDING_LIBRARY)
#    define ULAM_API __declspec(dllexport)
#  else
#    define ULAM_API __declspec(dllimport)
#  endif
#else
#  define ULAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ulam_status {
  ULAM_OK = 0,
  ULAM_ERR_INVALID_PARAMETERS = 1,
  ULAM_ERR_HORIZON_TOO_LARGE = 2,
  ULAM_ERR_PRECONDITION = 3,
  ULAM_ERR_INSUFFICIENT_HORIZON = 4,
  ULAM_ERR_OVERFLOW = 5,
  ULAM_ERR_MALFORMED_CODE = 6,
  ULAM_ERR_PARSE = 7,
  ULAM_ERR_UNBOUNDED_PATTERN = 8,
  ULAM_ERR_APPLICABILITY = 9,
  ULAM_ERR_NON_COPRIME = 10,
  ULAM_ERR_STALE_CANDIDATE = 11,
  ULAM_ERR_ALIGNMENT = 12,
  ULAM_ERR_FIT = 13,
  ULAM_ERR_IO = 14,
  ULAM_ERR_CORRUPT_CACHE = 15,
  ULAM_ERR_VERSION_MISMATCH = 16,
  ULAM_ERR_NULL_ARGUMENT = 98,
  ULAM_ERR_INTERNAL = 99
} ulam_status;

/* Analysis flags. */
#define ULAM_FLAG_OVERRIDE_APPLICABILITY 0x1u
#define ULAM_FLAG_ALLOW_NON_COPRIME 0x2u

typedef struct ulam_prefix ulam_prefix;
typedef struct ulam_code ulam_code;

/* ---- errors and memory ------------------------------------------------ */

ULAM_API const char* ulam_last_error(void);
ULAM_API const char* ulam_status_name(ulam_status status);
ULAM_API void ulam_string_free(char* s);
ULAM_API const char* ulam_version(void);

/* Horizon ceiling for every generation call in this process. */
ULAM_API ulam_status ulam_set_max_horizon(uint64_t max_horizon);
ULAM_API uint64_t ulam_get_max_horizon(void);

/* ---- engine ------------------------------------------------------------ */

/* Sets *coprime to 1 or 0. Fails with INVALID_PARAMETERS unless 1 <= a < b. */
ULAM_API ulam_status ulam_validate_params(uint64_t a, uint64_t b, int* coprime);

ULAM_API ulam_status ulam_prefix_generate(uint64_t a, uint64_t b, uint64_t horizon,
                                          ulam_prefix** out);
ULAM_API ulam_status ulam_prefix_generate_count(uint64_t a, uint64_t b, uint64_t k,
                                                ulam_prefix** out);
ULAM_API ulam_status ulam_prefix_extend(const ulam_prefix* prefix, uint64_t horizon,
                                        ulam_prefix** out);
ULAM_API ulam_status ulam_prefix_restrict(const ulam_prefix* prefix, uint64_t horizon,
                                          ulam_prefix** out);
ULAM_API void ulam_prefix_free(ulam_prefix* prefix);

ULAM_API ulam_status ulam_prefix_info(const ulam_prefix* prefix, uint64_t* a, uint64_t* b,
                                      uint64_t* horizon, size_t* term_count);

/* Copies up to `capacity` terms starting at index `offset`; *written gets
 * the number copied. */
ULAM_API ulam_status ulam_prefix_terms(const ulam_prefix* prefix, size_t offset, uint64_t* buffer,
                                       size_t capacity, size_t* written);
ULAM_API ulam_status ulam_prefix_gaps(const ulam_prefix* prefix, size_t offset, uint64_t* buffer,
                                      size_t capacity, size_t* written);
ULAM_API ulam_status ulam_prefix_rep_count(const ulam_prefix* prefix, uint64_t n, uint64_t* out);

ULAM_API ulam_status ulam_is_member(uint64_t a, uint64_t b, uint64_t m, int* out);
ULAM_API ulam_status ulam_nth_term(uint64_t a, uint64_t b, uint64_t k, uint64_t* out);
ULAM_API ulam_status ulam_count_upto(uint64_t a, uint64_t b, uint64_t n, uint64_t* out);

/* ---- cache ------------------------------------------------------------- */

ULAM_API ulam_status ulam_cache_write(const ulam_prefix* prefix, const char* path);
ULAM_API ulam_status ulam_cache_read(const char* path, ulam_prefix** out);
/* JSON {a, b, term_count, horizon, file_size}. */
ULAM_API ulam_status ulam_cache_info(const char* path, char** json_out);

/* Writes via temp file + rename so `path` never holds a partial file. */
ULAM_API ulam_status ulam_write_file_atomic(const char* path, const char* data, size_t size);

/* ---- pattern codes ----------------------------------------------------- */

/* On PARSE failure, *error_offset (if non-null) receives the byte offset. */
ULAM_API ulam_status ulam_code_decode(const char* text, size_t length, ulam_code** out,
                                      size_t* error_offset);
ULAM_API ulam_status ulam_code_encode(const ulam_code* code, char** text_out);
ULAM_API void ulam_code_free(ulam_code* code);
ULAM_API ulam_status ulam_code_in_pattern(const ulam_code* code, int64_t a, int64_t b, int64_t m,
                                          int* out);
/* *has_value is 0 for codes without bounded components. */
ULAM_API ulam_status ulam_code_b_max(const ulam_code* code, int64_t a, int64_t b, int64_t* value,
                                     int* has_value, int* has_unbounded);
/* JSON array of the sorted pattern set. */
ULAM_API ulam_status ulam_code_pattern_set(const ulam_code* code, int64_t a, int64_t b,
                                           char** json_out);

/* ---- rigidity ---------------------------------------------------------- */

ULAM_API ulam_status ulam_verify_segment(const ulam_code* code, uint64_t a, uint64_t b,
                                         uint64_t first, uint64_t last, unsigned flags,
                                         int* agrees, char** json_out);
/* *found is 0 when no threshold exists. */
ULAM_API ulam_status ulam_search_threshold(const ulam_code* code, uint64_t a, uint64_t b,
                                           uint64_t last, unsigned flags, int* found,
                                           uint64_t* threshold);
/* Checks U(a, n) on [1, c*n + d] for each n. *failures counts entries that
 * disagree or errored. Either output string may be null. */
ULAM_API ulam_status ulam_family_sweep(const ulam_code* code, uint64_t a, uint64_t modulus,
                                       uint64_t residue, const uint64_t* n_values, size_t count,
                                       int64_t c, int64_t d, unsigned flags, unsigned threads,
                                       char** jsonl_out, char** csv_out, size_t* failures);

/* ---- regularity -------------------------------------------------------- */

/* *found is 0 (and *json_out "null") when no candidate meets the policy. */
ULAM_API ulam_status ulam_detect_period(const ulam_prefix* prefix, uint64_t min_periods,
                                        int64_t coverage_num, int64_t coverage_den, int* found,
                                        char** json_out);
ULAM_API ulam_status ulam_density(uint64_t a, uint64_t b, uint64_t n, uint64_t* count,
                                  char** json_out);
/* CSV n,count,ratio sampled every `step` up to n_max. */
ULAM_API ulam_status ulam_density_series(uint64_t a, uint64_t b, uint64_t n_max, uint64_t step,
                                         char** csv_out);
/* side: 0 = upper density bound, 1 = lower density bound. */
ULAM_API ulam_status ulam_density_check(uint64_t a, uint64_t b, int64_t q_num, uint64_t q_den,
                                        uint64_t k, uint64_t from, uint64_t to, int side,
                                        int* holds, uint64_t* first_violation);
ULAM_API ulam_status ulam_census(const ulam_prefix* prefix, uint64_t modulus, uint64_t residue,
                                 char** json_out);
/* code may be null. Candidate detected with default policy. */
ULAM_API ulam_status ulam_hierarchy_report(const ulam_prefix* prefix, const ulam_code* code,
                                           unsigned flags, char** json_out);

/* ---- arithmetic progressions ------------------------------------------ */

/* Detects a candidate with the given policy and decomposes. Fails with
 * STALE_CANDIDATE when none is found or it does not fit the prefix. */
ULAM_API ulam_status ulam_export_ap(const ulam_prefix* prefix, uint64_t min_periods,
                                    int64_t coverage_num, int64_t coverage_den, unsigned flags,
                                    char** json_out);
ULAM_API ulam_status ulam_export_presburger(const ulam_prefix* prefix, uint64_t min_periods,
                                            int64_t coverage_num, int64_t coverage_den,
                                            unsigned flags, char** text_out);
/* Pattern code for the same decomposition; bounded at the prefix horizon
 * when `bounded` is non-zero. */
ULAM_API ulam_status ulam_export_ap_code(const ulam_prefix* prefix, uint64_t min_periods,
                                         int64_t coverage_num, int64_t coverage_den,
                                         unsigned flags, int bounded, ulam_code** out);

/* ---- mining ------------------------------------------------------------ */

/* Mines a mask-free code for U(1, n) over segments [1, c*n + d]. *code_out
 * receives the code; *json_out (optional) the fitted components and the
 * held-out verification reports. */
ULAM_API ulam_status ulam_mine(uint64_t modulus, uint64_t residue, const uint64_t* train,
                               size_t train_count, const uint64_t* holdout, size_t holdout_count,
                               int64_t c, int64_t d, unsigned threads, ulam_code** code_out,
                               char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ULAM_ULAM_H */
