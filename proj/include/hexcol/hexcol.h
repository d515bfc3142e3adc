#ifndef HEXCOL_HEXCOL_H
#define HEXCOL_HEXCOL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HEXCOL_API __attribute__((visibility("default")))
#else
#define HEXCOL_API
#endif

/* Status codes. They double as CLI exit codes. */
typedef enum hexcol_status {
  HEXCOL_OK = 0,
  HEXCOL_VERIFY_FAILED = 1, /* the call succeeded and its report records a failed check */
  HEXCOL_INPUT_ERROR = 2,   /* malformed input, unknown name, object not defined for this input */
  HEXCOL_RESOURCE_ERROR = 3,
  HEXCOL_INTERNAL_ERROR = 4
} hexcol_status;

typedef struct hexcol_field hexcol_field;
typedef struct hexcol_complex hexcol_complex;

typedef struct hexcol_options {
  uint64_t seed;
  uint64_t enumeration_cap; /* value distributions: maximal number of points */
  uint64_t search_cap;      /* cocycle search: maximal monomial count */
  int32_t max_extension;    /* distributions over F_{p^k}, k = 1..max_extension */
  int32_t trials;
} hexcol_options;

HEXCOL_API const char* hexcol_version(void);

/* Message of the last failed call on this thread ("" if none). */
HEXCOL_API const char* hexcol_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
HEXCOL_API void hexcol_string_free(char* s);

HEXCOL_API void hexcol_options_default(hexcol_options* opts);

/* "p" or "p^k". */
HEXCOL_API hexcol_status hexcol_field_create(const char* spec, hexcol_field** out);
HEXCOL_API void hexcol_field_free(hexcol_field* f);

HEXCOL_API hexcol_status hexcol_complex_fixture(const char* name, hexcol_complex** out);
HEXCOL_API hexcol_status hexcol_complex_load(const char* path, hexcol_complex** out);
/* Text or JSON document. */
HEXCOL_API hexcol_status hexcol_complex_parse(const char* document, hexcol_complex** out);
HEXCOL_API hexcol_status hexcol_complex_product(const hexcol_complex* a, const hexcol_complex* b,
                                                hexcol_complex** out);
HEXCOL_API void hexcol_complex_free(hexcol_complex* k);
/* format: "text" or "json". */
HEXCOL_API hexcol_status hexcol_complex_serialize(const hexcol_complex* k, const char* format, char** out);
HEXCOL_API int32_t hexcol_complex_dim(const hexcol_complex* k);
HEXCOL_API int64_t hexcol_complex_count(const hexcol_complex* k, int32_t n);

/* Reports are JSON documents. `manifold` is a display name and may be NULL. */
HEXCOL_API hexcol_status hexcol_fixtures_list(char** json);
HEXCOL_API hexcol_status hexcol_homology_report(const hexcol_complex* k, const hexcol_field* f,
                                                const hexcol_options* opts, const char* manifold, char** json);
/* cocycles: builtin names or cochain literals separated by ',' or newlines. */
HEXCOL_API hexcol_status hexcol_invariants_report(const hexcol_complex* k, const hexcol_field* f,
                                                  const char* cocycles, const hexcol_options* opts,
                                                  const char* manifold, char** json);
/* kind: "polynomial" or "bilinear". */
HEXCOL_API hexcol_status hexcol_search_report(int32_t level, int32_t degree, const char* kind, const hexcol_field* f,
                                              const hexcol_options* opts, char** json);
/* suite: cocycles, pachner, chainmap, classdep, limit, moves. k may be NULL
 * for suites that do not need a complex. Returns HEXCOL_VERIFY_FAILED (with
 * the report filled in) when a check fails. */
HEXCOL_API hexcol_status hexcol_verify_report(const char* suite, const hexcol_complex* k, const hexcol_field* f,
                                              const hexcol_options* opts, const char* manifold, char** json);
HEXCOL_API hexcol_status hexcol_limit_check_report(const hexcol_field* f, const hexcol_options* opts, char** json);

#ifdef __cplusplus
}
#endif

#endif
