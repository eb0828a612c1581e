/* C interface to the platknot library.
 *
 * Every object is an opaque handle released with its matching _free call.
 * Functions return a pk_status; on failure the message is available from
 * pk_last_error() on the same thread until the next failing call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with pk_string_free.
 */
#ifndef PLATKNOT_PLATKNOT_H
#define PLATKNOT_PLATKNOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PLATKNOT_BUILDING)
#    define PK_API __declspec(dllexport)
#  else
#    define PK_API __declspec(dllimport)
#  endif
#else
#  define PK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2..5 coincide with the CLI exit codes. */
typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_INTERNAL = 1,
  PK_ERR_PARSE = 2,
  PK_ERR_NOT_A_KNOT = 3,
  PK_ERR_UNKNOWN_KNOT = 4,
  PK_ERR_METHOD_MISMATCH = 5,
  PK_ERR_INVALID_ARGUMENT = 6,
  PK_ERR_BUDGET_EXCEEDED = 7
} pk_status;

typedef enum pk_format {
  PK_FORMAT_PLAIN = 0,
  PK_FORMAT_LATEX = 1,
  PK_FORMAT_JSON = 2
} pk_format;

typedef enum pk_jones_method {
  PK_JONES_BRACKET = 0,   /* normalized Kauffman bracket state sum */
  PK_JONES_SPECIALIZE = 1 /* HOMFLY specialized to the bracket variable */
} pk_jones_method;

/* Polynomial in a^{+-1}, m^{+-1} over Z. */
typedef struct pk_poly pk_poly;
/* Polynomial in A^{+-1} over Z[i]. */
typedef struct pk_bracket pk_bracket;
/* A knot given by a plat word, a continued fraction or a table name. */
typedef struct pk_knot pk_knot;

PK_API const char* pk_version(void);
PK_API const char* pk_status_name(pk_status status);
PK_API const char* pk_last_error(void);
/* Byte offset of the last parse error, or -1. */
PK_API long pk_last_error_offset(void);
PK_API void pk_string_free(char* s);

/* ---- polynomials ---- */
PK_API pk_status pk_poly_parse(const char* text, pk_poly** out);
PK_API pk_status pk_poly_from_json(const char* json, pk_poly** out);
PK_API pk_status pk_poly_format(const pk_poly* p, pk_format format, char** out);
PK_API int pk_poly_equal(const pk_poly* p, const pk_poly* q);
PK_API pk_status pk_poly_mirror(const pk_poly* p, pk_poly** out);
PK_API pk_status pk_poly_specialize(const pk_poly* p, pk_bracket** out);
PK_API void pk_poly_free(pk_poly* p);

PK_API pk_status pk_bracket_parse(const char* text, pk_bracket** out);
PK_API pk_status pk_bracket_from_json(const char* json, pk_bracket** out);
PK_API pk_status pk_bracket_format(const pk_bracket* p, pk_format format, char** out);
PK_API int pk_bracket_equal(const pk_bracket* p, const pk_bracket* q);
PK_API void pk_bracket_free(pk_bracket* p);

/* ---- knots ---- */
/* "s1 s2^-1 s1"; uses the B_3 indices s1, s2. */
PK_API pk_status pk_knot_from_word(const char* word, pk_knot** out);
/* "1,3,1" */
PK_API pk_status pk_knot_from_cf(const char* cf, pk_knot** out);
/* Table name or alias, case-insensitive. */
PK_API pk_status pk_knot_from_name(const char* name, pk_knot** out);
PK_API void pk_knot_free(pk_knot* k);

/* Canonical word; empty string for composite table entries. */
PK_API pk_status pk_knot_word(const pk_knot* k, char** out);
PK_API int pk_knot_is_composite(const pk_knot* k);
PK_API size_t pk_knot_crossings(const pk_knot* k);

PK_API pk_status pk_knot_homfly(const pk_knot* k, pk_poly** out);
/* Tangle coefficients (f, g, h); not defined for composites. */
PK_API pk_status pk_knot_fgh(const pk_knot* k, pk_poly** f, pk_poly** g, pk_poly** h);
/* Number of syllables written to `values` (at most `capacity`) via *count. */
PK_API pk_status pk_knot_kseq(const pk_knot* k, int* values, size_t capacity, size_t* count);
/* 1 when the word is alternating standard. */
PK_API pk_status pk_knot_certified(const pk_knot* k, int* out);
PK_API pk_status pk_knot_jones(const pk_knot* k, pk_jones_method method, pk_bracket** out);

/* ---- fixtures ---- */
PK_API pk_status pk_table_json(char** out);
PK_API pk_status pk_table_entry_json(const char* name, char** out);

/* ---- self-checks ----
 * Each writes a JSON array of {"id", "status", "detail"} objects to *report
 * and the number of FAIL results to *failures. */
PK_API pk_status pk_verify_all(unsigned iterations, uint64_t seed, char** report, size_t* failures);
PK_API pk_status pk_verify_knot(const char* name, char** report, size_t* failures);
PK_API pk_status pk_verify_property(const char* property, unsigned iterations, uint64_t seed,
                                    char** report, size_t* failures);
PK_API uint64_t pk_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif /* PLATKNOT_PLATKNOT_H */
