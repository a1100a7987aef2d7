/*
 * gfdiff C API.
 *
 * Opaque handles own a finite field or a polynomial over it. Every fallible
 * call returns a gfd_status; on failure gfd_last_error() describes the
 * problem (the message is thread-local and valid until the next call on the
 * same thread). Strings returned through char** are heap-allocated and must
 * be released with gfd_string_free().
 *
 * Field elements cross the boundary as uint32_t polynomial-basis bit
 * vectors; hex text is accepted wherever an element is optional.
 */
#ifndef GFDIFF_H
#define GFDIFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GFDIFF_BUILDING)
#define GFD_API __declspec(dllexport)
#else
#define GFD_API __declspec(dllimport)
#endif
#else
#define GFD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gfd_status {
  GFD_OK = 0,
  GFD_ERR_RANGE = 1,
  GFD_ERR_REDUCIBLE = 2,
  GFD_ERR_PARSE = 3,
  GFD_ERR_PRECONDITION = 4,
  GFD_ERR_DIVISION_BY_ZERO = 5,
  GFD_ERR_UNSUPPORTED = 6,
  GFD_ERR_RESOURCE = 7,
  GFD_ERR_NOT_SQUAREFREE = 8,
  GFD_ERR_INTERNAL = 9,
  GFD_ERR_NULL_ARGUMENT = 10,
  GFD_ERR_UNKNOWN = 11
} gfd_status;

typedef enum gfd_conclusion {
  GFD_CONCLUSION_INAPPLICABLE = 0,
  GFD_CONCLUSION_DELTA_GE_6 = 1,
  GFD_CONCLUSION_DELTA_EQ_8 = 2
} gfd_conclusion;

typedef enum gfd_monodromy_mode {
  GFD_MODE_CUBIC_S3 = 0,
  GFD_MODE_QUARTIC_KLEIN = 1
} gfd_monodromy_mode;

typedef struct gfd_field gfd_field;
typedef struct gfd_poly gfd_poly;

GFD_API const char* gfd_version(void);
GFD_API const char* gfd_last_error(void);
GFD_API const char* gfd_status_name(gfd_status status);
GFD_API void gfd_string_free(char* s);

/* Fields. modulus_hex may be NULL for the built-in default of degree n. */
GFD_API gfd_status gfd_field_create(unsigned n, const char* modulus_hex, gfd_field** out);
GFD_API void gfd_field_destroy(gfd_field* field);
GFD_API unsigned gfd_field_degree(const gfd_field* field);
GFD_API gfd_status gfd_field_modulus_hex(const gfd_field* field, char** out);
GFD_API gfd_status gfd_field_generator(const gfd_field* field, uint32_t* out);

/* Elements. */
GFD_API gfd_status gfd_elem_parse(const gfd_field* field, const char* hex, uint32_t* out);
GFD_API gfd_status gfd_elem_format(const gfd_field* field, uint32_t a, char** out);
GFD_API gfd_status gfd_elem_mul(const gfd_field* field, uint32_t a, uint32_t b, uint32_t* out);
GFD_API gfd_status gfd_elem_inv(const gfd_field* field, uint32_t a, uint32_t* out);
GFD_API gfd_status gfd_elem_pow(const gfd_field* field, uint32_t a, uint64_t e, uint32_t* out);
GFD_API gfd_status gfd_elem_trace(const gfd_field* field, uint32_t a, int* out);
GFD_API gfd_status gfd_elem_is_cube(const gfd_field* field, uint32_t a, int in_quadratic_extension, int* out);
/* x^2 + alpha x = b. *solvable is 0 or 1; roots[0..1] are set when 1. */
GFD_API gfd_status gfd_solve_artin_schreier(const gfd_field* field, uint32_t alpha, uint32_t b, int* solvable,
                                            uint32_t roots[2]);

/* Polynomials: comma-separated hex coefficients, leading coefficient first. */
GFD_API gfd_status gfd_poly_parse(const gfd_field* field, const char* text, gfd_poly** out);
GFD_API void gfd_poly_destroy(gfd_poly* poly);
GFD_API int gfd_poly_degree(const gfd_poly* poly);
GFD_API gfd_status gfd_poly_format(const gfd_poly* poly, char** out);

/* Theorem checks on a degree-10 polynomial. alpha_hex may be NULL (sweep). */
GFD_API gfd_status gfd_check(const gfd_poly* poly, const char* alpha_hex, uint64_t sweep_cap,
                             gfd_conclusion* conclusion, char** json);
GFD_API gfd_status gfd_klein_check(const gfd_poly* poly, const char* alpha_hex, int* verdict, char** json);
GFD_API gfd_status gfd_morse_check(const gfd_poly* poly, int* is_morse, char** json);

/* Differential spectra. csv may be NULL. */
GFD_API gfd_status gfd_ddt_row(const gfd_poly* poly, const char* alpha_hex, int allow_large, char** summary_json,
                               char** csv);
GFD_API gfd_status gfd_delta_full(const gfd_poly* poly, int allow_large, int with_timing, uint64_t* delta,
                                  char** json);
GFD_API gfd_status gfd_ddt_csv(const gfd_poly* poly, int allow_large, char** csv);

GFD_API gfd_status gfd_monodromy_stats(const gfd_poly* poly, const char* alpha_hex, gfd_monodromy_mode mode,
                                       uint64_t samples, uint64_t seed, char** json);
GFD_API gfd_status gfd_chebotarev_threshold(unsigned d_omega, unsigned deg_d_poly, char** json);

#ifdef __cplusplus
}
#endif

#endif /* GFDIFF_H */
