/*
 * Copyright 2026 The npgal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of npgal: Newton polygons, Newton indices, large-Galois-group
 * certificates and the Laguerre classifier.
 *
 * Conventions:
 *  - Every fallible call returns an npgal_status. On failure the outputs are
 *    left untouched and npgal_last_error() describes the problem; the message
 *    is thread-local and valid until the next failing call on that thread.
 *  - Handles are opaque and owned by the caller; release each with its
 *    matching *_free function (passing NULL is a no-op).
 *  - Strings returned through char** are heap-allocated, NUL-terminated and
 *    must be released with npgal_string_free().
 *  - Exact numbers cross the boundary as decimal text: integers "-12",
 *    rationals "5/3", polynomials "6,18,9,1" (ascending coefficients).
 *  - All functions are safe to call concurrently on distinct handles; handles
 *    are immutable once created.
 */

#ifndef NPGAL_NPGAL_H
#define NPGAL_NPGAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NPGAL_API __declspec(dllexport)
#else
#define NPGAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum npgal_status {
  NPGAL_OK = 0,
  NPGAL_ERR_PARSE = 1,            /* malformed number or polynomial text */
  NPGAL_ERR_DOMAIN = 2,           /* mathematical precondition violated */
  NPGAL_ERR_INVALID_ARGUMENT = 3, /* NULL pointer or out-of-range index */
  NPGAL_ERR_INTERNAL = 4          /* internal invariant failure */
} npgal_status;

typedef enum npgal_format { NPGAL_FORMAT_TEXT = 0, NPGAL_FORMAT_JSON = 1 } npgal_format;

typedef enum npgal_irreducibility {
  NPGAL_IRREDUCIBILITY_VERIFY = 0,  /* claim nothing unless proven */
  NPGAL_IRREDUCIBILITY_ASSERTED = 1 /* caller vouches for irreducibility */
} npgal_irreducibility;

typedef enum npgal_verdict {
  NPGAL_VERDICT_CONTAINS_AN = 0,
  NPGAL_VERDICT_INDEX_DIVIDES_ORDER_ONLY = 1,
  NPGAL_VERDICT_INCONCLUSIVE = 2
} npgal_verdict;

typedef enum npgal_group {
  NPGAL_GROUP_ALTERNATING = 0,
  NPGAL_GROUP_SYMMETRIC = 1,
  NPGAL_GROUP_INCONCLUSIVE = 2
} npgal_group;

typedef struct npgal_poly npgal_poly;
typedef struct npgal_polygon npgal_polygon;
typedef struct npgal_certificate npgal_certificate;
typedef struct npgal_classification npgal_classification;

NPGAL_API const char* npgal_version(void);
NPGAL_API const char* npgal_last_error(void);
NPGAL_API void npgal_string_free(char* s);

/* Polynomials */
NPGAL_API npgal_status npgal_poly_parse(const char* text, npgal_poly** out);
/* The monic integral Laguerre form sum binom(n,j) c_j x^j for alpha = "l/m". */
NPGAL_API npgal_status npgal_poly_glp_normalized(int64_t n, const char* alpha, npgal_poly** out);
NPGAL_API void npgal_poly_free(npgal_poly* poly);
NPGAL_API npgal_status npgal_poly_degree(const npgal_poly* poly, int64_t* out);
NPGAL_API npgal_status npgal_poly_render(const npgal_poly* poly, char** out);
NPGAL_API npgal_status npgal_poly_discriminant(const npgal_poly* poly, char** out);

/* Newton polygons */
NPGAL_API npgal_status npgal_newton_polygon(const npgal_poly* poly, const char* prime, npgal_polygon** out);
NPGAL_API void npgal_polygon_free(npgal_polygon* polygon);
NPGAL_API npgal_status npgal_polygon_segment_count(const npgal_polygon* polygon, size_t* out);
/* slope receives an owned "a/b" string; from/to receive (x, y). */
NPGAL_API npgal_status npgal_polygon_segment(const npgal_polygon* polygon, size_t index, char** slope,
                                             int64_t* length, int64_t from[2], int64_t to[2]);
NPGAL_API npgal_status npgal_polygon_render(const npgal_polygon* polygon, npgal_format format, char** out);

/* Newton index report, rendered. index_out (optional) receives the index in decimal. */
NPGAL_API npgal_status npgal_newton_index(const npgal_poly* poly, npgal_format format, char** index_out,
                                          char** rendered);

/* Large-Galois certificates. shifts is a comma-separated list of rationals;
 * NULL or "" means "0". */
NPGAL_API npgal_status npgal_certify(const npgal_poly* poly, const char* shifts, npgal_irreducibility irreducibility,
                                     npgal_certificate** out);
NPGAL_API void npgal_certificate_free(npgal_certificate* cert);
NPGAL_API npgal_status npgal_certificate_verdict(const npgal_certificate* cert, npgal_verdict* out);
NPGAL_API npgal_status npgal_certificate_render(const npgal_certificate* cert, npgal_format format, char** out);

/* Frobenius cycle types: at a single good prime when prime is non-NULL,
 * otherwise at the first `samples` good primes. */
NPGAL_API npgal_status npgal_frobenius(const npgal_poly* poly, const char* prime, size_t samples,
                                       npgal_format format, char** out);

/* Laguerre pipeline */
NPGAL_API npgal_status npgal_glp_classify(int64_t n, const char* alpha, npgal_irreducibility irreducibility,
                                          size_t frobenius_samples, npgal_classification** out);
NPGAL_API void npgal_classification_free(npgal_classification* c);
NPGAL_API npgal_status npgal_classification_group(const npgal_classification* c, npgal_group* out);
/* criterion prime, or 0 when none was found */
NPGAL_API npgal_status npgal_classification_criterion_prime(const npgal_classification* c, int64_t* out);
NPGAL_API npgal_status npgal_classification_render(const npgal_classification* c, npgal_format format, char** out);

/* Schur discriminant of (-1)^n n! L_n^(alpha); with verify != 0 it is also
 * recomputed through the resultant. */
NPGAL_API npgal_status npgal_glp_discriminant(int64_t n, const char* alpha, int verify, npgal_format format,
                                              char** out);

#ifdef __cplusplus
}
#endif

#endif /* NPGAL_NPGAL_H */
