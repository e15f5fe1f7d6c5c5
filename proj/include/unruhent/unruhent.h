/*
 * Copyright 2026 The unruhent Authors
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
 * C interface to libunruhent.
 *
 * Every function returns a ue_status. On failure a human-readable message is
 * available from ue_last_error() until the next call on the same thread.
 * Objects are opaque handles created by *_create / *_parse and released by
 * the matching *_destroy; destroying NULL is a no-op. Strings returned
 * through `char**` are owned by the caller and released with ue_string_free.
 */

#ifndef UNRUHENT_UNRUHENT_H
#define UNRUHENT_UNRUHENT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(UNRUHENT_BUILDING)
#    define UE_API __declspec(dllexport)
#  else
#    define UE_API __declspec(dllimport)
#  endif
#else
#  define UE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ue_status {
  UE_OK = 0,
  UE_ERR_CHECK_FAILED = 1, /* an invariant or acceptance check failed */
  UE_ERR_USAGE = 2,        /* invalid argument */
  UE_ERR_IO = 3,           /* file could not be read or written */
  UE_ERR_INTERNAL = 4      /* a postcondition was violated */
} ue_status;

typedef enum ue_route {
  UE_ROUTE_QUBIT_TRACE = 0,          /* qubit mapping + partial trace */
  UE_ROUTE_SUBALGEBRA = 1,           /* ordering-free reduced state */
  UE_ROUTE_INFINITE_ACCELERATION = 2 /* A_I A_I^+ construction, r = pi/4 only */
} ue_route;

/* Acceleration parameter and complex Unruh-mode weights. */
typedef struct ue_unruh_params {
  double r;
  double q_right_re, q_right_im;
  double q_left_re, q_left_im;
} ue_unruh_params;

typedef struct ue_family ue_family;
typedef struct ue_ordering ue_ordering;
typedef struct ue_sweep_config ue_sweep_config;
typedef struct ue_ordering_table ue_ordering_table;
typedef struct ue_check_report ue_check_report;

UE_API const char* ue_last_error(void);
UE_API const char* ue_version(void);
UE_API void ue_string_free(char* s);

/* pi/4, the infinite-acceleration limit. */
UE_API double ue_infinite_acceleration(void);

/* Real q_R in [0, 1], q_L = sqrt(1 - q_R^2). */
UE_API ue_status ue_unruh_params_real(double r, double q_right, ue_unruh_params* out);

/* ---- state family ------------------------------------------------------ */

/* P = Q = 1/sqrt(2), a1 = b2 = 1, a2 = b1 = 0. */
UE_API ue_status ue_family_create_default(ue_family** out);
/* re_im holds (re, im) pairs for P, Q, a1, a2, b1, b2. */
UE_API ue_status ue_family_create(const double re_im[12], ue_family** out);
/* "P,Q,a1,a2,b1,b2", complex values written as re+imj. Nonzero `normalize`
 * rescales each pair to unit norm instead of rejecting it. */
UE_API ue_status ue_family_parse(const char* text, int normalize, ue_family** out);
UE_API ue_status ue_family_get(const ue_family* f, double re_im[12]);
UE_API void ue_family_destroy(ue_family* f);

/* ---- orderings --------------------------------------------------------- */

/* "physical", "legacy-interleaved", or five distinct digits 0-4. */
UE_API ue_status ue_ordering_parse(const char* text, ue_ordering** out);
/* Writes the preset name or digit string (NUL-terminated) into buf. */
UE_API ue_status ue_ordering_label(const ue_ordering* o, char* buf, size_t buf_size);
UE_API void ue_ordering_destroy(ue_ordering* o);

/* ---- single evaluation ------------------------------------------------- */

UE_API ue_status ue_negativity(const ue_family* f, const ue_unruh_params* p, const ue_ordering* o,
                               ue_route route, double* out);

/* JSON object: parameters, reduced density matrix, partial-transpose
 * spectrum and negativity by every applicable route. */
UE_API ue_status ue_single_json(const ue_family* f, const ue_unruh_params* p, const ue_ordering* o,
                                char** json_out);

/* ---- sweeps ------------------------------------------------------------ */

UE_API ue_status ue_sweep_config_create(ue_sweep_config** out);
UE_API void ue_sweep_config_destroy(ue_sweep_config* c);
UE_API ue_status ue_sweep_config_set_r_points(ue_sweep_config* c, int points);
UE_API ue_status ue_sweep_config_set_q_right(ue_sweep_config* c, const double* values, size_t count);
/* Replaces the ordering list with `count` preset names / digit strings. */
UE_API ue_status ue_sweep_config_set_orderings(ue_sweep_config* c, const char* const* specs, size_t count);
UE_API ue_status ue_sweep_config_set_family(ue_sweep_config* c, const ue_family* f);
UE_API ue_status ue_sweep_config_set_threads(ue_sweep_config* c, unsigned threads);
UE_API ue_status ue_sweep_config_set_output(ue_sweep_config* c, const char* path);
/* Applies a key=value file (keys: r_points, qr, ordering, family, out, threads). */
UE_API ue_status ue_sweep_config_load(ue_sweep_config* c, const char* path);
/* key=value rendering of the effective configuration. */
UE_API ue_status ue_sweep_config_describe(const ue_sweep_config* c, char** text_out);
/* Configured output path ("" for stdout). */
UE_API ue_status ue_sweep_config_output(const ue_sweep_config* c, char** path_out);
/* Copy of the configured family; release with ue_family_destroy. */
UE_API ue_status ue_sweep_config_family(const ue_sweep_config* c, ue_family** out);
UE_API ue_status ue_sweep_config_q_right(const ue_sweep_config* c, double* values, size_t capacity,
                                         size_t* count);

/* CSV with header "r,q_R,ordering,negativity". */
UE_API ue_status ue_sweep_csv(const ue_sweep_config* c, char** csv_out);
/* Runs the sweep and writes the CSV to the configured output path. */
UE_API ue_status ue_sweep_write(const ue_sweep_config* c);
UE_API ue_status ue_sweep_gnuplot(const ue_sweep_config* c, const char* csv_path, char** script_out);

/* ---- ordering classification ------------------------------------------ */

/* Alice first (24 rows) unless all_permutations is nonzero (120 rows). */
UE_API ue_status ue_orderings_classify(const ue_family* f, const double* q_right, size_t q_count,
                                       int all_permutations, ue_ordering_table** out);
UE_API size_t ue_ordering_table_size(const ue_ordering_table* t);
/* digits receives 6 bytes ("01234\0"). */
UE_API ue_status ue_ordering_table_row(const ue_ordering_table* t, size_t index, char digits[6],
                                       double* spread, int* convergent);
UE_API ue_status ue_ordering_table_text(const ue_ordering_table* t, char** text_out);
UE_API ue_status ue_ordering_table_json(const ue_ordering_table* t, char** json_out);
UE_API void ue_ordering_table_destroy(ue_ordering_table* t);

/* ---- invariant suite --------------------------------------------------- */

UE_API ue_status ue_check_run(ue_check_report** out);
UE_API size_t ue_check_report_size(const ue_check_report* r);
/* *name stays valid for the lifetime of the report. */
UE_API ue_status ue_check_report_entry(const ue_check_report* r, size_t index, const char** name,
                                       double* measured, double* threshold, int* passed);
UE_API int ue_check_report_passed(const ue_check_report* r);
UE_API ue_status ue_check_report_text(const ue_check_report* r, char** text_out);
UE_API ue_status ue_check_report_json(const ue_check_report* r, char** json_out);
UE_API void ue_check_report_destroy(ue_check_report* r);

/* Writes `text` to `path`, truncating. */
UE_API ue_status ue_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* UNRUHENT_UNRUHENT_H */
