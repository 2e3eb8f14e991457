/*
 * Copyright 2026 The morphlab Authors
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

/**
 * @file    morphlab.h
 * @brief   C interface to morphlab.
 *
 * Every analysis returns a report handle: an overall decision plus an
 * ordered list of records.  A record has a kind, ordered key/value fields
 * and a one-line human rendering.  Strings returned by accessors stay valid
 * until the owning handle is freed.
 *
 * Words are passed as plain text over the symbols of the relevant alphabet.
 * Positions and intervals in records are 1-based and inclusive.
 */

#ifndef MORPHLAB_H
#define MORPHLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MORPHLAB_BUILDING)
#    define MORPHLAB_API __declspec(dllexport)
#  else
#    define MORPHLAB_API __declspec(dllimport)
#  endif
#else
#  define MORPHLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum morphlab_status {
  MORPHLAB_OK = 0,
  MORPHLAB_E_PARSE = 1,
  MORPHLAB_E_ALPHABET_MISMATCH = 2,
  MORPHLAB_E_INVALID_ARGUMENT = 3,
  MORPHLAB_E_EMPTY_WORD = 4,
  MORPHLAB_E_ERASING_IMAGE = 5,
  MORPHLAB_E_NOT_INJECTIVE = 6,
  MORPHLAB_E_NOT_ENDOMORPHISM = 7,
  MORPHLAB_E_OUT_OF_RANGE = 8,
  MORPHLAB_E_BUDGET_EXCEEDED = 9,
  MORPHLAB_E_IO = 10,
  MORPHLAB_E_INTERNAL = 11
} morphlab_status;

typedef struct morphlab_context morphlab_context;
typedef struct morphlab_morphism morphlab_morphism;
typedef struct morphlab_report morphlab_report;

MORPHLAB_API const char* morphlab_version(void);
MORPHLAB_API const char* morphlab_status_name(morphlab_status status);
/* Message of the last failure on the calling thread; "" if none. */
MORPHLAB_API const char* morphlab_last_error(void);

/* ---- context: options shared by analyses ---- */

MORPHLAB_API morphlab_status morphlab_context_create(morphlab_context** out);
MORPHLAB_API void morphlab_context_free(morphlab_context* ctx);
/* Oracle budget "<max_word_length>[,<max_factorizations>]". */
MORPHLAB_API morphlab_status morphlab_context_set_budget(morphlab_context* ctx, const char* budget);
/* Run IF/recognizability checks on non-injective morphisms (flagged). */
MORPHLAB_API morphlab_status morphlab_context_set_allow_non_injective(morphlab_context* ctx, int allow);
/* Longest prefix/suffix tried by the barrier certificate search. */
MORPHLAB_API morphlab_status morphlab_context_set_barrier_length(morphlab_context* ctx, size_t max_length);

/* ---- morphisms ---- */

/* `spec` is either "a->ab;b->a" (whitespace ignored, "." = empty image) or
 * the name of a built-in morphism. */
MORPHLAB_API morphlab_status morphlab_morphism_parse(const char* spec, morphlab_morphism** out);
MORPHLAB_API void morphlab_morphism_free(morphlab_morphism* m);
/* Canonical text form; valid until the handle is freed. */
MORPHLAB_API const char* morphlab_morphism_string(const morphlab_morphism* m);
MORPHLAB_API size_t morphlab_named_morphism_count(void);
/* NULL when out of range. */
MORPHLAB_API const char* morphlab_named_morphism_name(size_t index);
MORPHLAB_API const char* morphlab_named_morphism_spec(size_t index);

/* ---- analyses; each returns a report in *out ---- */

/* Record "morphism": spec, injective, non_erasing, uniform, endomorphism,
 * and witness_u/witness_v when not injective. */
MORPHLAB_API morphlab_status morphlab_describe(const morphlab_morphism* m, morphlab_report** out);
/* Interference-freeness on {u}; a "barrier" record follows when
 * `with_barrier` is set and a certificate exists. */
MORPHLAB_API morphlab_status morphlab_check_if(const morphlab_context* ctx, const morphlab_morphism* m,
                                               const char* u, int with_barrier, morphlab_report** out);
MORPHLAB_API morphlab_status morphlab_check_strong_if(const morphlab_context* ctx, const morphlab_morphism* m,
                                                      morphlab_report** out);
MORPHLAB_API morphlab_status morphlab_check_recognizable(const morphlab_context* ctx,
                                                         const morphlab_morphism* m, const char* u,
                                                         morphlab_report** out);
/* phi^k(u); k = 0 echoes u. */
MORPHLAB_API morphlab_status morphlab_apply(const morphlab_morphism* m, const char* u, size_t k,
                                            morphlab_report** out);
MORPHLAB_API morphlab_status morphlab_occ(const char* pattern, const char* text, morphlab_report** out);
MORPHLAB_API morphlab_status morphlab_mus(const char* text, morphlab_report** out);
MORPHLAB_API morphlab_status morphlab_netocc(const char* text, morphlab_report** out);
/* Families: fibonacci, thue-morse, fibonacci-g. */
MORPHLAB_API morphlab_status morphlab_generate(const char* family, size_t order, morphlab_report** out);
/* Suites: fibonacci-mus, tm-mus, occ-preserve, no-closed-form, occ-lemmas,
 * if-parity, structural.  Decision is 1 iff every instance passed. */
MORPHLAB_API morphlab_status morphlab_verify(const morphlab_context* ctx, const char* suite, size_t max_order,
                                             morphlab_report** out);
/* Times the IF decision on u_0 = u, u_{j+1} = u_j u_j for j < steps; the
 * median of `repeats` runs per size.  Records carry length, seconds and the
 * ratio to the previous size. */
MORPHLAB_API morphlab_status morphlab_bench_doubling(const morphlab_morphism* m, const char* u, size_t steps,
                                                     size_t repeats, morphlab_report** out);
/* Same, on u = F_i (fibonacci) or tm_i (thue-morse) for from <= i <= to. */
MORPHLAB_API morphlab_status morphlab_bench_family(const morphlab_morphism* m, const char* family, size_t from,
                                                   size_t to, size_t repeats, morphlab_report** out);
/* S_i, P_pref and P_suf of a word over the target alphabet. */
MORPHLAB_API morphlab_status morphlab_scan(const morphlab_morphism* m, const char* w, morphlab_report** out);
/* Kinds: image, interfered, circular.  Bounded by the context budget. */
MORPHLAB_API morphlab_status morphlab_factorize(const morphlab_context* ctx, const morphlab_morphism* m,
                                                const char* w, const char* kind, morphlab_report** out);

/* ---- reports ---- */

MORPHLAB_API void morphlab_report_free(morphlab_report* r);
/* 1 = true / all passed, 0 = false / some failure. */
MORPHLAB_API int morphlab_report_decision(const morphlab_report* r);
MORPHLAB_API size_t morphlab_report_record_count(const morphlab_report* r);
MORPHLAB_API const char* morphlab_report_record_kind(const morphlab_report* r, size_t record);
MORPHLAB_API const char* morphlab_report_record_text(const morphlab_report* r, size_t record);
MORPHLAB_API size_t morphlab_report_field_count(const morphlab_report* r, size_t record);
MORPHLAB_API const char* morphlab_report_field_key(const morphlab_report* r, size_t record, size_t field);
MORPHLAB_API const char* morphlab_report_field_value(const morphlab_report* r, size_t record, size_t field);
/* Value of the first field named `key`, or NULL. */
MORPHLAB_API const char* morphlab_report_field(const morphlab_report* r, size_t record, const char* key);

#ifdef __cplusplus
}
#endif

#endif /* MORPHLAB_H */
