/* Copyright 2026 The Folia Authors
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

/* C interface to libfolia. Forms are opaque handles; reports come back as
 * JSON strings owned by the caller (release with folia_string_free). Every
 * call returns a status; on failure folia_last_error() describes it. The
 * error slot is per thread. */

#ifndef FOLIA_FOLIA_H
#define FOLIA_FOLIA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct folia_form folia_form;

typedef enum {
  FOLIA_OK = 0,
  FOLIA_ERR_SYNTAX = 1,
  FOLIA_ERR_VALIDATION = 2,
  FOLIA_ERR_PRECONDITION = 3,
  FOLIA_ERR_BUDGET = 4,
  FOLIA_ERR_INTERNAL = 5,
  FOLIA_ERR_IO = 6,
  FOLIA_ERR_ARGUMENT = 7
} folia_status;

const char* folia_version(void);

/* Message of the last failure on this thread, or "" after a success. */
const char* folia_last_error(void);
/* Library error name of the last failure (e.g. "EulerViolation"), or "". */
const char* folia_last_error_code(void);
/* Line and column of the last syntax error, 0 otherwise. */
int folia_last_error_line(void);
int folia_last_error_column(void);

/* Overrides the Gröbner step budget for calls made after this one; 0 restores the default. */
void folia_set_step_budget(long steps);

folia_status folia_form_parse(const char* text, folia_form** out);
folia_status folia_form_load(const char* path, folia_form** out);
void folia_form_free(folia_form* form);
folia_status folia_form_print(const folia_form* form, char** out);
int folia_form_degree(const folia_form* form);
int folia_form_num_vars(const folia_form* form);
/* Name from the file's metadata, or NULL. Owned by the handle. */
const char* folia_form_name(const folia_form* form);

void folia_string_free(char* s);

/* {"degree", "integrable", "codim_ok", "singular_dim"} */
folia_status folia_check(const folia_form* form, char** json);
/* Classification report of a P^3 form. */
folia_status folia_classify(const folia_form* form, char** json);
/* {"linear": [[l_0..l_n], ...], "constant": [[a_0..a_n], ...]} */
folia_status folia_syzygies(const folia_form* form, char** json);
/* Distribution family and its integrable members. */
folia_status folia_family(const folia_form* form, char** json);
/* {"verdict", "reason", "splitting_type", "witness"} */
folia_status folia_determine(const folia_form* form, char** json);
/* Plane form recovered from a constant syzygy. */
folia_status folia_pullback_structure(const folia_form* form, char** json);

/* Constructors. Lists are comma separated; factors are polynomials in
 * z0..z3 (z0..z2 when plane is nonzero). */
folia_status folia_make_logarithmic(const char* factors, const char* weights, int plane, folia_form** out);
folia_status folia_make_pullback(const folia_form* plane, folia_form** out);
folia_status folia_make_exceptional(int d, folia_form** out);
folia_status folia_apply_projectivity(const folia_form* form, const char* matrix_rows, folia_form** out);

/* Engine access for debugging: generators are comma separated polynomials
 * in z0..z_{num_vars-1}. */
folia_status folia_groebner(int num_vars, const char* generators, char** json);
folia_status folia_saturate(int num_vars, const char* generators, char** json);

#ifdef __cplusplus
}
#endif

#endif /* FOLIA_FOLIA_H */
