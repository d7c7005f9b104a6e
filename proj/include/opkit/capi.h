/* Copyright (c) 2026 The opkit authors
 *
 * Licensed under the Apache License, Version 2.0. See the LICENSE file
 * in the project root for license terms.
 *
 * C interface to the operational-probabilistic-theory toolkit. All
 * functions return an error code; results are JSON strings owned by the
 * library and released with opkit_string_free. Handles are opaque and
 * released with opkit_theory_free. The last error message is thread-local.
 */

#ifndef OPKIT_CAPI_H
#define OPKIT_CAPI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct opkit_theory opkit_theory;

enum opkit_status {
  OPKIT_OK = 0,
  OPKIT_ERR_PARSE = 1,
  OPKIT_ERR_INVALID = 2,
  OPKIT_ERR_NUMERIC = 3,
  OPKIT_ERR_NULL_ARGUMENT = 4
};

/* Load a theory from a JSON file on disk. */
int opkit_theory_load(const char* path, opkit_theory** out);

/* Load a theory from a JSON string. */
int opkit_theory_load_json(const char* json, opkit_theory** out);

void opkit_theory_free(opkit_theory* t);

/* Coordinate dimension of the effect space. */
int opkit_theory_dimension(const opkit_theory* t);

/* Serialize the theory back to its file format. */
int opkit_theory_save_json(const opkit_theory* t, char** json_out);

/* Run the audit suite. checks_csv may be NULL (all checks) or a comma
 * separated list of check-id prefixes. The report is deterministic given
 * (theory, seed, tol_scale, samples). */
int opkit_audit(const opkit_theory* t, uint64_t seed, double tol_scale,
                int samples, const char* checks_csv, char** json_out);

/* Bilinear form, signature, sigma, Gram eigenvalues, adjoint spot checks.
 * Needs a faithful_state in the loaded theory. */
int opkit_gns_report(const opkit_theory* t, uint64_t seed, char** json_out);

/* Transpose of a transformation given as a JSON row-major matrix
 * {"matrix": [[...], ...]}. Needs a faithful_state. */
int opkit_transpose(const opkit_theory* t, const char* transformation_json,
                    char** json_out);

void opkit_string_free(char* s);

/* Message for the most recent failing call on this thread. */
const char* opkit_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
