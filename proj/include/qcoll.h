/* Copyright 2026 qcoll developers
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

/* C interface of the qcoll shared library.
 *
 * Every function returns a qcoll_status; QCOLL_OK means success and any
 * other value leaves outputs untouched. A human-readable message for the
 * last failure on the calling thread is available from qcoll_last_error().
 * Objects are opaque handles created and destroyed by the library.
 */

#ifndef QCOLL_H
#define QCOLL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcoll_status {
    QCOLL_OK = 0,
    QCOLL_ERROR_ARGUMENT = 1,
    QCOLL_ERROR_DIMENSION = 2,
    QCOLL_ERROR_CONTRACT = 3,
    QCOLL_ERROR_CONFIG = 4,
    QCOLL_ERROR_IO = 5,
} qcoll_status;

const char* qcoll_version(void);
const char* qcoll_status_name(qcoll_status status);
const char* qcoll_last_error(void);

/* ---- scalar helpers ------------------------------------------------- */

/* D after collision one for the orthogonal pair: sqrt(3 + cos 4 eta)/2. */
qcoll_status qcoll_closed_form_d1(double eta, double* out);
/* D after collision two with environment correlation q in [0, 1]. */
qcoll_status qcoll_closed_form_d2(double eta, double q, double* out);
/* Leading small-eta change (1 - 4q) eta^2. */
qcoll_status qcoll_small_eta_delta_d(double eta, double q, double* out);
/* Distance uncertainty from Bloch uncertainty: delta_r / sqrt(2). */
qcoll_status qcoll_propagate_error(double delta_r, double* out);

/* Trace distance between two Bloch vectors: |r1 - r2| / 2. */
qcoll_status qcoll_bloch_trace_distance(const double r1[3], const double r2[3], double* out);

/* ---- one-shot trajectory -------------------------------------------- */

/* Run the two-collision experiment at (eta, q) with the given backend
 * ("map", "circuit" or "pulse"), returning delta_d = D(2) - D(1) and the
 * strict increase witness (1 if any distance increase occurred). */
qcoll_status qcoll_trajectory_delta_d(double eta, double q, const char* mode, double* delta_d,
                                      int* non_markovian);

/* ---- pulse programs -------------------------------------------------- */

/* Compile the collision on environment spin `which` (1 or 2) of the
 * default three-spin system and serialize it in the line format
 *   ROT <spin> <axis> <angle_rad> <phase_rad> | FREE <tau_s> | GRAD
 * Writes up to `cap` bytes including the terminator; *needed receives the
 * full size including the terminator regardless. */
qcoll_status qcoll_compile_collision_text(double eta, int which, char* buf, size_t cap,
                                          size_t* needed);

/* ---- sweeps ----------------------------------------------------------- */

typedef struct qcoll_sweep_config qcoll_sweep_config;
typedef struct qcoll_sweep_result qcoll_sweep_result;

/* A config starts out with the default scan: eta in (0, 0.1] over 100
 * steps, q in {0, 0.15, 0.25}, map mode, delta_r = 5e-4, seed 1234. */
qcoll_sweep_config* qcoll_sweep_config_new(void);
void qcoll_sweep_config_free(qcoll_sweep_config* cfg);

/* Apply a flat key-value config file on top of the current values. */
qcoll_status qcoll_sweep_config_load_file(qcoll_sweep_config* cfg, const char* path);
/* Set one key ("eta_min", "q_values", "mode", ...) from its text form,
 * using the same syntax as the config file. */
qcoll_status qcoll_sweep_config_set(qcoll_sweep_config* cfg, const char* key, const char* value);
qcoll_status qcoll_sweep_config_get_output_path(const qcoll_sweep_config* cfg, char* buf,
                                                size_t cap, size_t* needed);
qcoll_status qcoll_sweep_config_get_svg_path(const qcoll_sweep_config* cfg, char* buf, size_t cap,
                                             size_t* needed);

qcoll_status qcoll_run_sweep(const qcoll_sweep_config* cfg, qcoll_sweep_result** out);
void qcoll_sweep_result_free(qcoll_sweep_result* result);

size_t qcoll_sweep_result_rows(const qcoll_sweep_result* result);
/* Column layout of one row; `conclusive` is 1 when the measured delta_d
 * clears the resolution floor. Null output pointers are skipped. */
qcoll_status qcoll_sweep_result_row(const qcoll_sweep_result* result, size_t index, double* eta,
                                    double* q, double* d1, double* d2, double* delta_d,
                                    double* delta_d_analytic, double* delta_d_error,
                                    int* conclusive);

qcoll_status qcoll_write_csv(const qcoll_sweep_result* result, const char* path);
qcoll_status qcoll_write_svg(const qcoll_sweep_result* result, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* QCOLL_H */
