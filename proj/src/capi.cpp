// Copyright 2026 qcoll developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcoll.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "qcoll/collision.hpp"
#include "qcoll/error.hpp"
#include "qcoll/nmrsim.hpp"
#include "qcoll/resolution.hpp"
#include "qcoll/sweep.hpp"
#include "qcoll/witness.hpp"

namespace {

thread_local std::string g_last_error;

qcoll_status status_of(qcoll::ErrorKind kind) {
    switch (kind) {
        case qcoll::ErrorKind::Argument:
            return QCOLL_ERROR_ARGUMENT;
        case qcoll::ErrorKind::Dimension:
            return QCOLL_ERROR_DIMENSION;
        case qcoll::ErrorKind::Contract:
            return QCOLL_ERROR_CONTRACT;
        case qcoll::ErrorKind::Config:
            return QCOLL_ERROR_CONFIG;
        case qcoll::ErrorKind::Io:
            return QCOLL_ERROR_IO;
    }
    return QCOLL_ERROR_ARGUMENT;
}

template <typename Fn>
qcoll_status guarded(Fn&& fn) {
    try {
        fn();
        return QCOLL_OK;
    } catch (const qcoll::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QCOLL_ERROR_ARGUMENT;
    }
}

qcoll_status copy_out(const std::string& text, char* buf, size_t cap, size_t* needed) {
    if (needed != nullptr) {
        *needed = text.size() + 1;
    }
    if (buf != nullptr && cap > 0) {
        size_t n = text.size() + 1 <= cap ? text.size() : cap - 1;
        std::memcpy(buf, text.data(), n);
        buf[n] = '\0';
    }
    return QCOLL_OK;
}

}  // namespace

struct qcoll_sweep_config {
    qcoll::SweepConfig cfg;
};

struct qcoll_sweep_result {
    qcoll::SweepResult result;
};

extern "C" {

const char* qcoll_version(void) {
    return "1.0.0";
}

const char* qcoll_status_name(qcoll_status status) {
    switch (status) {
        case QCOLL_OK:
            return "ok";
        case QCOLL_ERROR_ARGUMENT:
            return "argument-error";
        case QCOLL_ERROR_DIMENSION:
            return "dimension-error";
        case QCOLL_ERROR_CONTRACT:
            return "contract-violation";
        case QCOLL_ERROR_CONFIG:
            return "config-error";
        case QCOLL_ERROR_IO:
            return "io-error";
    }
    return "unknown";
}

const char* qcoll_last_error(void) {
    return g_last_error.c_str();
}

qcoll_status qcoll_closed_form_d1(double eta, double* out) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { *out = qcoll::closed_form_d1(eta); });
}

qcoll_status qcoll_closed_form_d2(double eta, double q, double* out) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { *out = qcoll::closed_form_d2(eta, q); });
}

qcoll_status qcoll_small_eta_delta_d(double eta, double q, double* out) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { *out = qcoll::small_eta_delta_d(eta, q); });
}

qcoll_status qcoll_propagate_error(double delta_r, double* out) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { *out = qcoll::propagate_error(delta_r); });
}

qcoll_status qcoll_bloch_trace_distance(const double r1[3], const double r2[3], double* out) {
    if (r1 == nullptr || r2 == nullptr || out == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] {
        qcoll::BlochVector a{r1[0], r1[1], r1[2]};
        qcoll::BlochVector b{r2[0], r2[1], r2[2]};
        *out = qcoll::bloch_trace_distance(a, b);
    });
}

qcoll_status qcoll_trajectory_delta_d(double eta, double q, const char* mode, double* delta_d,
                                      int* non_markovian) {
    if (mode == nullptr || delta_d == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] {
        std::string mode_name(mode);
        std::vector<qcoll::DensityMatrix> t1, t2;
        if (mode_name == "map") {
            qcoll::DensityMatrix a = qcoll::pure_state({0});
            qcoll::DensityMatrix b = qcoll::pure_state({1});
            t1 = {a, qcoll::map_lambda10(a, eta), qcoll::map_lambda20(a, eta, eta, q)};
            t2 = {b, qcoll::map_lambda10(b, eta), qcoll::map_lambda20(b, eta, eta, q)};
        } else if (mode_name == "circuit" || mode_name == "pulse") {
            qcoll::CollisionConfig cc{{eta, eta},
                                      qcoll::EnvSpec{q, qcoll::EnvFlavor::Classical}};
            if (mode_name == "circuit") {
                t1 = qcoll::evolve_sequence(qcoll::pure_state({0}), cc);
                t2 = qcoll::evolve_sequence(qcoll::pure_state({1}), cc);
            } else {
                qcoll::SpinSystem sys = qcoll::default_spin_system();
                qcoll::PulseProgram c1 = qcoll::compile_collision(eta, 1, sys);
                qcoll::PulseProgram c2 = qcoll::compile_collision(eta, 2, sys);
                qcoll::DensityMatrix env = qcoll::env_state(cc.env);
                for (int bit : {0, 1}) {
                    qcoll::DensityMatrix global(
                        qcoll::kron(qcoll::pure_state({bit}).matrix(), env.matrix()));
                    qcoll::DensityMatrix s1 = qcoll::run_program(global, sys, c1);
                    qcoll::DensityMatrix s2 = qcoll::run_program(s1, sys, c2);
                    std::vector<qcoll::DensityMatrix> traj = {
                        qcoll::pure_state({bit}),
                        qcoll::DensityMatrix(qcoll::partial_trace(s1.matrix(), 3, {0})),
                        qcoll::DensityMatrix(qcoll::partial_trace(s2.matrix(), 3, {0}))};
                    (bit == 0 ? t1 : t2) = traj;
                }
            }
        } else {
            qcoll::raise(qcoll::ErrorKind::Argument,
                         "trajectory mode must be map, circuit or pulse");
        }
        qcoll::Trajectory traj = qcoll::make_trajectory(t1, t2);
        *delta_d = traj.delta_d();
        if (non_markovian != nullptr) {
            *non_markovian = qcoll::blp_verdict(traj) == qcoll::BlpVerdict::NonMarkovian ? 1 : 0;
        }
    });
}

qcoll_status qcoll_compile_collision_text(double eta, int which, char* buf, size_t cap,
                                          size_t* needed) {
    return guarded([&] {
        qcoll::PulseProgram prog =
            qcoll::compile_collision(eta, which, qcoll::default_spin_system());
        copy_out(qcoll::serialize_program(prog), buf, cap, needed);
    });
}

qcoll_sweep_config* qcoll_sweep_config_new(void) {
    return new (std::nothrow) qcoll_sweep_config{};
}

void qcoll_sweep_config_free(qcoll_sweep_config* cfg) {
    delete cfg;
}

qcoll_status qcoll_sweep_config_load_file(qcoll_sweep_config* cfg, const char* path) {
    if (cfg == nullptr || path == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { qcoll::apply_config_file(cfg->cfg, path); });
}

qcoll_status qcoll_sweep_config_set(qcoll_sweep_config* cfg, const char* key, const char* value) {
    if (cfg == nullptr || key == nullptr || value == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { qcoll::apply_config_entry(cfg->cfg, key, value); });
}

qcoll_status qcoll_sweep_config_get_output_path(const qcoll_sweep_config* cfg, char* buf,
                                                size_t cap, size_t* needed) {
    if (cfg == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return copy_out(cfg->cfg.output_path, buf, cap, needed);
}

qcoll_status qcoll_sweep_config_get_svg_path(const qcoll_sweep_config* cfg, char* buf, size_t cap,
                                             size_t* needed) {
    if (cfg == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return copy_out(cfg->cfg.svg_path, buf, cap, needed);
}

qcoll_status qcoll_run_sweep(const qcoll_sweep_config* cfg, qcoll_sweep_result** out) {
    if (cfg == nullptr || out == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] {
        auto* result = new qcoll_sweep_result{qcoll::run_sweep(cfg->cfg)};
        *out = result;
    });
}

void qcoll_sweep_result_free(qcoll_sweep_result* result) {
    delete result;
}

size_t qcoll_sweep_result_rows(const qcoll_sweep_result* result) {
    return result == nullptr ? 0 : result->result.rows.size();
}

qcoll_status qcoll_sweep_result_row(const qcoll_sweep_result* result, size_t index, double* eta,
                                    double* q, double* d1, double* d2, double* delta_d,
                                    double* delta_d_analytic, double* delta_d_error,
                                    int* conclusive) {
    if (result == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    if (index >= result->result.rows.size()) {
        g_last_error = "row index out of range";
        return QCOLL_ERROR_ARGUMENT;
    }
    const qcoll::SweepRow& row = result->result.rows[index];
    if (eta != nullptr) {
        *eta = row.eta;
    }
    if (q != nullptr) {
        *q = row.q;
    }
    if (d1 != nullptr) {
        *d1 = row.d1;
    }
    if (d2 != nullptr) {
        *d2 = row.d2;
    }
    if (delta_d != nullptr) {
        *delta_d = row.delta_d;
    }
    if (delta_d_analytic != nullptr) {
        *delta_d_analytic = row.delta_d_analytic;
    }
    if (delta_d_error != nullptr) {
        *delta_d_error = row.delta_d_error;
    }
    if (conclusive != nullptr) {
        *conclusive = row.verdict == qcoll::Detectability::Conclusive ? 1 : 0;
    }
    return QCOLL_OK;
}

qcoll_status qcoll_write_csv(const qcoll_sweep_result* result, const char* path) {
    if (result == nullptr || path == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { qcoll::emit_csv(result->result, path); });
}

qcoll_status qcoll_write_svg(const qcoll_sweep_result* result, const char* path) {
    if (result == nullptr || path == nullptr) {
        g_last_error = "null pointer";
        return QCOLL_ERROR_ARGUMENT;
    }
    return guarded([&] { qcoll::emit_svg(result->result, path); });
}

}  // extern "C"
