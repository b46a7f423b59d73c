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

#ifndef QCOLL_SWEEP_HPP
#define QCOLL_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcoll/resolution.hpp"
#include "qcoll/states.hpp"

namespace qcoll {

enum class SweepMode { Map, Circuit, Pulse, Tomography };

const char* sweep_mode_name(SweepMode mode);
SweepMode sweep_mode_from_name(const std::string& name);

const char* env_flavor_name(EnvFlavor flavor);
EnvFlavor env_flavor_from_name(const std::string& name);

const char* threshold_rule_name(ThresholdRule rule);
ThresholdRule threshold_rule_from_name(const std::string& name);

/// Full description of one experiment sweep over the (eta, q) grid.
/// Defaults reproduce the headline two-collision scan: eta on (0, 0.1],
/// q in {0, 0.15, 0.25}, ideal map backend, delta_r = 5e-4.
struct SweepConfig {
    double eta_min = 0.001;
    double eta_max = 0.1;
    int eta_steps = 100;
    std::vector<double> q_values = {0.0, 0.15, 0.25};
    SweepMode mode = SweepMode::Map;
    EnvFlavor env_flavor = EnvFlavor::Classical;
    double delta_r = 5e-4;
    uint64_t shots = 100000;
    uint64_t seed = 1234;
    ThresholdRule threshold_rule = ThresholdRule::SingleDistance;
    std::string output_path = "sweep.csv";
    std::string svg_path;  // optional; empty = no plot

    void validate() const;
    std::vector<double> eta_grid() const;
};

/// Read a flat key-value config file ("key = value", '#' comments).
/// Recognized keys match the SweepConfig fields: eta_min, eta_max,
/// eta_steps, q_values, mode, env_flavor, delta_r, shots, seed,
/// threshold_rule, output_path, svg_path.
SweepConfig load_config_file(const std::string& path);
/// Same, but layered on top of an existing config.
void apply_config_file(SweepConfig& cfg, const std::string& path);
void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value);

struct SweepRow {
    double eta = 0.0;
    double q = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double delta_d = 0.0;
    double d1_analytic = 0.0;
    double d2_analytic = 0.0;
    double delta_d_analytic = 0.0;
    double delta_d_error = 0.0;
    Detectability verdict = Detectability::Inconclusive;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/// One row per (eta, q) grid point, eta outer, q inner. Grid points are
/// evaluated in parallel with per-row seeds derived from (seed, row
/// index), so the result is identical regardless of scheduling.
SweepResult run_sweep(const SweepConfig& cfg);

/// CSV with header eta,q,d1,d2,delta_d,delta_d_analytic,delta_d_error,verdict
/// and %.17g doubles: byte-deterministic for a fixed config and seed.
std::string csv_string(const SweepResult& result);
void emit_csv(const SweepResult& result, const std::string& path);

/// delta-D versus eta, one polyline per q, plus the horizontal
/// resolution-floor line at delta_d_error.
std::string svg_string(const SweepResult& result);
void emit_svg(const SweepResult& result, const std::string& path);

}  // namespace qcoll

#endif
