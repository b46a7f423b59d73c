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

// Sweep runner over the qcoll C API: scans the (eta, q) grid with the
// selected backend and writes the CSV table (and optionally the SVG plot)
// of delta-D against the measurement resolution floor.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcoll.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(qcoll_status status) {
    return status == QCOLL_ERROR_IO ? kExitIo : kExitUsage;
}

int fail(qcoll_status status) {
    std::fprintf(stderr, "qcoll: %s: %s\n", qcoll_status_name(status), qcoll_last_error());
    return exit_code_for(status);
}

std::string get_path(const qcoll_sweep_config* cfg,
                     qcoll_status (*getter)(const qcoll_sweep_config*, char*, size_t, size_t*)) {
    size_t needed = 0;
    getter(cfg, nullptr, 0, &needed);
    std::string out(needed, '\0');
    getter(cfg, out.data(), out.size(), &needed);
    out.resize(needed > 0 ? needed - 1 : 0);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collisional-model non-Markovianity sweep"};

    std::string config_path;
    app.add_option("--config", config_path, "flat key-value config file applied before flags");

    // Flag values are passed through as text so the library does all
    // parsing and validation in one place.
    std::vector<std::pair<std::string, std::string>> overrides;
    auto passthrough = [&](const std::string& flag, const std::string& key,
                           const std::string& help) {
        app.add_option_function<std::string>(
            flag, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); },
            help);
    };
    passthrough("--eta-min", "eta_min", "smallest collision strength");
    passthrough("--eta-max", "eta_max", "largest collision strength");
    passthrough("--eta-steps", "eta_steps", "number of eta grid points");
    passthrough("--q", "q_values", "comma-separated environment correlations in [0,1]");
    passthrough("--mode", "mode", "backend: map | circuit | pulse | tomography");
    passthrough("--env-flavor", "env_flavor", "environment state: classical | entangled");
    passthrough("--delta-r", "delta_r", "Bloch-vector uncertainty of the measurement");
    passthrough("--shots", "shots", "tomography shots per Pauli axis");
    passthrough("--seed", "seed", "seed of the deterministic random stream");
    passthrough("--threshold-rule", "threshold_rule",
                "conclusiveness floor: single_distance | distance_difference");
    passthrough("--out", "output_path", "CSV output path");
    passthrough("--svg", "svg_path", "SVG plot output path (omit to skip the plot)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "qcoll: %s\n", e.what());
        return kExitUsage;
    }

    std::unique_ptr<qcoll_sweep_config, void (*)(qcoll_sweep_config*)> cfg(
        qcoll_sweep_config_new(), qcoll_sweep_config_free);
    if (!cfg) {
        std::fprintf(stderr, "qcoll: out of memory\n");
        return kExitUsage;
    }

    if (!config_path.empty()) {
        qcoll_status status = qcoll_sweep_config_load_file(cfg.get(), config_path.c_str());
        if (status != QCOLL_OK) {
            return fail(status);
        }
    }
    for (const auto& [key, value] : overrides) {
        qcoll_status status = qcoll_sweep_config_set(cfg.get(), key.c_str(), value.c_str());
        if (status != QCOLL_OK) {
            return fail(status);
        }
    }

    qcoll_sweep_result* raw_result = nullptr;
    qcoll_status status = qcoll_run_sweep(cfg.get(), &raw_result);
    if (status != QCOLL_OK) {
        return fail(status);
    }
    std::unique_ptr<qcoll_sweep_result, void (*)(qcoll_sweep_result*)> result(
        raw_result, qcoll_sweep_result_free);

    std::string csv_path = get_path(cfg.get(), qcoll_sweep_config_get_output_path);
    status = qcoll_write_csv(result.get(), csv_path.c_str());
    if (status != QCOLL_OK) {
        return fail(status);
    }

    std::string svg_path = get_path(cfg.get(), qcoll_sweep_config_get_svg_path);
    if (!svg_path.empty()) {
        status = qcoll_write_svg(result.get(), svg_path.c_str());
        if (status != QCOLL_OK) {
            return fail(status);
        }
    }

    size_t rows = qcoll_sweep_result_rows(result.get());
    size_t conclusive = 0;
    for (size_t i = 0; i < rows; ++i) {
        int flag = 0;
        qcoll_sweep_result_row(result.get(), i, nullptr, nullptr, nullptr, nullptr, nullptr,
                               nullptr, nullptr, &flag);
        conclusive += flag == 1 ? 1 : 0;
    }
    std::printf("wrote %zu rows to %s (%zu conclusive)\n", rows, csv_path.c_str(), conclusive);
    if (!svg_path.empty()) {
        std::printf("wrote plot to %s\n", svg_path.c_str());
    }
    return 0;
}
