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

#include "qcoll/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "qcoll/collision.hpp"
#include "qcoll/error.hpp"
#include "qcoll/nmrsim.hpp"
#include "qcoll/rng.hpp"
#include "qcoll/witness.hpp"

namespace qcoll {

const char* sweep_mode_name(SweepMode mode) {
    switch (mode) {
        case SweepMode::Map:
            return "map";
        case SweepMode::Circuit:
            return "circuit";
        case SweepMode::Pulse:
            return "pulse";
        case SweepMode::Tomography:
            return "tomography";
    }
    return "?";
}

SweepMode sweep_mode_from_name(const std::string& name) {
    if (name == "map") {
        return SweepMode::Map;
    }
    if (name == "circuit") {
        return SweepMode::Circuit;
    }
    if (name == "pulse") {
        return SweepMode::Pulse;
    }
    if (name == "tomography") {
        return SweepMode::Tomography;
    }
    raise(ErrorKind::Config, "unknown mode '" + name + "' (map|circuit|pulse|tomography)");
}

const char* env_flavor_name(EnvFlavor flavor) {
    return flavor == EnvFlavor::Classical ? "classical" : "entangled";
}

EnvFlavor env_flavor_from_name(const std::string& name) {
    if (name == "classical") {
        return EnvFlavor::Classical;
    }
    if (name == "entangled") {
        return EnvFlavor::Entangled;
    }
    raise(ErrorKind::Config, "unknown env_flavor '" + name + "' (classical|entangled)");
}

const char* threshold_rule_name(ThresholdRule rule) {
    return rule == ThresholdRule::SingleDistance ? "single_distance" : "distance_difference";
}

ThresholdRule threshold_rule_from_name(const std::string& name) {
    if (name == "single_distance") {
        return ThresholdRule::SingleDistance;
    }
    if (name == "distance_difference") {
        return ThresholdRule::DistanceDifference;
    }
    raise(ErrorKind::Config,
          "unknown threshold_rule '" + name + "' (single_distance|distance_difference)");
}

void SweepConfig::validate() const {
    if (!(eta_min <= eta_max)) {
        raise(ErrorKind::Config, "sweep: eta_min must not exceed eta_max");
    }
    if (!std::isfinite(eta_min) || !std::isfinite(eta_max)) {
        raise(ErrorKind::Config, "sweep: eta bounds must be finite");
    }
    if (eta_steps < 1) {
        raise(ErrorKind::Config, "sweep: eta_steps must be at least 1");
    }
    if (q_values.empty()) {
        raise(ErrorKind::Config, "sweep: need at least one q value");
    }
    for (double q : q_values) {
        if (!(q >= 0.0 && q <= 1.0)) {
            raise(ErrorKind::Config, "sweep: q values must lie in [0, 1]");
        }
    }
    if (delta_r < 0.0) {
        raise(ErrorKind::Config, "sweep: delta_r must be nonnegative");
    }
    if (shots < 1) {
        raise(ErrorKind::Config, "sweep: shots must be at least 1");
    }
    if (output_path.empty()) {
        raise(ErrorKind::Config, "sweep: output_path must not be empty");
    }
}

std::vector<double> SweepConfig::eta_grid() const {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(eta_steps));
    if (eta_steps == 1) {
        grid.push_back(eta_min);
        return grid;
    }
    double step = (eta_max - eta_min) / static_cast<double>(eta_steps - 1);
    for (int i = 0; i < eta_steps; ++i) {
        grid.push_back(eta_min + step * static_cast<double>(i));
    }
    return grid;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        raise(ErrorKind::Config, "config: bad numeric value '" + value + "' for " + key);
    }
}

uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return static_cast<uint64_t>(v);
    } catch (const std::exception&) {
        raise(ErrorKind::Config, "config: bad integer value '" + value + "' for " + key);
    }
}

}  // namespace

void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "eta_min") {
        cfg.eta_min = parse_double(key, value);
    } else if (key == "eta_max") {
        cfg.eta_max = parse_double(key, value);
    } else if (key == "eta_steps") {
        cfg.eta_steps = static_cast<int>(parse_uint(key, value));
    } else if (key == "q_values") {
        std::vector<double> qs;
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            qs.push_back(parse_double(key, trim(item)));
        }
        if (qs.empty()) {
            raise(ErrorKind::Config, "config: q_values must list at least one value");
        }
        cfg.q_values = qs;
    } else if (key == "mode") {
        cfg.mode = sweep_mode_from_name(value);
    } else if (key == "env_flavor") {
        cfg.env_flavor = env_flavor_from_name(value);
    } else if (key == "delta_r") {
        cfg.delta_r = parse_double(key, value);
    } else if (key == "shots") {
        cfg.shots = parse_uint(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_uint(key, value);
    } else if (key == "threshold_rule") {
        cfg.threshold_rule = threshold_rule_from_name(value);
    } else if (key == "output_path") {
        cfg.output_path = value;
    } else if (key == "svg_path") {
        cfg.svg_path = value;
    } else {
        raise(ErrorKind::Config, "config: unknown key '" + key + "'");
    }
}

void apply_config_file(SweepConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        raise(ErrorKind::Io, "config: cannot open '" + path + "'");
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            raise(ErrorKind::Config, "config: line " + std::to_string(line_no) +
                                         " is not 'key = value': " + stripped);
        }
        apply_config_entry(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
}

SweepConfig load_config_file(const std::string& path) {
    SweepConfig cfg;
    apply_config_file(cfg, path);
    return cfg;
}

namespace {

struct StatePair {
    BlochVector r1;
    BlochVector r2;
};

// The four reduced states of one grid point: the orthogonal initial pair
// after collision one and after collision two, from the chosen backend.
struct GridStates {
    DensityMatrix rho1_step1;
    DensityMatrix rho2_step1;
    DensityMatrix rho1_step2;
    DensityMatrix rho2_step2;
};

GridStates map_states(double eta, double q) {
    DensityMatrix rho1 = pure_state({0});
    DensityMatrix rho2 = pure_state({1});
    return GridStates{map_lambda10(rho1, eta), map_lambda10(rho2, eta),
                      map_lambda20(rho1, eta, eta, q), map_lambda20(rho2, eta, eta, q)};
}

GridStates circuit_states(double eta, double q, EnvFlavor flavor) {
    CollisionConfig cc{{eta, eta}, EnvSpec{q, flavor}};
    std::vector<DensityMatrix> t1 = evolve_sequence(pure_state({0}), cc);
    std::vector<DensityMatrix> t2 = evolve_sequence(pure_state({1}), cc);
    return GridStates{t1[1], t2[1], t1[2], t2[2]};
}

GridStates pulse_states(double eta, double q, EnvFlavor flavor, const SpinSystem& sys) {
    PulseProgram col1 = compile_collision(eta, 1, sys);
    PulseProgram col2 = compile_collision(eta, 2, sys);
    DensityMatrix env = env_state(EnvSpec{q, flavor});

    auto evolve = [&](int bit) {
        DensityMatrix global(kron(pure_state({bit}).matrix(), env.matrix()));
        DensityMatrix after1 = run_program(global, sys, col1);
        DensityMatrix after2 = run_program(after1, sys, col2);
        return std::pair<DensityMatrix, DensityMatrix>(
            DensityMatrix(partial_trace(after1.matrix(), 3, {0})),
            DensityMatrix(partial_trace(after2.matrix(), 3, {0})));
    };
    auto [a1, a2] = evolve(0);
    auto [b1, b2] = evolve(1);
    return GridStates{a1, b1, a2, b2};
}

SweepRow compute_row(const SweepConfig& cfg, const SpinSystem& sys, double eta, double q,
                     uint64_t row_index) {
    SweepRow row;
    row.eta = eta;
    row.q = q;
    row.d1_analytic = closed_form_d1(eta);
    row.d2_analytic = closed_form_d2(eta, q);
    row.delta_d_analytic = row.d2_analytic - row.d1_analytic;
    row.delta_d_error = propagate_error(cfg.delta_r);

    GridStates states = cfg.mode == SweepMode::Circuit
                            ? circuit_states(eta, q, cfg.env_flavor)
                            : cfg.mode == SweepMode::Pulse
                                  ? pulse_states(eta, q, cfg.env_flavor, sys)
                                  : map_states(eta, q);

    if (cfg.mode == SweepMode::Tomography) {
        uint64_t row_seed = SplitMix64::mix(cfg.seed ^ SplitMix64::mix(row_index));
        const DensityMatrix* rhos[4] = {&states.rho1_step1, &states.rho2_step1,
                                        &states.rho1_step2, &states.rho2_step2};
        BlochVector estimates[4];
        for (int i = 0; i < 4; ++i) {
            TomographyConfig tc{cfg.shots, SplitMix64::mix(row_seed ^ static_cast<uint64_t>(i))};
            estimates[i] = simulate_tomography(*rhos[i], tc).estimate;
            if (cfg.delta_r > 0.0) {
                NoiseSpec ns{cfg.delta_r,
                             SplitMix64::mix(row_seed ^ static_cast<uint64_t>(16 + i))};
                estimates[i] = perturb_bloch(estimates[i], ns);
            }
        }
        row.d1 = bloch_trace_distance(estimates[0], estimates[1]);
        row.d2 = bloch_trace_distance(estimates[2], estimates[3]);
    } else {
        row.d1 = trace_distance(states.rho1_step1, states.rho2_step1);
        row.d2 = trace_distance(states.rho1_step2, states.rho2_step2);
    }
    row.delta_d = row.d2 - row.d1;
    row.verdict = classify(row.delta_d, cfg.delta_r, cfg.threshold_rule);
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SpinSystem sys = default_spin_system();
    std::vector<double> etas = cfg.eta_grid();

    SweepResult result;
    result.config = cfg;
    std::size_t n_rows = etas.size() * cfg.q_values.size();
    result.rows.resize(n_rows);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= n_rows) {
                return;
            }
            double eta = etas[index / cfg.q_values.size()];
            double q = cfg.q_values[index % cfg.q_values.size()];
            result.rows[index] = compute_row(cfg, sys, eta, q, index);
        }
    };

    std::size_t n_threads = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), n_rows);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    return result;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string csv_string(const SweepResult& result) {
    if (result.rows.empty()) {
        raise(ErrorKind::Config, "emit_csv: result has no rows");
    }
    std::string out = "eta,q,d1,d2,delta_d,delta_d_analytic,delta_d_error,verdict\n";
    for (const SweepRow& row : result.rows) {
        out += format_double(row.eta);
        out += ',';
        out += format_double(row.q);
        out += ',';
        out += format_double(row.d1);
        out += ',';
        out += format_double(row.d2);
        out += ',';
        out += format_double(row.delta_d);
        out += ',';
        out += format_double(row.delta_d_analytic);
        out += ',';
        out += format_double(row.delta_d_error);
        out += ',';
        out += row.verdict == Detectability::Conclusive ? "Conclusive" : "Inconclusive";
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::string data = csv_string(result);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        raise(ErrorKind::Io, "emit_csv: cannot open '" + path + "' for writing");
    }
    out << data;
    out.flush();
    if (!out) {
        raise(ErrorKind::Io, "emit_csv: write to '" + path + "' failed");
    }
}

namespace {

std::string format_pixel(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string format_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

std::string svg_string(const SweepResult& result) {
    if (result.rows.empty()) {
        raise(ErrorKind::Config, "emit_svg: result has no rows");
    }
    const double width = 800.0, height = 560.0;
    const double left = 80.0, right = 770.0, top = 40.0, bottom = 500.0;

    double x_min = result.rows.front().eta;
    double x_max = result.rows.back().eta;
    if (x_max <= x_min) {
        x_max = x_min + 1.0;
    }
    double y_min = 0.0, y_max = 0.0;
    for (const SweepRow& row : result.rows) {
        y_min = std::min(y_min, row.delta_d);
        y_max = std::max(y_max, row.delta_d);
    }
    double floor_y = result.rows.front().delta_d_error;
    y_max = std::max(y_max, floor_y);
    double pad = 0.08 * std::max(y_max - y_min, 1e-12);
    y_min -= pad;
    y_max += pad;

    auto px = [&](double eta) { return left + (eta - x_min) / (x_max - x_min) * (right - left); };
    auto py = [&](double dd) { return bottom - (dd - y_min) / (y_max - y_min) * (bottom - top); };

    static const char* kPalette[] = {"#1f6fb4", "#e07b28", "#2e9147",
                                     "#b03a3a", "#7d4fa8", "#5b5b5b"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_pixel(width) +
           "\" height=\"" + format_pixel(height) + "\" viewBox=\"0 0 " + format_pixel(width) +
           " " + format_pixel(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + format_pixel(left) + "\" y1=\"" + format_pixel(bottom) + "\" x2=\"" +
           format_pixel(right) + "\" y2=\"" + format_pixel(bottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + format_pixel(left) + "\" y1=\"" + format_pixel(top) + "\" x2=\"" +
           format_pixel(left) + "\" y2=\"" + format_pixel(bottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double fx = x_min + (x_max - x_min) * i / 5.0;
        double fy = y_min + (y_max - y_min) * i / 5.0;
        svg += "<line x1=\"" + format_pixel(px(fx)) + "\" y1=\"" + format_pixel(bottom) +
               "\" x2=\"" + format_pixel(px(fx)) + "\" y2=\"" + format_pixel(bottom + 6.0) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_pixel(px(fx)) + "\" y=\"" + format_pixel(bottom + 22.0) +
               "\" font-size=\"13\" text-anchor=\"middle\">" + format_tick(fx) + "</text>\n";
        svg += "<line x1=\"" + format_pixel(left - 6.0) + "\" y1=\"" + format_pixel(py(fy)) +
               "\" x2=\"" + format_pixel(left) + "\" y2=\"" + format_pixel(py(fy)) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_pixel(left - 10.0) + "\" y=\"" + format_pixel(py(fy) + 4.0) +
               "\" font-size=\"13\" text-anchor=\"end\">" + format_tick(fy) + "</text>\n";
    }
    svg += "<text x=\"" + format_pixel((left + right) / 2.0) + "\" y=\"" +
           format_pixel(height - 14.0) +
           "\" font-size=\"15\" text-anchor=\"middle\">collision strength eta</text>\n";
    svg += "<text x=\"20\" y=\"" + format_pixel((top + bottom) / 2.0) +
           "\" font-size=\"15\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
           format_pixel((top + bottom) / 2.0) + ")\">delta D</text>\n";

    // resolution floor
    svg += "<line class=\"floor\" x1=\"" + format_pixel(left) + "\" y1=\"" +
           format_pixel(py(floor_y)) + "\" x2=\"" + format_pixel(right) + "\" y2=\"" +
           format_pixel(py(floor_y)) +
           "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    svg += "<text x=\"" + format_pixel(right - 4.0) + "\" y=\"" +
           format_pixel(py(floor_y) - 6.0) +
           "\" font-size=\"12\" text-anchor=\"end\" fill=\"#888888\">resolution floor</text>\n";

    // one series per q, grid order is eta-major so stride by q count
    std::size_t n_q = result.config.q_values.size();
    for (std::size_t qi = 0; qi < n_q; ++qi) {
        const char* color = kPalette[qi % 6];
        std::string points;
        for (std::size_t i = qi; i < result.rows.size(); i += n_q) {
            points += format_pixel(px(result.rows[i].eta));
            points += ',';
            points += format_pixel(py(result.rows[i].delta_d));
            points += ' ';
        }
        if (!points.empty()) {
            points.pop_back();
        }
        svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"" + format_pixel(left + 12.0) + "\" y=\"" +
               format_pixel(top + 18.0 * (static_cast<double>(qi) + 1.0)) +
               "\" font-size=\"13\" fill=\"" + color + "\">q = " +
               format_tick(result.config.q_values[qi]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void emit_svg(const SweepResult& result, const std::string& path) {
    std::string data = svg_string(result);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        raise(ErrorKind::Io, "emit_svg: cannot open '" + path + "' for writing");
    }
    out << data;
    out.flush();
    if (!out) {
        raise(ErrorKind::Io, "emit_svg: write to '" + path + "' failed");
    }
}

}  // namespace qcoll
