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

#include "qcoll/nmrsim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "qcoll/error.hpp"

namespace qcoll {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int spin_bit_sign(std::size_t basis_index, std::size_t n_spins, std::size_t spin) {
    // Bit 0 of a spin means "up" (I_z eigenvalue +1/2); spin 0 is the most
    // significant bit of the basis index.
    std::size_t bit = (basis_index >> (n_spins - 1 - spin)) & 1u;
    return bit == 0 ? 1 : -1;
}

}  // namespace

void SpinSystem::validate() const {
    std::size_t n = n_spins();
    if (n < 1 || n > 3) {
        raise(ErrorKind::Config, "SpinSystem: 1 to 3 spins supported");
    }
    for (double nu : offsets_hz) {
        if (!std::isfinite(nu)) {
            raise(ErrorKind::Config, "SpinSystem: offsets must be finite");
        }
    }
    if (couplings_hz.size() != n) {
        raise(ErrorKind::Config, "SpinSystem: coupling matrix must be n x n");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (couplings_hz[k].size() != n) {
            raise(ErrorKind::Config, "SpinSystem: coupling matrix must be n x n");
        }
        if (couplings_hz[k][k] != 0.0) {
            raise(ErrorKind::Config, "SpinSystem: coupling diagonal must be zero");
        }
        for (std::size_t m = 0; m < n; ++m) {
            if (!std::isfinite(couplings_hz[k][m]) || couplings_hz[k][m] != couplings_hz[m][k]) {
                raise(ErrorKind::Config, "SpinSystem: couplings must be finite and symmetric");
            }
        }
    }
}

SpinSystem default_spin_system() {
    // J(0,1) and J(0,2) back out of the quarter periods 1/(4J) = 3.58 ms
    // and 5.25 ms; offsets are well separated so the Ising truncation is
    // consistent. J(1,2) only matters for state preparation.
    SpinSystem sys;
    sys.offsets_hz = {0.0, 10000.0, -10000.0};
    double j01 = 1.0 / (4.0 * 0.00358);
    double j02 = 1.0 / (4.0 * 0.00525);
    double j12 = 30.0;
    sys.couplings_hz = {{0.0, j01, j02}, {j01, 0.0, j12}, {j02, j12, 0.0}};
    return sys;
}

PulseOp PulseOp::rotation(std::size_t target, Axis axis, double angle, double phase) {
    PulseOp op;
    op.kind = PulseKind::Rotation;
    op.target = target;
    op.axis = axis;
    op.angle = angle;
    op.phase = phase;
    return op;
}

PulseOp PulseOp::free_evolution(double duration) {
    PulseOp op;
    op.kind = PulseKind::FreeEvolution;
    op.duration = duration;
    return op;
}

PulseOp PulseOp::gradient() {
    PulseOp op;
    op.kind = PulseKind::Gradient;
    return op;
}

bool PulseOp::operator==(const PulseOp& other) const {
    if (kind != other.kind) {
        return false;
    }
    switch (kind) {
        case PulseKind::Rotation:
            return target == other.target && axis == other.axis && angle == other.angle &&
                   phase == other.phase;
        case PulseKind::FreeEvolution:
            return duration == other.duration;
        case PulseKind::Gradient:
            return true;
    }
    return false;
}

double PulseProgram::total_free_time() const {
    double total = 0.0;
    for (const PulseOp& op : ops) {
        if (op.kind == PulseKind::FreeEvolution) {
            total += op.duration;
        }
    }
    return total;
}

ComplexMatrix free_propagator(const SpinSystem& sys, double tau) {
    sys.validate();
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        raise(ErrorKind::Argument, "free_propagator: tau must be finite and nonnegative");
    }
    std::size_t n = sys.n_spins();
    std::size_t dim = std::size_t{1} << n;
    ComplexMatrix u(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        // 2pi nu I_z contributes pi*nu*sz, the double-counted pair sum
        // 2 * 2pi J I_z I_z contributes pi*J*sz*sz.
        double omega = 0.0;
        for (std::size_t spin = 0; spin < n; ++spin) {
            omega += kPi * sys.offsets_hz[spin] * spin_bit_sign(b, n, spin);
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t m = k + 1; m < n; ++m) {
                omega += kPi * sys.couplings_hz[k][m] * spin_bit_sign(b, n, k) *
                         spin_bit_sign(b, n, m);
            }
        }
        double phase = -omega * tau;
        u(b, b) = Complex(std::cos(phase), std::sin(phase));
    }
    return u;
}

ComplexMatrix rotation_propagator(const SpinSystem& sys, const PulseOp& op) {
    sys.validate();
    if (op.kind != PulseKind::Rotation) {
        raise(ErrorKind::Argument, "rotation_propagator: op is not a rotation");
    }
    if (op.target >= sys.n_spins()) {
        raise(ErrorKind::Argument,
              "rotation_propagator: spin " + std::to_string(op.target) + " out of range");
    }
    double half = 0.5 * op.angle;
    ComplexMatrix r(2);
    if (op.axis == Axis::Z) {
        r(0, 0) = Complex(std::cos(half), -std::sin(half));
        r(1, 1) = Complex(std::cos(half), std::sin(half));
    } else {
        double azimuth = op.phase + (op.axis == Axis::Y ? 0.5 * kPi : 0.0);
        // exp(-i theta (I_x cos az + I_y sin az))
        Complex ms(0.0, -std::sin(half));
        r(0, 0) = Complex(std::cos(half), 0.0);
        r(1, 1) = Complex(std::cos(half), 0.0);
        r(0, 1) = ms * Complex(std::cos(azimuth), -std::sin(azimuth));
        r(1, 0) = ms * Complex(std::cos(azimuth), std::sin(azimuth));
    }
    ComplexMatrix out = op.target == 0 ? r : ComplexMatrix::identity(2);
    for (std::size_t spin = 1; spin < sys.n_spins(); ++spin) {
        out = kron(out, spin == op.target ? r : ComplexMatrix::identity(2));
    }
    return out;
}

DensityMatrix gradient_dephase(const DensityMatrix& rho) {
    ComplexMatrix m(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        m(i, i) = rho.matrix()(i, i);
    }
    return DensityMatrix(m);
}

DensityMatrix run_program(const DensityMatrix& rho0, const SpinSystem& sys,
                          const PulseProgram& prog) {
    sys.validate();
    if (prog.ops.empty()) {
        raise(ErrorKind::Argument, "run_program: program is empty");
    }
    if (rho0.dim() != (std::size_t{1} << sys.n_spins())) {
        raise(ErrorKind::Dimension, "run_program: state dimension does not match spin system");
    }
    DensityMatrix state = rho0;
    for (const PulseOp& op : prog.ops) {
        if (op.kind == PulseKind::Gradient) {
            state = gradient_dephase(state);
            continue;
        }
        ComplexMatrix u = op.kind == PulseKind::Rotation ? rotation_propagator(sys, op)
                                                         : free_propagator(sys, op.duration);
        state = DensityMatrix(u * state.matrix() * u.adjoint());
    }
    return state;
}

ComplexMatrix program_propagator(const SpinSystem& sys, const PulseProgram& prog) {
    sys.validate();
    std::size_t dim = std::size_t{1} << sys.n_spins();
    ComplexMatrix total = ComplexMatrix::identity(dim);
    for (const PulseOp& op : prog.ops) {
        if (op.kind == PulseKind::Gradient) {
            raise(ErrorKind::Argument, "program_propagator: program contains a gradient channel");
        }
        ComplexMatrix u = op.kind == PulseKind::Rotation ? rotation_propagator(sys, op)
                                                         : free_propagator(sys, op.duration);
        total = u * total;
    }
    return total;
}

namespace {

// exp(-i theta_zz sigma_z^a sigma_z^b) from free evolution, with spin-echo
// pi pulses on every other spin so their offsets and couplings refocus,
// and z rotations undoing the offset phases a and b picked up. Splitting
// the evolution around the echo pulses leaves only the a-b coupling term.
// A negative theta_zz (or coupling) is realized by conjugating with a pi
// pulse on b, which flips the sign of the accumulated zz phase.
void append_zz_block(PulseProgram& prog, const SpinSystem& sys, std::size_t a, std::size_t b,
                     double theta_zz) {
    double j = sys.couplings_hz[a][b];
    if (j == 0.0) {
        raise(ErrorKind::Config, "pulse compilation: required coupling J(" + std::to_string(a) +
                                     "," + std::to_string(b) + ") is zero");
    }
    double tau = theta_zz / (kPi * j);
    bool flip = tau < 0.0;
    if (flip) {
        tau = -tau;
        prog.ops.push_back(PulseOp::rotation(b, Axis::X, kPi));
    }
    prog.ops.push_back(PulseOp::free_evolution(0.5 * tau));
    for (std::size_t spin = 0; spin < sys.n_spins(); ++spin) {
        if (spin != a && spin != b) {
            prog.ops.push_back(PulseOp::rotation(spin, Axis::X, kPi));
        }
    }
    prog.ops.push_back(PulseOp::free_evolution(0.5 * tau));
    for (std::size_t spin = 0; spin < sys.n_spins(); ++spin) {
        if (spin != a && spin != b) {
            prog.ops.push_back(PulseOp::rotation(spin, Axis::X, kPi));
        }
    }
    for (std::size_t spin : {a, b}) {
        double accumulated = 2.0 * kPi * sys.offsets_hz[spin] * tau;
        if (accumulated != 0.0) {
            prog.ops.push_back(PulseOp::rotation(spin, Axis::Z, -accumulated));
        }
    }
    if (flip) {
        prog.ops.push_back(PulseOp::rotation(b, Axis::X, kPi));
    }
}

}  // namespace

PulseProgram compile_collision(double eta, int which, const SpinSystem& sys) {
    sys.validate();
    if (!std::isfinite(eta)) {
        raise(ErrorKind::Argument, "compile_collision: eta must be finite");
    }
    if (which < 1 || static_cast<std::size_t>(which) >= sys.n_spins()) {
        raise(ErrorKind::Argument, "compile_collision: environment spin index out of range");
    }
    std::size_t env = static_cast<std::size_t>(which);

    // The conditional rotation factors as W (Rx on the system) W^dag with
    // W = exp(-i pi/8 sigma_z^sys) exp(+i pi/8 sigma_z^sys sigma_z^env):
    // on the env |1> branch W turns the system x axis into y, which is
    // exactly the conditional axis choice. The zz angle is fixed at pi/8
    // per block (two blocks, total free time 1/(4J)); eta rides on the rf
    // flip angle.
    PulseProgram prog;
    prog.label = "collision-" + std::to_string(which);
    prog.ops.push_back(PulseOp::rotation(0, Axis::Z, -0.25 * kPi));
    append_zz_block(prog, sys, 0, env, 0.125 * kPi);
    prog.ops.push_back(PulseOp::rotation(0, Axis::X, -2.0 * eta));
    append_zz_block(prog, sys, 0, env, -0.125 * kPi);
    prog.ops.push_back(PulseOp::rotation(0, Axis::Z, 0.25 * kPi));
    return prog;
}

namespace {

double env_zz_correlation(const DensityMatrix& global) {
    // <sigma_z sigma_z> on the two environment spins of a 3-spin state.
    double value = 0.0;
    for (std::size_t b = 0; b < 8; ++b) {
        int s1 = spin_bit_sign(b, 3, 1);
        int s2 = spin_bit_sign(b, 3, 2);
        value += s1 * s2 * global.matrix()(b, b).real();
    }
    return value;
}

// Ramsey-style correlator: put both environment spins transverse, let the
// 1-2 coupling wind them up for tau2 (system echoed out), rotate spin 1
// back partway, crush with the gradient. The surviving diagonal has zero
// single-spin bias and a zz correlation of sin(2 chi), chi = pi J12 tau2,
// so tau2 dials the correlation weight q through its full range.
PulseProgram prep_program_for_tau2(int system_bit, double tau2, const SpinSystem& sys) {
    PulseProgram prog;
    prog.label = "prepare";
    if (system_bit == 1) {
        prog.ops.push_back(PulseOp::rotation(0, Axis::X, kPi));
    }
    prog.ops.push_back(PulseOp::rotation(1, Axis::Y, 0.5 * kPi));
    prog.ops.push_back(PulseOp::rotation(2, Axis::Y, 0.5 * kPi));
    append_zz_block(prog, sys, 1, 2, kPi * sys.couplings_hz[1][2] * tau2);
    prog.ops.push_back(PulseOp::rotation(1, Axis::X, 0.5 * kPi));
    prog.ops.push_back(PulseOp::gradient());
    return prog;
}

void check_prepares_env(const PulseProgram& prog, double q, const SpinSystem& sys) {
    DensityMatrix out = run_program(pure_state({0, 0, 0}), sys, prog);
    DensityMatrix env = DensityMatrix(partial_trace(out.matrix(), 3, {1, 2}));
    DensityMatrix target = env_state(EnvSpec{q, EnvFlavor::Classical});
    if (ComplexMatrix::max_abs_diff(env.matrix(), target.matrix()) > 1e-9) {
        raise(ErrorKind::Contract,
              "prepare_state_program: solved tau2 misses the target correlation");
    }
}

}  // namespace

double solve_env_tau2(double q, const SpinSystem& sys) {
    sys.validate();
    if (sys.n_spins() != 3) {
        raise(ErrorKind::Config, "solve_env_tau2: preparation needs the 3-spin system");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        raise(ErrorKind::Argument, "solve_env_tau2: q must lie in [0, 1]");
    }
    double j12 = sys.couplings_hz[1][2];
    if (j12 == 0.0) {
        raise(ErrorKind::Config, "solve_env_tau2: environment coupling J(1,2) is zero");
    }

    DensityMatrix start = pure_state({0, 0, 0});
    auto correlation_at = [&](double tau2) {
        return env_zz_correlation(run_program(start, sys, prep_program_for_tau2(0, tau2, sys)));
    };

    // chi = pi J12 tau2 in [pi/4, 3pi/4]: sin(2 chi) sweeps monotonically
    // from +1 (q = 1) to -1 (q = 0), so the target is always bracketed.
    double lo = 1.0 / (4.0 * std::abs(j12));
    double hi = 3.0 / (4.0 * std::abs(j12));
    double target = 2.0 * q - 1.0;
    double f_lo = correlation_at(lo) - target;
    double f_hi = correlation_at(hi) - target;
    if (std::abs(f_lo) < 1e-13) {
        return lo;
    }
    if (std::abs(f_hi) < 1e-13) {
        return hi;
    }
    if (f_lo * f_hi > 0.0) {
        raise(ErrorKind::Contract, "solve_env_tau2: target correlation not bracketed");
    }
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double f_mid = correlation_at(mid) - target;
        if (std::abs(f_mid) < 1e-13 || 0.5 * (hi - lo) < 1e-16) {
            return mid;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

PulseProgram prepare_state_program(int system_bit, double q, const SpinSystem& sys) {
    if (system_bit != 0 && system_bit != 1) {
        raise(ErrorKind::Argument, "prepare_state_program: system bit must be 0 or 1");
    }
    double tau2 = solve_env_tau2(q, sys);
    PulseProgram prog = prep_program_for_tau2(system_bit, tau2, sys);
    PulseProgram check = system_bit == 0 ? prog : prep_program_for_tau2(0, tau2, sys);
    check_prepares_env(check, q, sys);
    return prog;
}

std::string serialize_program(const PulseProgram& prog) {
    std::string out;
    char buf[128];
    for (const PulseOp& op : prog.ops) {
        switch (op.kind) {
            case PulseKind::Rotation: {
                char axis = op.axis == Axis::X ? 'x' : op.axis == Axis::Y ? 'y' : 'z';
                std::snprintf(buf, sizeof buf, "ROT %zu %c %.17g %.17g\n", op.target, axis,
                              op.angle, op.phase);
                break;
            }
            case PulseKind::FreeEvolution:
                std::snprintf(buf, sizeof buf, "FREE %.17g\n", op.duration);
                break;
            case PulseKind::Gradient:
                std::snprintf(buf, sizeof buf, "GRAD\n");
                break;
        }
        out += buf;
    }
    return out;
}

PulseProgram parse_program(const std::string& text) {
    PulseProgram prog;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string word;
        if (!(tokens >> word) || word[0] == '#') {
            continue;
        }
        auto fail = [line_no](const std::string& why) {
            raise(ErrorKind::Argument,
                  "parse_program: line " + std::to_string(line_no) + ": " + why);
        };
        if (word == "ROT") {
            std::size_t spin;
            std::string axis_token;
            double angle, phase;
            if (!(tokens >> spin >> axis_token >> angle >> phase)) {
                fail("expected ROT <spin> <axis> <angle_rad> <phase_rad>");
            }
            bool negate = false;
            if (axis_token.size() == 2 && axis_token[0] == '-') {
                negate = true;
                axis_token = axis_token.substr(1);
            }
            Axis axis;
            if (axis_token == "x") {
                axis = Axis::X;
            } else if (axis_token == "y") {
                axis = Axis::Y;
            } else if (axis_token == "z") {
                axis = Axis::Z;
            } else {
                fail("unknown axis '" + axis_token + "'");
                axis = Axis::X;
            }
            prog.ops.push_back(PulseOp::rotation(spin, axis, negate ? -angle : angle, phase));
        } else if (word == "FREE") {
            double tau;
            if (!(tokens >> tau)) {
                fail("expected FREE <tau_s>");
            }
            prog.ops.push_back(PulseOp::free_evolution(tau));
        } else if (word == "GRAD") {
            prog.ops.push_back(PulseOp::gradient());
        } else {
            fail("unknown directive '" + word + "'");
        }
        std::string extra;
        if (tokens >> extra) {
            fail("trailing tokens");
        }
    }
    return prog;
}

}  // namespace qcoll
