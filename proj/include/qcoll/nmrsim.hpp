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

#ifndef QCOLL_NMRSIM_HPP
#define QCOLL_NMRSIM_HPP

#include <string>
#include <vector>

#include "qcoll/states.hpp"

namespace qcoll {

/// Rotating-frame spin system under the Ising (weak-coupling) truncation:
/// offsets are (omega_0n - omega_r)/2pi per spin, couplings the symmetric
/// J matrix, all in Hz. The drift Hamiltonian is diagonal in the
/// computational basis:
///   H/hbar = sum_n 2pi nu_n I_z^n + sum_{k != m} 2pi J_km I_z^k I_z^m
/// (the pair sum runs over ordered pairs, so each coupling enters twice).
struct SpinSystem {
    std::vector<double> offsets_hz;
    std::vector<std::vector<double>> couplings_hz;

    std::size_t n_spins() const {
        return offsets_hz.size();
    }
    void validate() const;
};

/// Three fluorine-like spins: system = spin 0, environment = spins 1, 2.
/// J(0,1) and J(0,2) are fixed by the quarter-period collision times
/// 1/(4 J) = 3.58 ms and 5.25 ms; the remaining values are stand-ins and
/// overridable through any custom SpinSystem.
SpinSystem default_spin_system();

enum class PulseKind { Rotation, FreeEvolution, Gradient };

/// One pulse-program step. Rotations are ideal instantaneous hard pulses
///   exp(-i theta (I_x cos phi + I_y sin phi))      axis x (phi measured from x)
///   exp(-i theta (I_x cos(phi+pi/2) + ...))        axis y
///   exp(-i theta I_z)                              axis z (composite convenience)
/// on spin `target`. Free evolution runs the drift Hamiltonian for
/// `duration` seconds. Gradient kills every coherence (z-basis
/// off-diagonal) of the state it is applied to.
struct PulseOp {
    PulseKind kind = PulseKind::Rotation;
    std::size_t target = 0;   // rotation only
    Axis axis = Axis::X;      // rotation only
    double angle = 0.0;       // rotation only, radians (integrated flip angle)
    double phase = 0.0;       // rotation only, radians
    double duration = 0.0;    // free evolution only, seconds

    static PulseOp rotation(std::size_t target, Axis axis, double angle, double phase = 0.0);
    static PulseOp free_evolution(double duration);
    static PulseOp gradient();

    bool operator==(const PulseOp& other) const;
};

struct PulseProgram {
    std::vector<PulseOp> ops;
    std::string label;

    double total_free_time() const;
};

/// exp(-i H tau / hbar): diagonal, computed by exponentiating the diagonal
/// drift Hamiltonian entrywise.
ComplexMatrix free_propagator(const SpinSystem& sys, double tau);

/// The embedded single-spin rotation for a PulseKind::Rotation op.
ComplexMatrix rotation_propagator(const SpinSystem& sys, const PulseOp& op);

/// z-gradient crusher: zero all off-diagonal entries, diagonal untouched.
DensityMatrix gradient_dephase(const DensityMatrix& rho);

/// Left-fold of propagators and channels over the program's ops.
DensityMatrix run_program(const DensityMatrix& rho0, const SpinSystem& sys,
                          const PulseProgram& prog);

/// Net unitary of a gradient-free program (error if a gradient appears).
ComplexMatrix program_propagator(const SpinSystem& sys, const PulseProgram& prog);

/// Pulse sequence realizing the collision unitary on (system, env spin
/// `which`) while the idle spin is echoed out. Uses only rotations and
/// free evolutions under the given couplings; total free time 1/(4 J).
/// The net propagator equals the embedded conditional unitary up to a
/// global phase.
PulseProgram compile_collision(double eta, int which, const SpinSystem& sys);

/// Free-evolution time that makes the gradient-based preparation below
/// hit the target environment correlation q (solved by bisection on the
/// simulated program).
double solve_env_tau2(double q, const SpinSystem& sys);

/// Rotations + tau2 free evolution + gradient crusher: applied to
/// |000><000| this prepares (|b><b|) (x) env_state(q) with b = system_bit,
/// the post-gradient diagonal matching the target to better than 1e-9.
PulseProgram prepare_state_program(int system_bit, double q, const SpinSystem& sys);

/// Line-oriented wire format:
///   ROT <spin> <axis> <angle_rad> <phase_rad>
///   FREE <tau_s>
///   GRAD
/// Blank lines and lines starting with '#' are ignored on parse.
std::string serialize_program(const PulseProgram& prog);
PulseProgram parse_program(const std::string& text);

}  // namespace qcoll

#endif
