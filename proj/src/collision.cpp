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

#include "qcoll/collision.hpp"

#include <cmath>
#include <string>

#include "qcoll/error.hpp"

namespace qcoll {

namespace {

ComplexMatrix basis_projector(int bit) {
    ComplexMatrix p(2);
    p(bit, bit) = 1.0;
    return p;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
    return u * m * u.adjoint();
}

}  // namespace

ComplexMatrix conditional_unitary(double eta) {
    ComplexMatrix rx = pauli_rotation(Axis::X, eta);
    ComplexMatrix ry = pauli_rotation(Axis::Y, eta);
    return kron(rx, basis_projector(0)) + kron(ry, basis_projector(1));
}

std::vector<DensityMatrix> evolve_sequence(const DensityMatrix& rho0, const CollisionConfig& cfg) {
    if (rho0.num_qubits() != 1) {
        raise(ErrorKind::Dimension, "evolve_sequence: system must be a single qubit");
    }
    if (cfg.etas.empty()) {
        raise(ErrorKind::Argument, "evolve_sequence: need at least one collision");
    }
    DensityMatrix env = env_state(cfg.env);
    std::size_t num_env = env.num_qubits();
    if (cfg.etas.size() > num_env) {
        raise(ErrorKind::Argument, "evolve_sequence: more collisions than environment qubits");
    }
    for (double eta : cfg.etas) {
        if (!std::isfinite(eta)) {
            raise(ErrorKind::Argument, "evolve_sequence: eta must be finite");
        }
    }

    std::size_t num_qubits = 1 + num_env;
    ComplexMatrix global = kron(rho0.matrix(), env.matrix());

    std::vector<DensityMatrix> reduced;
    reduced.reserve(cfg.etas.size() + 1);
    reduced.push_back(rho0);
    for (std::size_t k = 0; k < cfg.etas.size(); ++k) {
        ComplexMatrix u = embed_two_qubit(conditional_unitary(cfg.etas[k]), num_qubits, 0, k + 1);
        global = conjugate(u, global);
        reduced.emplace_back(partial_trace(global, num_qubits, {0}));
    }
    return reduced;
}

DensityMatrix map_lambda10(const DensityMatrix& rho, double eta) {
    if (rho.num_qubits() != 1) {
        raise(ErrorKind::Dimension, "map_lambda10: state must be a single qubit");
    }
    ComplexMatrix rx = pauli_rotation(Axis::X, eta);
    ComplexMatrix ry = pauli_rotation(Axis::Y, eta);
    ComplexMatrix out =
        (conjugate(rx, rho.matrix()) + conjugate(ry, rho.matrix())) * Complex(0.5, 0.0);
    return DensityMatrix(out);
}

DensityMatrix map_lambda20(const DensityMatrix& rho, double eta1, double eta2, double q) {
    if (rho.num_qubits() != 1) {
        raise(ErrorKind::Dimension, "map_lambda20: state must be a single qubit");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        raise(ErrorKind::Argument, "map_lambda20: q must lie in [0, 1], got " + std::to_string(q));
    }
    ComplexMatrix rx1 = pauli_rotation(Axis::X, eta1);
    ComplexMatrix ry1 = pauli_rotation(Axis::Y, eta1);
    ComplexMatrix rx2 = pauli_rotation(Axis::X, eta2);
    ComplexMatrix ry2 = pauli_rotation(Axis::Y, eta2);

    ComplexMatrix same = conjugate(rx2 * rx1, rho.matrix()) + conjugate(ry2 * ry1, rho.matrix());
    ComplexMatrix crossed = conjugate(ry2 * rx1, rho.matrix()) + conjugate(rx2 * ry1, rho.matrix());
    ComplexMatrix out = same * Complex(q / 2.0, 0.0) + crossed * Complex((1.0 - q) / 2.0, 0.0);
    return DensityMatrix(out);
}

}  // namespace qcoll
