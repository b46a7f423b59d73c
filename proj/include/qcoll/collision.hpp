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

#ifndef QCOLL_COLLISION_HPP
#define QCOLL_COLLISION_HPP

#include <vector>

#include "qcoll/states.hpp"

namespace qcoll {

/// One qubit colliding with a correlated two-qubit environment.
/// etas[k] is the interaction-strength-times-duration of collision k+1.
struct CollisionConfig {
    std::vector<double> etas;
    EnvSpec env;
};

/// The conditional collision unitary on (system, environment qubit):
///   exp(+i eta sigma_x) (x) |0><0|  +  exp(+i eta sigma_y) (x) |1><1|
/// System is the first tensor factor, the controlling environment qubit
/// the second.
ComplexMatrix conditional_unitary(double eta);

/// Sequential collisions per the global-unitary picture: the full
/// system (x) env1 (x) env2 state is built once, each collision unitary is
/// embedded on (system, env qubit k), and the global state is carried
/// forward between collisions so environment correlations act on the
/// system history. Returns the reduced system state at steps 0..n.
std::vector<DensityMatrix> evolve_sequence(const DensityMatrix& rho0, const CollisionConfig& cfg);

/// Single-collision reduced map:
///   rho -> (Rx rho Rx^dag + Ry rho Ry^dag)/2,  R_a = exp(+i eta sigma_a).
DensityMatrix map_lambda10(const DensityMatrix& rho, double eta);

/// Two-collision reduced map with correlation weight q on the same-axis
/// branches (xx, yy) and 1-q on the crossed branches (xy, yx).
DensityMatrix map_lambda20(const DensityMatrix& rho, double eta1, double eta2, double q);

}  // namespace qcoll

#endif
