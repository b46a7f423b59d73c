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

#ifndef QCOLL_WITNESS_HPP
#define QCOLL_WITNESS_HPP

#include <utility>
#include <vector>

#include "qcoll/states.hpp"

namespace qcoll {

/// Paired evolution record for the distinguishability witness: the two
/// system states and their trace distance at each recorded step.
struct Trajectory {
    std::vector<int> times;
    std::vector<std::pair<DensityMatrix, DensityMatrix>> pairs;
    std::vector<double> distances;

    /// D(2) - D(1), the witnessed change over the second collision.
    double delta_d() const;
};

/// Assemble a Trajectory from two equally long state sequences
/// (step index 0, 1, 2, ...).
Trajectory make_trajectory(const std::vector<DensityMatrix>& first,
                           const std::vector<DensityMatrix>& second);

/// D(a, b) = (1/2) Tr|a - b| via the eigenvalues of the Hermitian difference.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Qubit shortcut: D = |r1 - r2| / 2.
double bloch_trace_distance(const BlochVector& r1, const BlochVector& r2);

/// Distance of the orthogonal-pair evolution after the first collision:
///   D1(eta) = sqrt(3 + cos(4 eta)) / 2.
double closed_form_d1(double eta);

/// Distance after the second collision with correlation q (the long
/// three-term radical; see the implementation for the grouping).
double closed_form_d2(double eta, double q);

/// Leading small-eta behaviour of D2 - D1: (1 - 4q) eta^2.
double small_eta_delta_d(double eta, double q);

/// Never "Markovian": an increase in trace distance is sufficient for
/// memory, its absence proves nothing.
enum class BlpVerdict { NonMarkovian, NoEvidence };

/// NonMarkovian iff any strictly positive increase between consecutive
/// recorded distances. Requires at least two steps after step 0.
BlpVerdict blp_verdict(const Trajectory& traj);

}  // namespace qcoll

#endif
