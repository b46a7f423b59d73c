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

#include "qcoll/witness.hpp"

#include <cmath>
#include <string>

#include "qcoll/error.hpp"

namespace qcoll {

double Trajectory::delta_d() const {
    if (distances.size() < 3) {
        raise(ErrorKind::Argument, "Trajectory::delta_d: need steps 0, 1 and 2");
    }
    return distances[2] - distances[1];
}

Trajectory make_trajectory(const std::vector<DensityMatrix>& first,
                           const std::vector<DensityMatrix>& second) {
    if (first.size() != second.size() || first.empty()) {
        raise(ErrorKind::Argument, "make_trajectory: sequences must be nonempty and equally long");
    }
    Trajectory traj;
    for (std::size_t step = 0; step < first.size(); ++step) {
        traj.times.push_back(static_cast<int>(step));
        traj.distances.push_back(trace_distance(first[step], second[step]));
        traj.pairs.emplace_back(first[step], second[step]);
    }
    return traj;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) {
        raise(ErrorKind::Dimension, "trace_distance: states must share a dimension");
    }
    ComplexMatrix diff = a.matrix() - b.matrix();
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(diff)) {
        sum += std::abs(lambda);
    }
    return 0.5 * sum;
}

double bloch_trace_distance(const BlochVector& r1, const BlochVector& r2) {
    BlochVector d{r1.x - r2.x, r1.y - r2.y, r1.z - r2.z};
    return 0.5 * d.norm();
}

double closed_form_d1(double eta) {
    return 0.5 * std::sqrt(3.0 + std::cos(4.0 * eta));
}

double closed_form_d2(double eta, double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        raise(ErrorKind::Argument,
              "closed_form_d2: q must lie in [0, 1], got " + std::to_string(q));
    }
    double c = std::cos(eta);
    double s = std::sin(eta);
    double term_xy = std::pow(c * s * (c * c - q * s * s), 2) * 16.0;
    double term_z = std::pow((q + 1.0) * std::cos(4.0 * eta) - q + 1.0, 2);
    double term_mixed = 4.0 * s * s * c * c * std::pow((q + 1.0) * std::cos(2.0 * eta) - q + 1.0, 2);
    return 0.5 * std::sqrt(term_xy + term_z + term_mixed);
}

double small_eta_delta_d(double eta, double q) {
    return (1.0 - 4.0 * q) * eta * eta;
}

BlpVerdict blp_verdict(const Trajectory& traj) {
    if (traj.distances.size() < 3) {
        raise(ErrorKind::Argument, "blp_verdict: need at least two steps after step 0");
    }
    for (std::size_t j = 0; j + 1 < traj.distances.size(); ++j) {
        if (traj.distances[j + 1] > traj.distances[j]) {
            return BlpVerdict::NonMarkovian;
        }
    }
    return BlpVerdict::NoEvidence;
}

}  // namespace qcoll
