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

#ifndef QCOLL_RESOLUTION_HPP
#define QCOLL_RESOLUTION_HPP

#include <array>
#include <cstdint>

#include "qcoll/states.hpp"

namespace qcoll {

/// Direction-independent Bloch-vector uncertainty of the measurement
/// apparatus, plus the seed of the deterministic stream that realizes it.
struct NoiseSpec {
    double delta_r = 0.0;
    uint64_t seed = 0;
};

/// Finite-shot readout: N two-outcome measurements per Pauli axis.
struct TomographyConfig {
    uint64_t shots = 1;
    uint64_t seed = 0;
};

/// delta_D = delta_r / sqrt(2).
double propagate_error(double delta_r);

/// r + delta_r * u with u uniform on the unit sphere; the result is pulled
/// back onto the Bloch ball by radial rescaling if the kick leaves it.
BlochVector perturb_bloch(const BlochVector& r, const NoiseSpec& spec);

enum class Detectability { Conclusive, Inconclusive };

/// Which noise floor a measured delta-D must clear. SingleDistance uses
/// delta_r/sqrt(2), the uncertainty of one distance value; DistanceDifference
/// uses delta_r, the quadrature error of a difference of two distances.
enum class ThresholdRule { SingleDistance, DistanceDifference };

Detectability classify(double delta_d_measured, double delta_r,
                       ThresholdRule rule = ThresholdRule::SingleDistance);

struct TomographyResult {
    /// Raw per-axis estimates 2*p_hat - 1; may land slightly outside the
    /// Bloch ball, which is the honest output of finite statistics.
    BlochVector estimate;
    /// Per-axis standard error 2*sqrt(p_hat(1-p_hat)/N).
    std::array<double, 3> std_error = {0.0, 0.0, 0.0};
};

/// Simulate full single-qubit state tomography: for each Pauli axis draw
/// `shots` Bernoulli outcomes with p = (1 + <sigma_i>)/2 from the seeded
/// stream and report the estimated Bloch component and its standard error.
TomographyResult simulate_tomography(const DensityMatrix& rho, const TomographyConfig& cfg);

}  // namespace qcoll

#endif
