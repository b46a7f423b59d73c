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

#include "qcoll/resolution.hpp"

#include <cmath>

#include "qcoll/error.hpp"
#include "qcoll/rng.hpp"

namespace qcoll {

double propagate_error(double delta_r) {
    if (delta_r < 0.0) {
        raise(ErrorKind::Argument, "propagate_error: delta_r must be nonnegative");
    }
    return delta_r / std::sqrt(2.0);
}

BlochVector perturb_bloch(const BlochVector& r, const NoiseSpec& spec) {
    if (spec.delta_r < 0.0) {
        raise(ErrorKind::Argument, "perturb_bloch: delta_r must be nonnegative");
    }
    if (spec.delta_r == 0.0) {
        return r;
    }
    SplitMix64 rng(spec.seed);
    std::array<double, 3> u = sample_unit_sphere(rng);
    BlochVector out{r.x + spec.delta_r * u[0], r.y + spec.delta_r * u[1],
                    r.z + spec.delta_r * u[2]};
    double norm = out.norm();
    if (norm > 1.0) {
        out.x /= norm;
        out.y /= norm;
        out.z /= norm;
    }
    return out;
}

Detectability classify(double delta_d_measured, double delta_r, ThresholdRule rule) {
    double floor =
        rule == ThresholdRule::SingleDistance ? propagate_error(delta_r) : delta_r;
    return delta_d_measured > floor ? Detectability::Conclusive : Detectability::Inconclusive;
}

TomographyResult simulate_tomography(const DensityMatrix& rho, const TomographyConfig& cfg) {
    if (cfg.shots < 1) {
        raise(ErrorKind::Argument, "simulate_tomography: shots must be at least 1");
    }
    BlochVector truth = bloch_from_density(rho);
    std::array<double, 3> components = {truth.x, truth.y, truth.z};

    TomographyResult result;
    std::array<double, 3> estimates = {0.0, 0.0, 0.0};
    for (std::size_t axis = 0; axis < 3; ++axis) {
        SplitMix64 rng = SplitMix64::derive(cfg.seed, axis);
        double p = 0.5 * (1.0 + components[axis]);
        uint64_t ups = 0;
        for (uint64_t shot = 0; shot < cfg.shots; ++shot) {
            if (rng.next_double() < p) {
                ++ups;
            }
        }
        double p_hat = static_cast<double>(ups) / static_cast<double>(cfg.shots);
        estimates[axis] = 2.0 * p_hat - 1.0;
        result.std_error[axis] =
            2.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(cfg.shots));
    }
    result.estimate = BlochVector{estimates[0], estimates[1], estimates[2]};
    return result;
}

}  // namespace qcoll
