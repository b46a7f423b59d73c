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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "qcoll/error.hpp"
#include "qcoll/resolution.hpp"
#include "qcoll/rng.hpp"
#include "qcoll/witness.hpp"

using namespace qcoll;

TEST_CASE("propagate_error divides by sqrt(2)") {
    CHECK(propagate_error(0.0) == 0.0);
    CHECK(propagate_error(5e-4) == doctest::Approx(3.5355339059327376e-4).epsilon(1e-15));
    CHECK(propagate_error(1.0) == doctest::Approx(0.70710678118654752).epsilon(1e-15));
    CHECK_THROWS_AS(propagate_error(-1.0), Error);
}

TEST_CASE("perturb_bloch with zero noise is the identity") {
    BlochVector r{0.2, -0.3, 0.4};
    BlochVector out = perturb_bloch(r, NoiseSpec{0.0, 42});
    CHECK(out.x == r.x);
    CHECK(out.y == r.y);
    CHECK(out.z == r.z);
}

TEST_CASE("perturb_bloch is bitwise reproducible for a fixed seed") {
    BlochVector r{0.1, 0.2, -0.3};
    NoiseSpec spec{5e-4, 42};
    BlochVector a = perturb_bloch(r, spec);
    BlochVector b = perturb_bloch(r, spec);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
    CHECK(a.x != r.x);  // the kick is real
}

TEST_CASE("perturb_bloch displacement has magnitude delta_r and no bias") {
    BlochVector base{0.1, -0.2, 0.3};
    double delta_r = 5e-4;
    int n = 100000;
    double sum_mag = 0.0, sx = 0.0, sy = 0.0, sz = 0.0;
    for (int i = 0; i < n; ++i) {
        NoiseSpec spec{delta_r, SplitMix64::mix(97 ^ SplitMix64::mix(i))};
        BlochVector p = perturb_bloch(base, spec);
        double dx = p.x - base.x, dy = p.y - base.y, dz = p.z - base.z;
        sum_mag += std::sqrt(dx * dx + dy * dy + dz * dz);
        sx += dx;
        sy += dy;
        sz += dz;
    }
    CHECK(std::abs(sum_mag / n - delta_r) <= 0.01 * delta_r);
    // Per-axis mean of n isotropic kicks: sigma = delta_r / sqrt(3n).
    double three_sigma = 3.0 * delta_r / std::sqrt(3.0 * n);
    CHECK(std::abs(sx / n) <= three_sigma);
    CHECK(std::abs(sy / n) <= three_sigma);
    CHECK(std::abs(sz / n) <= three_sigma);
}

TEST_CASE("perturb_bloch rescales kicks that leave the ball") {
    BlochVector pole{0.0, 0.0, 1.0};
    for (uint64_t seed = 0; seed < 200; ++seed) {
        BlochVector out = perturb_bloch(pole, NoiseSpec{0.5, seed});
        CHECK(out.norm() <= 1.0 + 1e-12);
    }
}

TEST_CASE("classify compares against the propagated floor") {
    CHECK(classify(0.01, 5e-4) == Detectability::Conclusive);
    CHECK(classify(1e-4, 5e-4) == Detectability::Inconclusive);
    CHECK(classify(1e-9, 0.0) == Detectability::Conclusive);
    CHECK(classify(0.0, 0.0) == Detectability::Inconclusive);
}

TEST_CASE("classify under the difference rule uses the full delta_r") {
    // 4e-4 clears delta_r/sqrt(2) = 3.54e-4 but not delta_r itself.
    CHECK(classify(4e-4, 5e-4, ThresholdRule::SingleDistance) == Detectability::Conclusive);
    CHECK(classify(4e-4, 5e-4, ThresholdRule::DistanceDifference) ==
          Detectability::Inconclusive);
}

TEST_CASE("classify is monotone in the noise level") {
    SplitMix64 rng(51);
    for (int i = 0; i < 500; ++i) {
        double dd = 2e-3 * rng.next_double() - 1e-3;
        double lo = 1e-3 * rng.next_double();
        double hi = lo + 1e-3 * rng.next_double();
        if (classify(dd, lo) == Detectability::Inconclusive) {
            CHECK(classify(dd, hi) == Detectability::Inconclusive);
        }
    }
}

TEST_CASE("classifier flips between 0.018 and 0.019 at delta_r = 5e-4") {
    double dd_18 = closed_form_d2(0.018, 0.0) - closed_form_d1(0.018);
    double dd_19 = closed_form_d2(0.019, 0.0) - closed_form_d1(0.019);
    CHECK(classify(dd_18, 5e-4) == Detectability::Inconclusive);
    CHECK(classify(dd_19, 5e-4) == Detectability::Conclusive);
}

TEST_CASE("simulate_tomography concentrates on a pole state") {
    TomographyResult res = simulate_tomography(pure_state({0}), TomographyConfig{100000, 7});
    // p = 1 on the z axis: every shot agrees, zero reported error.
    CHECK(res.estimate.z == 1.0);
    CHECK(res.std_error[2] == 0.0);
    CHECK(std::abs(res.estimate.x) <= 3.0 * res.std_error[0]);
    CHECK(std::abs(res.estimate.y) <= 3.0 * res.std_error[1]);
}

TEST_CASE("simulate_tomography is reproducible for a fixed seed") {
    DensityMatrix rho = density_from_bloch(BlochVector{0.3, 0.1, -0.4});
    TomographyConfig cfg{5000, 99};
    TomographyResult a = simulate_tomography(rho, cfg);
    TomographyResult b = simulate_tomography(rho, cfg);
    CHECK(a.estimate.x == b.estimate.x);
    CHECK(a.estimate.y == b.estimate.y);
    CHECK(a.estimate.z == b.estimate.z);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("simulate_tomography rejects zero shots") {
    CHECK_THROWS_AS(simulate_tomography(pure_state({0}), TomographyConfig{0, 1}), Error);
}

TEST_CASE("tomography scatter shrinks like one over sqrt(N)") {
    DensityMatrix probe = density_from_bloch(BlochVector{0.3, 0.4, 0.5});
    std::vector<double> log_n, log_sd;
    const int reps = 40;
    for (uint64_t n : {100ull, 1000ull, 10000ull}) {
        std::vector<double> zs;
        for (int r = 0; r < reps; ++r) {
            TomographyConfig cfg{n, SplitMix64::mix(555 ^ SplitMix64::mix(n) ^
                                                    SplitMix64::mix(9000 + r))};
            zs.push_back(simulate_tomography(probe, cfg).estimate.z);
        }
        double mean = 0.0;
        for (double z : zs) {
            mean += z;
        }
        mean /= reps;
        double var = 0.0;
        for (double z : zs) {
            var += (z - mean) * (z - mean);
        }
        log_n.push_back(std::log(static_cast<double>(n)));
        log_sd.push_back(0.5 * std::log(var / (reps - 1)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = static_cast<int>(log_n.size());
    for (int i = 0; i < m; ++i) {
        sx += log_n[i];
        sy += log_sd[i];
        sxx += log_n[i] * log_n[i];
        sxy += log_n[i] * log_sd[i];
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-0.5).epsilon(0.2));
}

TEST_CASE("reported standard error tracks the binomial formula") {
    DensityMatrix mixed(ComplexMatrix::identity(2) * Complex(0.5, 0.0));
    TomographyResult res = simulate_tomography(mixed, TomographyConfig{1000000, 3});
    // p ~ 1/2: the reported error must sit near 2 * 0.5 / sqrt(N) = 1e-3.
    for (double se : res.std_error) {
        CHECK(se == doctest::Approx(1e-3).epsilon(0.01));
    }
}
