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

// Shared test-side oracles. These stay independent of the library code
// paths they are used to check: the matrix exponential is a plain Taylor
// series, random states come straight from the Bloch ball.

#ifndef QCOLL_TEST_UTIL_HPP
#define QCOLL_TEST_UTIL_HPP

#include <cmath>
#include <complex>

#include "qcoll/linalg.hpp"
#include "qcoll/rng.hpp"
#include "qcoll/states.hpp"

namespace qcoll_test {

/// exp(m) by scaling and squaring over a plain Taylor series.
inline qcoll::ComplexMatrix expm_taylor(const qcoll::ComplexMatrix& m) {
    using qcoll::ComplexMatrix;
    int squarings = 0;
    double norm = m.frobenius_norm();
    while (norm > 0.25 && squarings < 40) {
        norm *= 0.5;
        ++squarings;
    }
    ComplexMatrix scaled = m * qcoll::Complex(std::ldexp(1.0, -squarings), 0.0);
    ComplexMatrix sum = ComplexMatrix::identity(m.dim());
    ComplexMatrix term = ComplexMatrix::identity(m.dim());
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled * qcoll::Complex(1.0 / k, 0.0);
        sum = sum + term;
    }
    for (int s = 0; s < squarings; ++s) {
        sum = sum * sum;
    }
    return sum;
}

/// Uniformly random point in the closed Bloch ball.
inline qcoll::BlochVector random_bloch_in_ball(qcoll::SplitMix64& rng) {
    std::array<double, 3> dir = qcoll::sample_unit_sphere(rng);
    double radius = std::cbrt(rng.next_double());
    return qcoll::BlochVector{radius * dir[0], radius * dir[1], radius * dir[2]};
}

inline qcoll::DensityMatrix random_qubit_state(qcoll::SplitMix64& rng) {
    return qcoll::density_from_bloch(random_bloch_in_ball(rng));
}

/// Random matrix with entries uniform in the complex unit square.
inline qcoll::ComplexMatrix random_matrix(qcoll::SplitMix64& rng, std::size_t dim) {
    qcoll::ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = qcoll::Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        }
    }
    return m;
}

inline qcoll::ComplexMatrix random_hermitian(qcoll::SplitMix64& rng, std::size_t dim) {
    qcoll::ComplexMatrix m = random_matrix(rng, dim);
    return (m + m.adjoint()) * qcoll::Complex(0.5, 0.0);
}

/// Frobenius distance after aligning the global phase of b to a.
inline double phase_aligned_distance(const qcoll::ComplexMatrix& a, const qcoll::ComplexMatrix& b) {
    qcoll::Complex overlap = (b.adjoint() * a).trace();
    double mag = std::abs(overlap);
    qcoll::Complex phase = mag > 0.0 ? overlap / mag : qcoll::Complex(1.0, 0.0);
    return (a - b * phase).frobenius_norm();
}

}  // namespace qcoll_test

#endif
