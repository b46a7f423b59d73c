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

#include "qcoll/states.hpp"

#include <cmath>
#include <string>

#include "qcoll/error.hpp"

namespace qcoll {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = -1e-10;

std::size_t qubits_for_dim(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : matrix_(std::move(matrix)), num_qubits_(qubits_for_dim(matrix_.dim())) {
    if (matrix_.dim() < 2) {
        raise(ErrorKind::Dimension, "DensityMatrix: dimension must be at least 2");
    }
    if (!matrix_.is_hermitian(kHermitianTol)) {
        raise(ErrorKind::Contract, "DensityMatrix: matrix is not Hermitian within 1e-10");
    }
    Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        raise(ErrorKind::Contract,
              "DensityMatrix: trace deviates from 1 by more than 1e-10 (got " +
                  std::to_string(tr.real()) + ")");
    }
    std::vector<double> eigs = hermitian_eigenvalues(matrix_);
    if (eigs.back() < kPsdTol) {
        raise(ErrorKind::Contract, "DensityMatrix: smallest eigenvalue " +
                                       std::to_string(eigs.back()) + " is negative");
    }
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

DensityMatrix pure_state(const std::vector<int>& bits) {
    if (bits.empty() || bits.size() > 3) {
        raise(ErrorKind::Argument, "pure_state: need 1 to 3 qubit labels");
    }
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            raise(ErrorKind::Argument, "pure_state: ket labels must be 0 or 1");
        }
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    ComplexMatrix m(std::size_t{1} << bits.size());
    m(index, index) = 1.0;
    return DensityMatrix(m);
}

DensityMatrix env_state(const EnvSpec& spec) {
    if (!(spec.q >= 0.0 && spec.q <= 1.0)) {
        raise(ErrorKind::Argument,
              "env_state: q must lie in [0, 1], got " + std::to_string(spec.q));
    }
    ComplexMatrix m(4);
    if (spec.flavor == EnvFlavor::Classical) {
        m(0, 0) = spec.q / 2.0;
        m(1, 1) = (1.0 - spec.q) / 2.0;
        m(2, 2) = (1.0 - spec.q) / 2.0;
        m(3, 3) = spec.q / 2.0;
    } else {
        double a = std::sqrt(spec.q / 2.0);        // |00>, |11>
        double b = std::sqrt((1.0 - spec.q) / 2.0);  // |01>, |10>
        std::array<double, 4> ket = {a, b, b, a};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) = ket[i] * ket[j];
            }
        }
    }
    return DensityMatrix(m);
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    if (rho.num_qubits() != 1) {
        raise(ErrorKind::Argument, "bloch_from_density: state must be a single qubit");
    }
    const ComplexMatrix& m = rho.matrix();
    BlochVector r;
    r.x = (m(0, 1) + m(1, 0)).real();
    r.y = (Complex(0.0, 1.0) * (m(0, 1) - m(1, 0))).real();
    r.z = (m(0, 0) - m(1, 1)).real();
    return r;
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    if (r.norm() > 1.0 + 1e-9) {
        raise(ErrorKind::Argument,
              "density_from_bloch: Bloch vector norm " + std::to_string(r.norm()) +
                  " exceeds 1 (not a physical state)");
    }
    // Clamp roundoff-level excursions so the PSD check cannot trip.
    double scale = r.norm() > 1.0 ? 1.0 / r.norm() : 1.0;
    ComplexMatrix m(2);
    m(0, 0) = Complex(0.5 * (1.0 + scale * r.z), 0.0);
    m(1, 1) = Complex(0.5 * (1.0 - scale * r.z), 0.0);
    m(0, 1) = Complex(0.5 * scale * r.x, -0.5 * scale * r.y);
    m(1, 0) = Complex(0.5 * scale * r.x, 0.5 * scale * r.y);
    return DensityMatrix(m);
}

}  // namespace qcoll
