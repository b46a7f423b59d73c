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

#ifndef QCOLL_STATES_HPP
#define QCOLL_STATES_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "qcoll/linalg.hpp"

namespace qcoll {

/// Validated quantum state. Construction checks hermiticity (1e-10),
/// unit trace (1e-10) and positive semidefiniteness (smallest eigenvalue
/// >= -1e-10, slack for roundoff accumulated in 8x8 products).
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix matrix);

    const ComplexMatrix& matrix() const noexcept {
        return matrix_;
    }
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }

  private:
    ComplexMatrix matrix_;
    std::size_t num_qubits_;
};

/// Bloch representation of a qubit state, rho = (I + r.sigma)/2.
/// Plain value type; physicality (|r| <= 1) is enforced where a vector is
/// converted back into a state, so measurement *estimates* that fall
/// slightly outside the ball can still be carried around.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

enum class EnvFlavor { Classical, Entangled };

/// Two-qubit environment specification: correlation weight q and whether
/// the correlations are carried by a diagonal mixture or by the
/// corresponding superposition ket.
struct EnvSpec {
    double q = 0.0;
    EnvFlavor flavor = EnvFlavor::Classical;
};

/// Projector onto a computational basis ket, one entry of {0,1} per qubit.
/// bits[0] is the leftmost tensor factor.
DensityMatrix pure_state(const std::vector<int>& bits);

/// The correlated two-qubit environment:
///   classical:  diag(q/2, (1-q)/2, (1-q)/2, q/2)
///   entangled:  projector onto sqrt(q/2)(|00> + |11>) + sqrt((1-q)/2)(|01> + |10>)
DensityMatrix env_state(const EnvSpec& spec);

/// r_i = Tr(sigma_i rho); single-qubit states only.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// (I + r.sigma)/2; rejects |r| > 1 (beyond tolerance).
DensityMatrix density_from_bloch(const BlochVector& r);

}  // namespace qcoll

#endif
