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

#ifndef QCOLL_LINALG_HPP
#define QCOLL_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qcoll {

using Complex = std::complex<double>;

enum class Axis { X, Y, Z };

/// Dense square complex matrix, row-major. The universal carrier for
/// operators and states in this library. Dimensions are tiny (2, 4, 8:
/// tensor products of up to three qubits), so everything is plain
/// O(dim^3) arithmetic with no external dependency.
///
/// Index convention used throughout the project: qubit 0 is the leftmost
/// tensor factor, i.e. the most significant bit of the row index.
class ComplexMatrix {
  public:
    static constexpr std::size_t kMaxDim = 8;

    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim);

    std::size_t dim() const noexcept {
        return dim_;
    }

    Complex& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Complex scalar) const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

    /// Largest entrywise |a - b|; matrices must share dim.
    static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
    double frobenius_norm() const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Tensor product. Result dimension a.dim * b.dim must not exceed kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(+i eta sigma_axis) = cos(eta) I + i sin(eta) sigma_axis.
/// Note the plus sign in the exponent.
ComplexMatrix pauli_rotation(Axis axis, double eta);

/// Trace out every qubit not listed in `keep`. `m` must be 2^num_qubits
/// dimensional; kept qubits appear in the result in ascending index order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t num_qubits,
                            const std::vector<std::size_t>& keep);

/// Place a two-qubit operator on (qubit_a, qubit_b) of an n-qubit register,
/// identity elsewhere. qubit_a corresponds to the first tensor factor of
/// `u` and qubit_b to the second; the qubits need not be adjacent.
ComplexMatrix embed_two_qubit(const ComplexMatrix& u, std::size_t num_qubits, std::size_t qubit_a,
                              std::size_t qubit_b);

struct Eigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns, matching values
};

/// Eigenvalues of a Hermitian matrix, descending. Input hermiticity is
/// asserted to 1e-10. Cyclic Jacobi with complex rotations; convergence
/// when the off-diagonal Frobenius norm drops below 1e-14.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace qcoll

#endif
