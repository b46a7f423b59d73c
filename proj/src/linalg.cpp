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

#include "qcoll/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcoll/error.hpp"

namespace qcoll {

namespace {

bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        raise(ErrorKind::Dimension, std::string(op) + ": dimension mismatch " +
                                        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
    if (dim < 1 || dim > kMaxDim || !is_power_of_two(dim)) {
        raise(ErrorKind::Dimension,
              "ComplexMatrix: dim must be a power of two in [1, 8], got " + std::to_string(dim));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    return ComplexMatrix(dim);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    check_same_dim(*this, other, "add");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] + other.entries_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    check_same_dim(*this, other, "sub");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] - other.entries_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    check_same_dim(*this, other, "mul");
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            Complex aik = (*this)(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = entries_[i] * scalar;
    }
    return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    ComplexMatrix product = adjoint() * (*this);
    return max_abs_diff(product, identity(dim_)) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim_; ++i) {
        for (std::size_t j = 0; j < a.dim_; ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& e : entries_) {
        sum += std::norm(e);
    }
    return std::sqrt(sum);
}

ComplexMatrix sigma_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    std::size_t dim = a.dim() * b.dim();
    if (dim > ComplexMatrix::kMaxDim) {
        raise(ErrorKind::Dimension, "kron: result dimension " + std::to_string(dim) +
                                        " exceeds maximum " +
                                        std::to_string(ComplexMatrix::kMaxDim));
    }
    ComplexMatrix out(dim);
    for (std::size_t ia = 0; ia < a.dim(); ++ia) {
        for (std::size_t ja = 0; ja < a.dim(); ++ja) {
            Complex av = a(ia, ja);
            if (av == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t ib = 0; ib < b.dim(); ++ib) {
                for (std::size_t jb = 0; jb < b.dim(); ++jb) {
                    out(ia * b.dim() + ib, ja * b.dim() + jb) = av * b(ib, jb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix pauli_rotation(Axis axis, double eta) {
    if (!std::isfinite(eta)) {
        raise(ErrorKind::Argument, "pauli_rotation: eta must be finite");
    }
    ComplexMatrix sigma = axis == Axis::X ? sigma_x() : axis == Axis::Y ? sigma_y() : sigma_z();
    ComplexMatrix out = ComplexMatrix::identity(2) * Complex(std::cos(eta), 0.0);
    return out + sigma * Complex(0.0, std::sin(eta));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t num_qubits,
                            const std::vector<std::size_t>& keep) {
    if (m.dim() != (std::size_t{1} << num_qubits)) {
        raise(ErrorKind::Dimension, "partial_trace: matrix dim does not match qubit count");
    }
    if (keep.empty()) {
        raise(ErrorKind::Argument, "partial_trace: keep set must be nonempty");
    }
    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        raise(ErrorKind::Argument, "partial_trace: duplicate qubit index in keep set");
    }
    for (std::size_t q : kept) {
        if (q >= num_qubits) {
            raise(ErrorKind::Argument,
                  "partial_trace: qubit index " + std::to_string(q) + " out of range");
        }
    }
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    // Qubit q contributes the bit of weight 2^(num_qubits-1-q) to a row
    // index (qubit 0 is the most significant bit).
    auto scatter = [num_qubits](const std::vector<std::size_t>& qubits, std::size_t bits) {
        std::size_t index = 0;
        for (std::size_t pos = 0; pos < qubits.size(); ++pos) {
            std::size_t bit = (bits >> (qubits.size() - 1 - pos)) & 1u;
            index |= bit << (num_qubits - 1 - qubits[pos]);
        }
        return index;
    };

    std::size_t keep_dim = std::size_t{1} << kept.size();
    std::size_t trace_dim = std::size_t{1} << traced.size();
    ComplexMatrix out(keep_dim);
    for (std::size_t i = 0; i < keep_dim; ++i) {
        for (std::size_t j = 0; j < keep_dim; ++j) {
            Complex sum(0.0, 0.0);
            for (std::size_t t = 0; t < trace_dim; ++t) {
                std::size_t row = scatter(kept, i) | scatter(traced, t);
                std::size_t col = scatter(kept, j) | scatter(traced, t);
                sum += m(row, col);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix embed_two_qubit(const ComplexMatrix& u, std::size_t num_qubits, std::size_t qubit_a,
                              std::size_t qubit_b) {
    if (u.dim() != 4) {
        raise(ErrorKind::Dimension, "embed_two_qubit: operator must be 4x4");
    }
    if (qubit_a >= num_qubits || qubit_b >= num_qubits || qubit_a == qubit_b) {
        raise(ErrorKind::Argument, "embed_two_qubit: invalid qubit pair");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t shift_a = num_qubits - 1 - qubit_a;
    std::size_t shift_b = num_qubits - 1 - qubit_b;
    std::size_t mask = (std::size_t{1} << shift_a) | (std::size_t{1} << shift_b);

    ComplexMatrix out(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t ra = (row >> shift_a) & 1u;
        std::size_t rb = (row >> shift_b) & 1u;
        std::size_t rest = row & ~mask;
        for (std::size_t ca = 0; ca < 2; ++ca) {
            for (std::size_t cb = 0; cb < 2; ++cb) {
                Complex v = u(ra * 2 + rb, ca * 2 + cb);
                if (v == Complex(0.0, 0.0)) {
                    continue;
                }
                std::size_t col = rest | (ca << shift_a) | (cb << shift_b);
                out(row, col) = v;
            }
        }
    }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (i != j) {
                sum += std::norm(m(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is the product
// of a phase alignment (making a(p,q) real) and a real Givens rotation;
// it is applied two-sided to `a` and accumulated on the right of `v`.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    Complex apq = a(p, q);
    double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    Complex phase = apq / mag;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double tau = (aqq - app) / (2.0 * mag);
    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    // Column p of the rotation is (c, -s*conj(phase)); column q is (s*phase, c),
    // restricted to rows p and q.
    Complex rpp(c, 0.0);
    Complex rpq = phase * s;
    Complex rqp = -std::conj(phase) * s;
    Complex rqq(c, 0.0);

    std::size_t n = a.dim();
    // a <- R^dagger a R
    for (std::size_t k = 0; k < n; ++k) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * rpp + akq * rqp;
        a(k, q) = akp * rpq + akq * rqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
        a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * rpp + vkq * rqp;
        v(k, q) = vkp * rpq + vkq * rqq;
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-10)) {
        raise(ErrorKind::Contract, "hermitian_eigensystem: input is not Hermitian within 1e-10");
    }
    std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize exactly so roundoff in the input can't bias the iteration.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex avg = (a(i, j) + std::conj(a(j, i))) * 0.5;
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kConvergence = 1e-14;
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kConvergence) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t lhs, std::size_t rhs) { return a(lhs, lhs).real() > a(rhs, rhs).real(); });

    Eigensystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) {
            out.vectors(row, col) = v(row, order[col]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

}  // namespace qcoll
