// Copyright 2026 The phasetraj Authors
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

#ifndef PHASETRAJ_QMAT_H
#define PHASETRAJ_QMAT_H

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace phasetraj {

using cplx = std::complex<double>;

inline constexpr double kStateTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-12;

/// Dense row-major complex matrix of dimension 2 (one qubit) or 4 (two qubits).
///
/// Two-qubit basis order is |00>, |01>, |10>, |11> with the left symbol
/// belonging to qubit 0, so tensor(A, B) acts with A on qubit 0.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<cplx> row_major);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const cplx> diag);

    int dim() const { return dim_; }
    std::span<const cplx> entries() const { return {data_.data(), static_cast<size_t>(dim_ * dim_)}; }

    cplx &operator()(int row, int col) { return data_[row * dim_ + col]; }
    const cplx &operator()(int row, int col) const { return data_[row * dim_ + col]; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    /// Largest |a_ij - b_ij|; throws on dimension mismatch.
    double max_abs_diff(const ComplexMatrix &other) const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cplx scale);
    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, cplx scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    int dim_;
    std::array<cplx, 16> data_{};
};

/// Kronecker product a (x) b of two single-qubit operators.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Lifts a single-qubit operator onto `target` of the two-qubit register.
ComplexMatrix embed(const ComplexMatrix &op, int target);

/// Outer product |psi><psi| of a 2- or 4-component vector.
ComplexMatrix projector(std::span<const cplx> psi);

struct DensityReport {
    bool hermitian = false;
    double trace_dev = 0.0;
    double min_eig = 0.0;

    bool valid(double tolerance = kStateTolerance) const {
        return hermitian && trace_dev <= tolerance && min_eig >= -tolerance;
    }
};

/// Checks the three density-matrix invariants without modifying `rho`.
DensityReport validate_density(const ComplexMatrix &rho, double tolerance = kStateTolerance);

/// Eigenvalues of the Hermitian part of a 4x4 matrix, ascending.
std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix &m);

/// A validated two-qubit density matrix. Construction throws NotAState when
/// any of Hermiticity, unit trace or positivity fails at `tolerance`.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix mat, double tolerance = kStateTolerance);

    const ComplexMatrix &mat() const { return mat_; }
    double tolerance() const { return tolerance_; }
    cplx operator()(int row, int col) const { return mat_(row, col); }

    static DensityMatrix maximally_mixed();

   private:
    ComplexMatrix mat_;
    double tolerance_;
};

/// Whether sum_i K_i^dagger K_i = I within `tolerance`.
bool is_complete(std::span<const ComplexMatrix> kraus, double tolerance = kIdentityTolerance);

/// rho -> sum_i (K_i on target) rho (K_i on target)^dagger for single-qubit
/// Kraus operators. Throws ChannelInvalid for an incomplete set.
DensityMatrix apply_kraus(const DensityMatrix &rho, std::span<const ComplexMatrix> kraus, int target);

/// U rho U^dagger for a 4x4 unitary.
DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u);

}  // namespace phasetraj

#endif
