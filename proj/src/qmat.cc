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

#include "phasetraj/qmat.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "phasetraj/error.h"

namespace phasetraj {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw InvalidArgument("matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require_dim(dim);
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> row_major) : dim_(dim) {
    require_dim(dim);
    if (row_major.size() != static_cast<size_t>(dim * dim)) {
        throw InvalidArgument("expected " + std::to_string(dim * dim) + " entries, got " +
                              std::to_string(row_major.size()));
    }
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.dim(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_dim(*this, other);
    double worst = 0.0;
    for (int i = 0; i < dim_ * dim_; i++) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    for (int i = 0; i < dim_ * dim_; i++) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (int i = 0; i < dim_ * dim_; i++) {
        data_[i] *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs);
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; r++) {
        for (int k = 0; k < n; k++) {
            const cplx a = lhs(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (int c = 0; c < n; c++) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw InvalidArgument("tensor expects two single-qubit (2x2) operators");
    }
    ComplexMatrix out(4);
    for (int ar = 0; ar < 2; ar++) {
        for (int ac = 0; ac < 2; ac++) {
            for (int br = 0; br < 2; br++) {
                for (int bc = 0; bc < 2; bc++) {
                    out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix &op, int target) {
    if (target == 0) {
        return tensor(op, ComplexMatrix::identity(2));
    }
    if (target == 1) {
        return tensor(ComplexMatrix::identity(2), op);
    }
    throw InvalidArgument("qubit index must be 0 or 1, got " + std::to_string(target));
}

ComplexMatrix projector(std::span<const cplx> psi) {
    ComplexMatrix out(static_cast<int>(psi.size()));
    for (int r = 0; r < out.dim(); r++) {
        for (int c = 0; c < out.dim(); c++) {
            out(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix &m) {
    if (m.dim() != 4) {
        throw InvalidArgument("hermitian_eigenvalues expects a 4x4 matrix");
    }
    Eigen::Matrix4cd h;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2), ev(3)};
}

DensityReport validate_density(const ComplexMatrix &rho, double tolerance) {
    if (rho.dim() != 4) {
        throw InvalidArgument("validate_density expects a 4x4 matrix");
    }
    DensityReport report;
    report.hermitian = rho.max_abs_diff(rho.adjoint()) <= tolerance;
    report.trace_dev = std::abs(rho.trace() - 1.0);
    report.min_eig = hermitian_eigenvalues(rho)[0];
    return report;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tolerance) : mat_(mat), tolerance_(tolerance) {
    if (mat_.dim() != 4) {
        throw NotAState("density matrix must be 4x4");
    }
    const DensityReport report = validate_density(mat_, tolerance_);
    if (!report.hermitian) {
        throw NotAState("density matrix is not Hermitian");
    }
    if (report.trace_dev > tolerance_) {
        throw NotAState("density matrix trace deviates from 1 by " + std::to_string(report.trace_dev));
    }
    if (report.min_eig < -tolerance_) {
        throw NotAState("density matrix has negative eigenvalue " + std::to_string(report.min_eig));
    }
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(ComplexMatrix::identity(4) * cplx{0.25});
}

bool is_complete(std::span<const ComplexMatrix> kraus, double tolerance) {
    if (kraus.empty()) {
        return false;
    }
    ComplexMatrix sum(kraus.front().dim());
    for (const ComplexMatrix &k : kraus) {
        if (k.dim() != sum.dim()) {
            return false;
        }
        sum += k.adjoint() * k;
    }
    return sum.max_abs_diff(ComplexMatrix::identity(sum.dim())) <= tolerance;
}

DensityMatrix apply_kraus(const DensityMatrix &rho, std::span<const ComplexMatrix> kraus, int target) {
    if (target != 0 && target != 1) {
        throw InvalidArgument("qubit index must be 0 or 1, got " + std::to_string(target));
    }
    for (const ComplexMatrix &k : kraus) {
        if (k.dim() != 2) {
            throw ChannelInvalid("Kraus operators must be single-qubit (2x2)");
        }
    }
    if (!is_complete(kraus)) {
        throw ChannelInvalid("Kraus set is not complete: sum K^dagger K != I");
    }
    ComplexMatrix out(4);
    for (const ComplexMatrix &k : kraus) {
        const ComplexMatrix lifted = embed(k, target);
        out += lifted * rho.mat() * lifted.adjoint();
    }
    return DensityMatrix(out, rho.tolerance());
}

DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u) {
    return DensityMatrix(u * rho.mat() * u.adjoint(), rho.tolerance());
}

}  // namespace phasetraj
