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

#include "phasetraj/witness.h"

#include <cmath>
#include <initializer_list>
#include <string>

#include "phasetraj/error.h"
#include "phasetraj/states.h"

namespace phasetraj {

ComplexMatrix pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return ComplexMatrix::identity(2);
        case Pauli::X:
            return gate(GateName::X);
        case Pauli::Y:
            return gate(GateName::Y);
        case Pauli::Z:
            return gate(GateName::Z);
    }
    throw InvalidArgument("unknown Pauli");
}

char pauli_symbol(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

double pauli_expectation(const DensityMatrix &rho, Pauli q0, Pauli q1) {
    const ComplexMatrix op = tensor(pauli_matrix(q0), pauli_matrix(q1));
    // Tr(rho O) = sum_ij rho_ij O_ji
    cplx value = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            value += rho(i, j) * op(j, i);
        }
    }
    if (std::abs(value.imag()) > 1e-9) {
        throw InternalConsistency(std::string("expectation of ") + pauli_symbol(q0) + pauli_symbol(q1) +
                                  " has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

namespace {

struct Term {
    double weight;
    Pauli q0;
    Pauli q1;
};

/// Tr(rho sum_k w_k P_k). The summed operator has small-integer entries, so
/// cancellations between Pauli strings are exact before rho is touched.
double polynomial_expectation(const DensityMatrix &rho, std::initializer_list<Term> terms) {
    ComplexMatrix op(4);
    for (const Term &t : terms) {
        op += tensor(pauli_matrix(t.q0), pauli_matrix(t.q1)) * cplx(t.weight);
    }
    cplx value = 0.0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            value += rho(i, j) * op(j, i);
        }
    }
    if (std::abs(value.imag()) > 1e-9) {
        throw InternalConsistency("witness expectation has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

}  // namespace

WitnessValue witness_values(const DensityMatrix &rho) {
    using enum Pauli;
    WitnessValue w;
    w.m2 = polynomial_expectation(rho, {{1, X, X}, {1, X, Y}, {1, Y, X}, {-1, Y, Y}});
    w.m2p = polynomial_expectation(rho, {{-1, X, X}, {1, X, Y}, {1, Y, X}, {1, Y, Y}});
    w.w2 = polynomial_expectation(rho, {{1, X, X}, {2, Y, X}, {-1, Y, Y}});
    w.w2p = polynomial_expectation(rho, {{-1, X, X}, {2, Y, X}, {1, Y, Y}});
    w.radius = std::hypot(w.w2, w.w2p);
    return w;
}

WitnessValue analytic_ghz_witness(double phi) {
    WitnessValue w;
    w.m2 = w.w2 = kQuantumBound * std::cos(phi - std::numbers::pi / 4);
    w.m2p = w.w2p = kQuantumBound * std::sin(phi - std::numbers::pi / 4);
    w.radius = kQuantumBound;
    return w;
}

}  // namespace phasetraj
