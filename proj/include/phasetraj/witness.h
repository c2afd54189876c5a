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

#ifndef PHASETRAJ_WITNESS_H
#define PHASETRAJ_WITNESS_H

#include <numbers>

#include "phasetraj/qmat.h"

namespace phasetraj {

/// Local-realism bound on |<M2>|.
inline constexpr double kLocalRealismBound = 2.0;
/// Quantum maximum of |<M2>|, also the noiseless trajectory radius.
inline constexpr double kQuantumBound = 2.0 * std::numbers::sqrt2;

enum class Pauli { I, X, Y, Z };

ComplexMatrix pauli_matrix(Pauli p);
char pauli_symbol(Pauli p);

/// Tr(rho (P0 (x) P1)). Throws InternalConsistency if the trace has an
/// imaginary part above 1e-9.
double pauli_expectation(const DensityMatrix &rho, Pauli q0, Pauli q1);

struct WitnessValue {
    double w2 = 0.0;   // <XX> + 2<YX> - <YY>
    double w2p = 0.0;  // -<XX> + 2<YX> + <YY>
    double m2 = 0.0;   // <XX> + <XY> + <YX> - <YY>
    double m2p = 0.0;  // -<XX> + <XY> + <YX> + <YY>
    double radius = 0.0;
};

WitnessValue witness_values(const DensityMatrix &rho);

/// Closed-form witnesses of the GHZ-like state:
/// m2 = w2 = 2 sqrt2 cos(phi - pi/4), m2p = w2p = 2 sqrt2 sin(phi - pi/4).
WitnessValue analytic_ghz_witness(double phi);

}  // namespace phasetraj

#endif
