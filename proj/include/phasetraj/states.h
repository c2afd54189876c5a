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

#ifndef PHASETRAJ_STATES_H
#define PHASETRAJ_STATES_H

#include <array>
#include <string_view>

#include "phasetraj/qmat.h"

namespace phasetraj {

enum class GateName { H, X, Y, Z, S, Sdg, U1, CNOT };

/// Standard gate matrices. U1(phi) = diag(1, e^{i phi}); CNOT is 4x4 with
/// qubit 0 as control. `phi` is only read for U1.
ComplexMatrix gate(GateName name, double phi = 0.0);

/// Looks a gate up by its conventional name ("H", "sdg", "u1", "cx", ...).
/// Throws InvalidArgument for anything else.
ComplexMatrix gate(std::string_view name, double phi = 0.0);

/// A|00> + B|01> + C|10> + D|11>, normalized.
class TwoQubitPureState {
   public:
    explicit TwoQubitPureState(std::array<cplx, 4> amplitudes);

    static TwoQubitPureState basis(int index);

    const std::array<cplx, 4> &amplitudes() const { return amps_; }
    cplx operator[](int i) const { return amps_[i]; }

    /// Applies a 4x4 unitary; the result is re-checked for normalization.
    TwoQubitPureState apply(const ComplexMatrix &u) const;
    DensityMatrix density() const;

   private:
    std::array<cplx, 4> amps_;
};

/// Runs H(q0), U1(phi)(q0), CNOT(q0 -> q1) on |00>, giving
/// (|00> + e^{i phi}|11>)/sqrt(2).
TwoQubitPureState prepare_ghz_like(double phi);

/// |GHZ(phi)><GHZ(phi)| in closed form.
DensityMatrix ghz_density(double phi);

/// U1(phi) on qubit 0: (A, B, C, D) -> (A, B, C e^{i phi}, D e^{i phi}).
TwoQubitPureState apply_u1_phase(const TwoQubitPureState &state, double phi);

/// Excited state supported on span{|01>, |10>}: population `a` on |01>,
/// coherence r e^{-i theta} in the <01|rho|10> slot.
struct RhoPrimeParams {
    double a = 0.5;
    double r = 0.0;
    double theta = 0.0;
};

/// Throws NotAState when r^2 > a(1 - a) or a is outside [0, 1].
DensityMatrix build_rho_prime(const RhoPrimeParams &p);

/// Dimensionless rate-times-time products of the |11> -> rho' -> |00> cascade.
struct DissipationParams {
    double gamma0_t = 0.0;
    double gamma1_t = 0.0;
};

struct CascadePopulations {
    double ghz = 1.0;        // c1
    double rho_prime = 0.0;  // c2
    double ground = 0.0;     // c3
};

/// Two-step sequential decay populations. The degenerate gamma0 == gamma1
/// case uses the analytic limit gamma1 t e^{-gamma1 t}.
CascadePopulations cascade_populations(const DissipationParams &d);

/// c1 |GHZ(phi)><GHZ(phi)| + c2 rho'(1/2, 1/2, phi) + c3 |00><00|.
DensityMatrix dissipative_mixture(double phi, const DissipationParams &d);

}  // namespace phasetraj

#endif
