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

#include "phasetraj/states.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "phasetraj/error.h"

namespace phasetraj {

using namespace std::complex_literals;

ComplexMatrix gate(GateName name, double phi) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (name) {
        case GateName::H:
            return ComplexMatrix(2, {s, s, s, -s});
        case GateName::X:
            return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case GateName::Y:
            return ComplexMatrix(2, {0.0, -1.0i, 1.0i, 0.0});
        case GateName::Z:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
        case GateName::S:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0i});
        case GateName::Sdg:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0i});
        case GateName::U1:
            if (!std::isfinite(phi)) {
                throw InvalidArgument("U1 phase must be finite");
            }
            return ComplexMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, phi)});
        case GateName::CNOT:
            return ComplexMatrix(4, {1.0, 0.0, 0.0, 0.0,  //
                                     0.0, 1.0, 0.0, 0.0,  //
                                     0.0, 0.0, 0.0, 1.0,  //
                                     0.0, 0.0, 1.0, 0.0});
    }
    throw InvalidArgument("unknown gate");
}

ComplexMatrix gate(std::string_view name, double phi) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    if (key == "h") return gate(GateName::H);
    if (key == "x") return gate(GateName::X);
    if (key == "y") return gate(GateName::Y);
    if (key == "z") return gate(GateName::Z);
    if (key == "s") return gate(GateName::S);
    if (key == "sdg") return gate(GateName::Sdg);
    if (key == "u1") return gate(GateName::U1, phi);
    if (key == "cnot" || key == "cx") return gate(GateName::CNOT);
    throw InvalidArgument("unknown gate name '" + std::string(name) + "'");
}

TwoQubitPureState::TwoQubitPureState(std::array<cplx, 4> amplitudes) : amps_(amplitudes) {
    double norm = 0.0;
    for (const cplx &a : amps_) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kIdentityTolerance) {
        throw NotAState("pure state is not normalized: |psi|^2 = " + std::to_string(norm));
    }
}

TwoQubitPureState TwoQubitPureState::basis(int index) {
    if (index < 0 || index > 3) {
        throw InvalidArgument("basis index must be in [0, 3]");
    }
    std::array<cplx, 4> amps{};
    amps[index] = 1.0;
    return TwoQubitPureState(amps);
}

TwoQubitPureState TwoQubitPureState::apply(const ComplexMatrix &u) const {
    if (u.dim() != 4) {
        throw InvalidArgument("two-qubit state needs a 4x4 operator");
    }
    std::array<cplx, 4> out{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            out[r] += u(r, c) * amps_[c];
        }
    }
    return TwoQubitPureState(out);
}

DensityMatrix TwoQubitPureState::density() const {
    return DensityMatrix(projector(amps_));
}

TwoQubitPureState prepare_ghz_like(double phi) {
    return TwoQubitPureState::basis(0)
        .apply(embed(gate(GateName::H), 0))
        .apply(embed(gate(GateName::U1, phi), 0))
        .apply(gate(GateName::CNOT));
}

DensityMatrix ghz_density(double phi) {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<cplx, 4> psi{s, 0.0, 0.0, std::polar(s, phi)};
    return DensityMatrix(projector(psi));
}

TwoQubitPureState apply_u1_phase(const TwoQubitPureState &state, double phi) {
    return state.apply(embed(gate(GateName::U1, phi), 0));
}

DensityMatrix build_rho_prime(const RhoPrimeParams &p) {
    if (!(p.a >= 0.0 && p.a <= 1.0) || !(p.r >= 0.0) || !std::isfinite(p.theta)) {
        throw NotAState("rho' needs a in [0, 1], r >= 0 and finite theta");
    }
    // Allow rounding at the pure-state boundary r^2 = a(1 - a).
    if (p.r * p.r > p.a * (1.0 - p.a) + kIdentityTolerance) {
        throw NotAState("rho' coherence too large: r^2 = " + std::to_string(p.r * p.r) + " > a(1-a) = " +
                        std::to_string(p.a * (1.0 - p.a)));
    }
    ComplexMatrix m(4);
    m(1, 1) = p.a;
    m(2, 2) = 1.0 - p.a;
    m(1, 2) = std::polar(p.r, -p.theta);
    m(2, 1) = std::polar(p.r, p.theta);
    return DensityMatrix(m);
}

CascadePopulations cascade_populations(const DissipationParams &d) {
    const double g0 = d.gamma0_t;
    const double g1 = d.gamma1_t;
    if (!std::isfinite(g0) || !std::isfinite(g1) || g0 < 0.0 || g1 < 0.0) {
        throw InvalidArgument("dissipation parameters must be finite and non-negative");
    }
    CascadePopulations c;
    c.ghz = std::exp(-g1);
    if (g1 == g0) {
        c.rho_prime = g1 * std::exp(-g1);
    } else {
        // g1/(g1-g0) (e^{-g0} - e^{-g1}), written with expm1 so it stays
        // accurate as g0 -> g1.
        c.rho_prime = g1 * std::exp(-g0) * (-std::expm1(g0 - g1)) / (g1 - g0);
    }
    c.ground = 1.0 - c.ghz - c.rho_prime;
    if (c.ground < 0.0 && c.ground > -kIdentityTolerance) {
        c.ground = 0.0;
    }
    return c;
}

DensityMatrix dissipative_mixture(double phi, const DissipationParams &d) {
    const CascadePopulations c = cascade_populations(d);
    ComplexMatrix m = ghz_density(phi).mat() * cplx{c.ghz};
    m += build_rho_prime({0.5, 0.5, phi}).mat() * cplx{c.rho_prime};
    ComplexMatrix ground(4);
    ground(0, 0) = c.ground;
    m += ground;
    return DensityMatrix(m);
}

}  // namespace phasetraj
