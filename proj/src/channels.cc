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

#include "phasetraj/channels.h"

#include <cmath>
#include <string>

#include "phasetraj/error.h"
#include "phasetraj/states.h"

namespace phasetraj {

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::depolarizing:
            return "depolarizing";
        case ChannelKind::dephasing:
            return "dephasing";
        case ChannelKind::amplitude_damping:
            return "amplitude_damping";
        case ChannelKind::t1t2:
            return "t1t2";
    }
    return "?";
}

ChannelKind parse_channel_kind(std::string_view text) {
    for (ChannelKind k :
         {ChannelKind::depolarizing, ChannelKind::dephasing, ChannelKind::amplitude_damping, ChannelKind::t1t2}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw InvalidArgument("unknown channel kind '" + std::string(text) + "'");
}

std::string_view to_string(Location where) {
    switch (where) {
        case Location::before_cnot:
            return "before_cnot";
        case Location::after_cnot:
            return "after_cnot";
        case Location::after_phase:
            return "after_phase";
    }
    return "?";
}

Location parse_location(std::string_view text) {
    for (Location w : {Location::before_cnot, Location::after_cnot, Location::after_phase}) {
        if (text == to_string(w)) {
            return w;
        }
    }
    throw InvalidArgument("unknown placement '" + std::string(text) + "'");
}

NoiseChannel make_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("noise rate must be in [0, 1], got " + std::to_string(p));
    }
    NoiseChannel ch;
    ch.kind = kind;
    ch.p = p;
    switch (kind) {
        case ChannelKind::depolarizing: {
            const double w0 = std::sqrt(1.0 - 0.75 * p);
            const double w = std::sqrt(0.25 * p);
            ch.kraus = {ComplexMatrix::identity(2) * cplx{w0}, gate(GateName::X) * cplx{w},
                        gate(GateName::Y) * cplx{w}, gate(GateName::Z) * cplx{w}};
            break;
        }
        case ChannelKind::dephasing: {
            const double s = std::sqrt(p);
            ch.kraus = {ComplexMatrix::identity(2) * cplx{std::sqrt(1.0 - p)}, ComplexMatrix(2, {s, 0.0, 0.0, 0.0}),
                        ComplexMatrix(2, {0.0, 0.0, 0.0, s})};
            break;
        }
        case ChannelKind::amplitude_damping:
            ch.kraus = {ComplexMatrix(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - p)}),
                        ComplexMatrix(2, {0.0, std::sqrt(p), 0.0, 0.0})};
            break;
        case ChannelKind::t1t2:
            throw InvalidArgument("t1t2 channels are built from times, use make_t1t2_channel");
    }
    return ch;
}

NoiseChannel make_t1t2_channel(double t, double T1, double T2) {
    if (!(t >= 0.0) || !std::isfinite(t) || !(T1 > 0.0) || !(T2 > 0.0)) {
        throw InvalidArgument("t1t2 channel needs t >= 0, T1 > 0, T2 > 0");
    }
    const double population = std::exp(-t / T1);
    const double coherence = std::exp(-t / T2);
    const double damped_coherence = std::exp(-t / (2.0 * T1));
    if (coherence > damped_coherence * (1.0 + kIdentityTolerance)) {
        throw InvalidArgument("t1t2 channel is not CPTP: need e^{-t/T2} <= e^{-t/(2 T1)} (T2 <= 2 T1), got T1 = " +
                              std::to_string(T1) + ", T2 = " + std::to_string(T2));
    }
    // Amplitude damping with gamma = 1 - e^{-t/T1} leaves coherence
    // e^{-t/(2 T1)}; a dephasing stage removes the remaining factor.
    const double gamma = -std::expm1(-t / T1);
    const double keep = std::min(1.0, damped_coherence > 0.0 ? coherence / damped_coherence : 0.0);
    const double pd = 1.0 - keep;

    NoiseChannel ch;
    ch.kind = ChannelKind::t1t2;
    ch.p = gamma;
    ch.times = T1T2Times{t, T1, T2};
    const double a = std::sqrt(population);
    const double g = std::sqrt(gamma);
    const double k = std::sqrt(keep);
    const double d = std::sqrt(pd);
    // Products of {sqrt(keep) I, sqrt(pd)|0><0|, sqrt(pd)|1><1|} with {A0, A1}.
    ch.kraus = {ComplexMatrix(2, {k, 0.0, 0.0, k * a}), ComplexMatrix(2, {0.0, k * g, 0.0, 0.0}),
                ComplexMatrix(2, {d, 0.0, 0.0, 0.0}), ComplexMatrix(2, {0.0, d * g, 0.0, 0.0}),
                ComplexMatrix(2, {0.0, 0.0, 0.0, d * a})};
    return ch;
}

DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseChannel &channel, int target) {
    return apply_kraus(rho, channel.kraus, target);
}

DensityMatrix noisy_prepare(double phi, Location where, const NoiseChannel &eps_q0, const NoiseChannel &eps_q1) {
    auto noise = [&](const DensityMatrix &rho) {
        return apply_channel(apply_channel(rho, eps_q0, 0), eps_q1, 1);
    };
    DensityMatrix rho = TwoQubitPureState::basis(0).density();
    rho = apply_unitary(rho, embed(gate(GateName::H), 0));
    if (where == Location::before_cnot) {
        rho = noise(rho);
    }
    rho = apply_unitary(rho, gate(GateName::CNOT));
    if (where == Location::after_cnot) {
        rho = noise(rho);
    }
    rho = apply_unitary(rho, embed(gate(GateName::U1, phi), 0));
    if (where == Location::after_phase) {
        rho = noise(rho);
    }
    return rho;
}

DensityMatrix noisy_prepare(double phi, const Placement &placement, ChannelKind kind) {
    return noisy_prepare(phi, placement.where, make_channel(kind, placement.p1), make_channel(kind, placement.p2));
}

}  // namespace phasetraj
