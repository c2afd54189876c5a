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

#ifndef PHASETRAJ_CHANNELS_H
#define PHASETRAJ_CHANNELS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasetraj/qmat.h"

namespace phasetraj {

enum class ChannelKind { depolarizing, dephasing, amplitude_damping, t1t2 };

std::string_view to_string(ChannelKind kind);
ChannelKind parse_channel_kind(std::string_view text);

/// Gate time and relaxation/dephasing times of one qubit, same time unit.
struct T1T2Times {
    double t = 0.0;
    double t1 = 1.0;
    double t2 = 1.0;
};

struct NoiseChannel {
    ChannelKind kind = ChannelKind::depolarizing;
    /// Noise rate p. For t1t2 this is the amplitude-damping part 1 - e^{-t/T1}.
    double p = 0.0;
    std::optional<T1T2Times> times;
    std::vector<ComplexMatrix> kraus;
};

/// Kraus set of a single-qubit channel with rate p in [0, 1]:
///  - depolarizing: {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z},
///    i.e. rho -> (1-p) rho + p I/2;
///  - dephasing: E0 = sqrt(1-p) I, E1 = sqrt(p)|0><0|, E2 = sqrt(p)|1><1|;
///  - amplitude_damping: A0 = diag(1, sqrt(1-p)), A1 = sqrt(p)|0><1|.
NoiseChannel make_channel(ChannelKind kind, double p);

/// Combined relaxation/dephasing map on one qubit:
///   rho_11 -> rho_11 e^{-t/T1},  rho_01 -> rho_01 e^{-t/T2}.
/// Requires e^{-t/T2} <= e^{-t/(2 T1)}, i.e. T2 <= 2 T1 whenever t > 0.
NoiseChannel make_t1t2_channel(double t, double T1, double T2);

/// Applies `channel` to one qubit of `rho`.
DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseChannel &channel, int target);

/// Where the noise channels sit in the preparation circuit
/// H(q0) -> CNOT(q0 -> q1) -> U1(phi)(q0).
enum class Location { before_cnot, after_cnot, after_phase };

std::string_view to_string(Location where);
Location parse_location(std::string_view text);

struct Placement {
    Location where = Location::after_cnot;
    double p1 = 0.0;  // rate of the channel on q0
    double p2 = 0.0;  // rate of the channel on q1
};

/// Runs the preparation circuit with `eps_q0` on qubit 0 and `eps_q1` on
/// qubit 1, both inserted at `where`.
DensityMatrix noisy_prepare(double phi, Location where, const NoiseChannel &eps_q0, const NoiseChannel &eps_q1);

/// Same circuit with two channels of the same kind at rates placement.p1
/// and placement.p2.
DensityMatrix noisy_prepare(double phi, const Placement &placement, ChannelKind kind);

}  // namespace phasetraj

#endif
