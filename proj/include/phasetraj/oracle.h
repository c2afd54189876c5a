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

#ifndef PHASETRAJ_ORACLE_H
#define PHASETRAJ_ORACLE_H

#include "phasetraj/channels.h"
#include "phasetraj/qmat.h"

namespace phasetraj {

// Closed-form noisy GHZ-like states, transcribed entry by entry. These are
// kept independent of the Kraus simulation so each can check the other.

struct OracleQuery {
    ChannelKind kind = ChannelKind::depolarizing;
    Location where = Location::after_cnot;
    double p1 = 0.0;
    double p2 = 0.0;
    double phi = 0.0;
};

/// Noisy density matrix for one of the three uncorrelated channel kinds.
/// after_cnot and after_phase share one closed form.
DensityMatrix oracle_density(const OracleQuery &q);

/// Trajectory radius sqrt(<W2>^2 + <W2'>^2) from the closed forms. It is
/// phi-independent except for depolarizing noise before the CNOT, where the
/// trajectory is an ellipse.
double oracle_radius(const OracleQuery &q);

/// Semi-axes of the depolarizing-before-CNOT ellipse: 4 sqrt2 (q + r) along
/// (1, 1)/sqrt2 and 4 sqrt2 q along (1, -1)/sqrt2, where q is the
/// |00><11| magnitude and r the |01><10| magnitude.
struct EllipseAxes {
    double semi_major_along_diag = 0.0;
    double semi_minor_anti_diag = 0.0;
};

EllipseAxes oracle_ellipse_axes(double p1, double p2);

/// T1 = t / ln(2 sqrt2 / R) for the amplitude-damping radius law.
/// Returns +infinity for the noiseless radius R = 2 sqrt2. Throws
/// InvalidArgument for R <= 0, R > 2 sqrt2 (1 + 1e-9) or t <= 0.
double infer_t1(double radius, double t);

struct T1T2Params {
    double t = 0.0;
    double t1_q0 = 1.0;
    double t2_q0 = 1.0;
    double t1_q1 = 1.0;
    double t2_q1 = 1.0;
};

/// |GHZ(phi)> after the combined relaxation/dephasing channel on both qubits.
DensityMatrix t1t2_evolved_ghz(double phi, const T1T2Params &params);

/// Radius of the t1t2 trajectory: 4 sqrt2 * (1/2) e^{-t/T2_q0 - t/T2_q1}.
double t1t2_radius(const T1T2Params &params);

}  // namespace phasetraj

#endif
