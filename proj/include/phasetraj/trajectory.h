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

#ifndef PHASETRAJ_TRAJECTORY_H
#define PHASETRAJ_TRAJECTORY_H

#include <optional>
#include <variant>
#include <vector>

#include "phasetraj/channels.h"
#include "phasetraj/oracle.h"
#include "phasetraj/qmat.h"
#include "phasetraj/sampler.h"
#include "phasetraj/states.h"

namespace phasetraj {

struct TrajectoryPoint {
    double phi = 0.0;
    double w2 = 0.0;
    double w2p = 0.0;
    std::optional<double> w2_std;
    std::optional<double> w2p_std;
};

enum class Provenance { exact, sampled, ingested };

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    Provenance provenance = Provenance::exact;
    int shots = 0;
    int reps = 0;

    /// Throws InvalidArgument unless phi is strictly increasing.
    void check_ordered() const;
};

// Scenarios: what gets prepared at each phase angle.

struct NoiselessScenario {};

/// Uncorrelated channels of one kind at one circuit location, simulated
/// through the Kraus path.
struct ChannelScenario {
    ChannelKind kind = ChannelKind::amplitude_damping;
    Placement placement;
};

/// Combined relaxation/dephasing on both qubits after the CNOT.
struct T1T2Scenario {
    T1T2Params params;
};

/// rho'(a, r, theta = phi).
struct RhoPrimeScenario {
    double a = 0.5;
    double r = 0.5;
};

struct DissipativeScenario {
    DissipationParams params;
};

using Scenario = std::variant<NoiselessScenario, ChannelScenario, T1T2Scenario, RhoPrimeScenario, DissipativeScenario>;

/// Density matrix the scenario produces at preparation phase phi.
DensityMatrix evaluate(const Scenario &scenario, double phi);

/// Throws InvalidArgument when the scenario parameters cannot produce a state.
void validate(const Scenario &scenario);

struct ScheduleSegment {
    double phi_start = 0.0;
    double phi_end = 0.0;
    Scenario scenario;
};

/// Piecewise scenario over phi. Segments are contiguous and ordered; each
/// covers [phi_start, phi_end) except the last, which also includes phi_end.
struct NoiseSchedule {
    std::vector<ScheduleSegment> segments;

    /// Throws InvalidArgument on empty schedules, gaps, overlaps or
    /// reversed segments.
    void validate() const;
    const Scenario &at(double phi) const;
};

/// `count` evenly spaced angles from start; `end` included only when
/// `endpoint` is set.
std::vector<double> phi_grid(double start, double end, int count, bool endpoint = false);

/// Evaluates witnesses at every phi of `grid`. Exact plans record the
/// exact values; sampled plans record the repetition mean and standard
/// deviation, with point i drawing from stream i. Points are distributed
/// over `threads` workers (0 = hardware concurrency); results do not
/// depend on the thread count.
Trajectory sweep(const std::vector<double> &grid, const Scenario &scenario, const ShotPlan &plan, int threads = 1);

/// Schedule variant. Throws InvalidArgument when the schedule has gaps or
/// does not cover the grid.
Trajectory sweep(const std::vector<double> &grid, const NoiseSchedule &schedule, const ShotPlan &plan,
                 int threads = 1);

/// Amplitude damping after CNOT on both qubits with the common rate that
/// yields a circle of radius `radius` (0 <= radius <= 2 sqrt 2).
ChannelScenario circle_scenario(double radius);

/// A grid plus a schedule holding one scenario per full turn of phi:
/// scenario k covers [2 pi k, 2 pi (k + 1)).
struct SchedulePreset {
    std::vector<double> grid;
    NoiseSchedule schedule;
};

SchedulePreset turn_per_scenario(const std::vector<Scenario> &scenarios, int points_per_turn = 64);

/// Concentric circles, one turn per radius.
SchedulePreset concentric_circles(const std::vector<double> &radii, int points_per_turn = 64);

/// Circle of `radius` for one turn, then the pure rho' line (a = r = 1/2).
SchedulePreset circle_then_line(double radius, int points_per_turn = 64);
SchedulePreset line_then_circle(double radius, int points_per_turn = 64);

}  // namespace phasetraj

#endif
