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

#include "phasetraj/trajectory.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "phasetraj/error.h"
#include "phasetraj/witness.h"

namespace phasetraj {

namespace {

constexpr double kScheduleGapTolerance = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class ScenarioAt>
Trajectory run_sweep(const std::vector<double> &grid, ScenarioAt scenario_at, const ShotPlan &plan, int threads) {
    validate(plan);
    Trajectory traj;
    traj.provenance = plan.exact ? Provenance::exact : Provenance::sampled;
    traj.shots = plan.exact ? 0 : plan.shots;
    traj.reps = plan.exact ? 0 : plan.repetitions;
    traj.points.resize(grid.size());
    for (size_t i = 0; i < grid.size(); i++) {
        traj.points[i].phi = grid[i];
    }
    traj.check_ordered();

    auto work = [&](size_t i) {
        const double phi = grid[i];
        const DensityMatrix rho = evaluate(scenario_at(phi), phi);
        TrajectoryPoint &pt = traj.points[i];
        const WitnessEstimate est = estimate_witness(rho, plan, i);
        pt.w2 = est.w2_mean;
        pt.w2p = est.w2p_mean;
        if (!plan.exact) {
            pt.w2_std = est.w2_std;
            pt.w2p_std = est.w2p_std;
        }
    };

    const size_t n = grid.size();
    size_t workers = threads > 0 ? static_cast<size_t>(threads) : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<size_t>(n, 1));
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) {
            work(i);
        }
        return traj;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (size_t i = w; i < n; i += workers) {
                        work(i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const std::exception_ptr &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return traj;
}

}  // namespace

void Trajectory::check_ordered() const {
    for (size_t i = 1; i < points.size(); i++) {
        if (!(points[i].phi > points[i - 1].phi)) {
            throw InvalidArgument("trajectory phi must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
}

DensityMatrix evaluate(const Scenario &scenario, double phi) {
    return std::visit(
        overloaded{
            [&](const NoiselessScenario &) { return ghz_density(phi); },
            [&](const ChannelScenario &s) { return noisy_prepare(phi, s.placement, s.kind); },
            [&](const T1T2Scenario &s) {
                const T1T2Params &p = s.params;
                return noisy_prepare(phi, Location::after_cnot, make_t1t2_channel(p.t, p.t1_q0, p.t2_q0),
                                     make_t1t2_channel(p.t, p.t1_q1, p.t2_q1));
            },
            [&](const RhoPrimeScenario &s) { return build_rho_prime({s.a, s.r, phi}); },
            [&](const DissipativeScenario &s) { return dissipative_mixture(phi, s.params); },
        },
        scenario);
}

void validate(const Scenario &scenario) {
    try {
        (void)evaluate(scenario, 0.0);
    } catch (const InvalidArgument &) {
        throw;
    } catch (const std::exception &e) {
        throw InvalidArgument(e.what());
    }
}

void NoiseSchedule::validate() const {
    if (segments.empty()) {
        throw InvalidArgument("schedule has no segments");
    }
    for (size_t i = 0; i < segments.size(); i++) {
        const ScheduleSegment &s = segments[i];
        if (!(s.phi_end > s.phi_start)) {
            throw InvalidArgument("schedule segment " + std::to_string(i) + " has phi_end <= phi_start");
        }
        if (i > 0) {
            const double gap = s.phi_start - segments[i - 1].phi_end;
            if (gap > kScheduleGapTolerance) {
                throw InvalidArgument("schedule gap between segments " + std::to_string(i - 1) + " and " +
                                      std::to_string(i));
            }
            if (gap < -kScheduleGapTolerance) {
                throw InvalidArgument("schedule segments " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                      " overlap");
            }
        }
        phasetraj::validate(s.scenario);
    }
}

const Scenario &NoiseSchedule::at(double phi) const {
    for (size_t i = 0; i < segments.size(); i++) {
        const ScheduleSegment &s = segments[i];
        const bool last = i + 1 == segments.size();
        if (phi >= s.phi_start - kScheduleGapTolerance &&
            (phi < s.phi_end || (last && phi <= s.phi_end + kScheduleGapTolerance))) {
            return s.scenario;
        }
    }
    throw InvalidArgument("phi = " + std::to_string(phi) + " is not covered by the schedule");
}

std::vector<double> phi_grid(double start, double end, int count, bool endpoint) {
    if (count < 1) {
        throw InvalidArgument("phi grid needs at least one point");
    }
    if (!std::isfinite(start) || !std::isfinite(end) || (count > 1 && !(end > start))) {
        throw InvalidArgument("phi grid needs finite start < end");
    }
    std::vector<double> grid(count);
    const int divisions = endpoint ? std::max(count - 1, 1) : count;
    const double step = (end - start) / divisions;
    for (int i = 0; i < count; i++) {
        grid[i] = start + step * i;
    }
    if (endpoint && count > 1) {
        grid.back() = end;
    }
    return grid;
}

Trajectory sweep(const std::vector<double> &grid, const Scenario &scenario, const ShotPlan &plan, int threads) {
    validate(scenario);
    return run_sweep(grid, [&](double) -> const Scenario & { return scenario; }, plan, threads);
}

Trajectory sweep(const std::vector<double> &grid, const NoiseSchedule &schedule, const ShotPlan &plan,
                 int threads) {
    schedule.validate();
    for (double phi : grid) {
        (void)schedule.at(phi);
    }
    return run_sweep(grid, [&](double phi) -> const Scenario & { return schedule.at(phi); }, plan, threads);
}

ChannelScenario circle_scenario(double radius) {
    if (!(radius >= 0.0 && radius <= kQuantumBound)) {
        throw InvalidArgument("circle radius must lie in [0, 2 sqrt 2], got " + std::to_string(radius));
    }
    // R = 2 sqrt 2 (1 - p) when p1 = p2 = p.
    const double p = std::clamp(1.0 - radius / kQuantumBound, 0.0, 1.0);
    return ChannelScenario{ChannelKind::amplitude_damping, Placement{Location::after_cnot, p, p}};
}

SchedulePreset turn_per_scenario(const std::vector<Scenario> &scenarios, int points_per_turn) {
    if (scenarios.empty() || points_per_turn < 1) {
        throw InvalidArgument("a preset needs at least one scenario and one point per turn");
    }
    constexpr double kTurn = 2.0 * std::numbers::pi;
    SchedulePreset out;
    const int turns = static_cast<int>(scenarios.size());
    out.grid = phi_grid(0.0, kTurn * turns, points_per_turn * turns);
    for (int k = 0; k < turns; k++) {
        out.schedule.segments.push_back({kTurn * k, kTurn * (k + 1), scenarios[k]});
    }
    out.schedule.validate();
    return out;
}

SchedulePreset concentric_circles(const std::vector<double> &radii, int points_per_turn) {
    std::vector<Scenario> scenarios;
    for (double r : radii) {
        scenarios.emplace_back(circle_scenario(r));
    }
    return turn_per_scenario(scenarios, points_per_turn);
}

SchedulePreset circle_then_line(double radius, int points_per_turn) {
    return turn_per_scenario({circle_scenario(radius), RhoPrimeScenario{0.5, 0.5}}, points_per_turn);
}

SchedulePreset line_then_circle(double radius, int points_per_turn) {
    return turn_per_scenario({RhoPrimeScenario{0.5, 0.5}, circle_scenario(radius)}, points_per_turn);
}

}  // namespace phasetraj
