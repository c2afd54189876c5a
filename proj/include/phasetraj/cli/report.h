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

#ifndef PHASETRAJ_CLI_REPORT_H
#define PHASETRAJ_CLI_REPORT_H

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "phasetraj/geometry.h"

namespace phasetraj::cli {

inline constexpr double kDefaultGateTime = 0.1;

struct SegmentReport {
    SegmentFit segment;
    std::optional<double> phase_shift;
    std::optional<double> t1;
    bool lr_flag = false;
};

struct Analysis {
    GeometryFit fit;
    std::vector<SegmentReport> segments;
    std::optional<double> phase_shift;
    /// Shift between consecutive segments, when both phases are resolvable.
    std::vector<std::optional<double>> phase_shift_changes;
    std::optional<double> t1;
    bool lr_flag = false;
};

/// Throws InvalidArgument for fewer than 12 points.
Analysis analyze(const Trajectory &traj, double gate_time = kDefaultGateTime);

nlohmann::json to_json(const Analysis &analysis);

}  // namespace phasetraj::cli

#endif
