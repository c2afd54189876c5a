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

#include "phasetraj/cli/report.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <nlohmann/json.hpp>

#include "phasetraj/error.h"
#include "phasetraj/oracle.h"
#include "phasetraj/witness.h"

namespace phasetraj::cli {

using nlohmann::json;

namespace {

std::optional<double> circle_t1(const GeometryFit &fit, double gate_time) {
    if (fit.model != Model::circle || !(fit.radius > 0.0)) {
        return std::nullopt;
    }
    if (fit.radius >= kQuantumBound * (1.0 - 1e-9)) {
        return std::numeric_limits<double>::infinity();
    }
    return infer_t1_from_fit(fit, gate_time);
}

std::optional<double> try_phase(const Trajectory &traj, size_t begin, size_t end) {
    if (end - begin < 12) {
        return std::nullopt;
    }
    try {
        Trajectory part;
        part.provenance = traj.provenance;
        part.shots = traj.shots;
        part.reps = traj.reps;
        part.points.assign(traj.points.begin() + static_cast<std::ptrdiff_t>(begin),
                           traj.points.begin() + static_cast<std::ptrdiff_t>(end));
        return detect_phase_shift(part);
    } catch (const UndetectableShift &) {
        return std::nullopt;
    }
}

json optional_number(const std::optional<double> &v) {
    if (!v) {
        return nullptr;
    }
    if (std::isinf(*v)) {
        return "inf";
    }
    return *v;
}

json fit_json(const GeometryFit &fit) {
    json j;
    j["model"] = std::string(to_string(fit.model));
    j["rms_residual"] = fit.rms_residual;
    switch (fit.model) {
        case Model::circle:
            j["center"] = {fit.center.x, fit.center.y};
            j["radius"] = fit.radius;
            break;
        case Model::ellipse:
            j["center"] = {fit.center.x, fit.center.y};
            j["semi_axes"] = {fit.semi_major, fit.semi_minor};
            j["orientation"] = fit.orientation;
            break;
        case Model::line:
            j["direction_angle"] = fit.direction_angle;
            j["offset"] = fit.offset;
            j["extent"] = {fit.extent_min, fit.extent_max};
            break;
        case Model::segmented:
            break;
    }
    return j;
}

}  // namespace

Analysis analyze(const Trajectory &traj, double gate_time) {
    if (traj.points.size() < 12) {
        throw InvalidArgument("analysis needs at least 12 rows, got " + std::to_string(traj.points.size()));
    }
    if (!(gate_time > 0.0)) {
        throw InvalidArgument("gate time must be positive");
    }
    traj.check_ordered();
    Analysis a;
    a.fit = classify(traj);
    a.lr_flag = lr_flag(a.fit);
    if (a.fit.model == Model::segmented) {
        for (const SegmentFit &seg : a.fit.segments) {
            SegmentReport r;
            r.segment = seg;
            r.phase_shift = try_phase(traj, seg.begin, seg.end);
            r.t1 = circle_t1(seg.fit, gate_time);
            r.lr_flag = lr_flag(seg.fit);
            a.segments.push_back(r);
        }
        for (size_t i = 0; i + 1 < a.segments.size(); i++) {
            const auto &x = a.segments[i].phase_shift;
            const auto &y = a.segments[i + 1].phase_shift;
            a.phase_shift_changes.push_back(x && y ? std::optional<double>(std::remainder(*y - *x, 2.0 * std::numbers::pi))
                                                   : std::nullopt);
        }
    } else {
        a.phase_shift = try_phase(traj, 0, traj.points.size());
        a.t1 = circle_t1(a.fit, gate_time);
    }
    return a;
}

json to_json(const Analysis &a) {
    json j = fit_json(a.fit);
    for (const char *key : {"center", "radius", "semi_axes", "orientation", "direction_angle", "offset"}) {
        if (!j.contains(key)) {
            j[key] = nullptr;
        }
    }
    j["segments"] = json::array();
    for (const SegmentReport &r : a.segments) {
        json s = fit_json(r.segment.fit);
        s["begin"] = r.segment.begin;
        s["end"] = r.segment.end;
        s["phase_shift"] = optional_number(r.phase_shift);
        s["t1"] = optional_number(r.t1);
        s["lr_flag"] = r.lr_flag;
        j["segments"].push_back(s);
    }
    j["phase_shift"] = optional_number(a.phase_shift);
    j["phase_shift_changes"] = json::array();
    for (const auto &d : a.phase_shift_changes) {
        j["phase_shift_changes"].push_back(optional_number(d));
    }
    j["t1"] = optional_number(a.t1);
    j["lr_flag"] = a.lr_flag;
    return j;
}

}  // namespace phasetraj::cli
