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

#ifndef PHASETRAJ_GEOMETRY_H
#define PHASETRAJ_GEOMETRY_H

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "phasetraj/trajectory.h"

namespace phasetraj {

/// A point of the (<W2>, <W2'>) plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

std::vector<Point2> plane_points(std::span<const TrajectoryPoint> points);

enum class Model { circle, ellipse, line, segmented };

std::string_view to_string(Model model);

struct SegmentFit;

struct GeometryFit {
    Model model = Model::circle;

    // circle and ellipse
    Point2 center;
    double radius = 0.0;

    // ellipse; orientation is the major-axis angle in [0, pi)
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double orientation = 0.0;

    // line: direction angle in [0, pi), signed perpendicular distance of the
    // line from the origin, and the span of the data along the direction
    // measured from the foot of that perpendicular
    double direction_angle = 0.0;
    double offset = 0.0;
    double extent_min = 0.0;
    double extent_max = 0.0;

    std::vector<SegmentFit> segments;
    double rms_residual = 0.0;
    std::optional<double> phase_shift;
};

/// Points [begin, end) of the source trajectory and their fit.
struct SegmentFit {
    size_t begin = 0;
    size_t end = 0;
    GeometryFit fit;
};

/// Distance from `p` to the fitted curve. Segmented fits are not curves and
/// throw InvalidArgument.
double residual(const GeometryFit &fit, Point2 p);

/// Kasa algebraic circle fit followed by Gauss-Newton refinement of the
/// geometric distances. Needs >= 8 points; throws DegenerateFit on collinear
/// input.
GeometryFit fit_circle(std::span<const Point2> points);

/// Total least squares line through the principal axis of the point
/// covariance. Needs >= 8 points; throws DegenerateFit when the cloud is
/// nearly isotropic (eigenvalue ratio < 4).
GeometryFit fit_line(std::span<const Point2> points);

/// Direct least-squares ellipse fit (Fitzgibbon constraint 4ac - b^2 = 1,
/// numerically stable Halir-Flusser reduction). Needs >= 12 points; throws
/// DegenerateFit when the conic is not a real ellipse.
GeometryFit fit_ellipse(std::span<const Point2> points);

struct ClassifyOptions {
    double rel_tol = 0.02;
    double abs_tol = 1e-6;
    /// Multiple of the per-point standard error admitted as residual on
    /// sampled data; ignored when the trajectory carries no std columns.
    double noise_factor = 2.0;
    size_t min_points = 12;
};

struct SegmentOptions {
    /// Consecutive outliers needed to declare a change point.
    int window = 4;
    /// Outlier threshold as a multiple of the running fit's rms residual.
    double k = 3.0;
    /// Points used to seed each new segment's fit.
    size_t seed_points = 16;
    /// Relative parameter agreement below which adjacent segments merge.
    double merge_tol = 0.05;
    ClassifyOptions classify;
};

/// Root-mean-square standard error of the points' means, or 0 when the
/// trajectory has no std information.
double point_noise(const Trajectory &traj, std::span<const TrajectoryPoint> points);

/// Line, circle, then ellipse: the first whose rms residual is within
/// max(abs_tol, rel_tol * spread, noise_factor * point noise) wins, where
/// spread is the rms distance of the points from their centroid. When no
/// single model is adequate and there are >= 24 points, the trajectory is
/// segmented; otherwise the lowest-residual model is returned. A collapsed
/// trajectory (spread <= abs_tol) is reported as a circle of radius 0.
GeometryFit classify(const Trajectory &traj, const ClassifyOptions &options = {},
                     const SegmentOptions &segment_options = {});

/// Noise-free variant for bare point sets.
GeometryFit classify(std::span<const Point2> points, const ClassifyOptions &options = {});

/// Greedy change-point segmentation: a running fit is extended point by
/// point and split where `window` consecutive points all sit further than
/// k * max(rms, tolerance floor) from it. Each segment is then classified
/// and adjacent segments whose parameters agree within merge_tol are
/// merged. Needs >= 24 points.
std::vector<SegmentFit> segment(const Trajectory &traj, const SegmentOptions &options = {});

/// Least-squares fit of w2(phi) = A cos(phi - pi/4 - delta) + c.
struct PhaseFit {
    double amplitude = 0.0;
    double delta = 0.0;
    double offset = 0.0;
    double rms_residual = 0.0;
};

PhaseFit fit_phase(const Trajectory &traj, size_t begin, size_t end);

/// delta of the whole trajectory: 0 for the GHZ-like circle, pi/4 for
/// rho'(theta = phi). Needs >= 12 points; throws UndetectableShift when
/// the amplitude is not above three standard errors.
double detect_phase_shift(const Trajectory &traj);

/// delta(b) - delta(a), wrapped into (-pi, pi].
double detect_phase_shift(const Trajectory &traj, const SegmentFit &a, const SegmentFit &b);

/// T1 from the radius of a circle fit via the amplitude-damping law.
/// Throws InvalidArgument for non-circle fits.
double infer_t1_from_fit(const GeometryFit &fit, double t);

/// True when some circular trajectory (or circular segment) has a radius
/// above the local-realism bound 2.
bool lr_flag(const GeometryFit &fit);

/// `count` points on the fitted curve(s), for round-trip checks.
std::vector<Point2> resample(const GeometryFit &fit, size_t count);

}  // namespace phasetraj

#endif
