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

#include "phasetraj/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "phasetraj/error.h"
#include "phasetraj/oracle.h"
#include "phasetraj/witness.h"

namespace phasetraj {

namespace {

constexpr double kPi = std::numbers::pi;

void require_points(std::span<const Point2> points, size_t minimum, const char *what) {
    if (points.size() < minimum) {
        throw InvalidArgument(std::string(what) + " needs at least " + std::to_string(minimum) + " points, got " +
                              std::to_string(points.size()));
    }
}

double wrap_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);
    return a <= -kPi ? a + 2.0 * kPi : a;
}

double half_turn(double a) {
    a = std::fmod(a, kPi);
    if (a < 0.0) {
        a += kPi;
    }
    return a >= kPi ? a - kPi : a;
}

struct Frame {
    Point2 centroid;
    double spread = 0.0;  // rms distance from the centroid
};

Frame frame_of(std::span<const Point2> points) {
    Frame f;
    for (const Point2 &p : points) {
        f.centroid.x += p.x;
        f.centroid.y += p.y;
    }
    const double n = static_cast<double>(points.size());
    f.centroid.x /= n;
    f.centroid.y /= n;
    double ss = 0.0;
    for (const Point2 &p : points) {
        ss += (p.x - f.centroid.x) * (p.x - f.centroid.x) + (p.y - f.centroid.y) * (p.y - f.centroid.y);
    }
    f.spread = std::sqrt(ss / n);
    return f;
}

double rms_of(const GeometryFit &fit, std::span<const Point2> points) {
    double ss = 0.0;
    for (const Point2 &p : points) {
        const double r = residual(fit, p);
        ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(points.size()));
}

/// Root of the secular equation used for the point-to-ellipse distance
/// (Eberly, "Distance from a Point to an Ellipse"); bisection in s.
double ellipse_root(double r0, double z0, double z1, double g) {
    const double n0 = r0 * z0;
    double s0 = z1 - 1.0;
    double s1 = g < 0.0 ? 0.0 : std::hypot(n0, z1) - 1.0;
    double s = 0.0;
    for (int i = 0; i < 2000; i++) {
        s = 0.5 * (s0 + s1);
        if (s == s0 || s == s1) {
            break;
        }
        const double ratio0 = n0 / (s + r0);
        const double ratio1 = z1 / (s + 1.0);
        g = ratio0 * ratio0 + ratio1 * ratio1 - 1.0;
        if (g > 0.0) {
            s0 = s;
        } else if (g < 0.0) {
            s1 = s;
        } else {
            break;
        }
    }
    return s;
}

/// Distance from (y0, y1), both >= 0, to the axis-aligned ellipse with
/// semi-axes e0 >= e1 > 0.
double ellipse_distance_first_quadrant(double e0, double e1, double y0, double y1) {
    if (y1 > 0.0) {
        if (y0 > 0.0) {
            const double z0 = y0 / e0;
            const double z1 = y1 / e1;
            const double g = z0 * z0 + z1 * z1 - 1.0;
            if (g == 0.0) {
                return 0.0;
            }
            const double r0 = (e0 / e1) * (e0 / e1);
            const double s = ellipse_root(r0, z0, z1, g);
            const double x0 = r0 * y0 / (s + r0);
            const double x1 = y1 / (s + 1.0);
            return std::hypot(x0 - y0, x1 - y1);
        }
        return std::abs(y1 - e1);
    }
    const double numer0 = e0 * y0;
    const double denom0 = e0 * e0 - e1 * e1;
    if (numer0 < denom0) {
        const double xde0 = numer0 / denom0;
        const double x0 = e0 * xde0;
        const double x1 = e1 * std::sqrt(std::max(0.0, 1.0 - xde0 * xde0));
        return std::hypot(x0 - y0, x1);
    }
    return std::abs(y0 - e0);
}

struct Candidate {
    GeometryFit fit;
    bool adequate = false;
};

double tolerance_for(std::span<const Point2> points, double noise, const ClassifyOptions &opt) {
    const Frame f = frame_of(points);
    return std::max({opt.abs_tol, opt.rel_tol * f.spread, opt.noise_factor * noise});
}

/// Simplest adequate single model, or the lowest-residual one.
Candidate classify_single(std::span<const Point2> points, double noise, const ClassifyOptions &opt) {
    require_points(points, opt.min_points, "classification");
    const Frame f = frame_of(points);
    if (f.spread <= opt.abs_tol) {
        GeometryFit collapsed;
        collapsed.model = Model::circle;
        collapsed.center = f.centroid;
        collapsed.radius = 0.0;
        collapsed.rms_residual = f.spread;
        return {collapsed, true};
    }
    const double tol = tolerance_for(points, noise, opt);

    std::optional<GeometryFit> best;
    auto consider = [&](auto fitter) -> std::optional<GeometryFit> {
        try {
            GeometryFit fit = fitter(points);
            if (!best || fit.rms_residual < best->rms_residual) {
                best = fit;
            }
            if (fit.rms_residual <= tol) {
                return fit;
            }
        } catch (const DegenerateFit &) {
        }
        return std::nullopt;
    };
    if (auto fit = consider(fit_line)) return {*fit, true};
    if (auto fit = consider(fit_circle)) return {*fit, true};
    if (auto fit = consider(fit_ellipse)) return {*fit, true};
    if (!best) {
        throw DegenerateFit("no model could be fitted to the trajectory");
    }
    return {*best, false};
}

bool compatible(const GeometryFit &a, const GeometryFit &b, double tol) {
    if (a.model != b.model) {
        return false;
    }
    auto center_gap = [&] { return std::hypot(a.center.x - b.center.x, a.center.y - b.center.y); };
    auto angle_gap = [](double u, double v) {
        const double d = std::abs(half_turn(u) - half_turn(v));
        return std::min(d, kPi - d);
    };
    switch (a.model) {
        case Model::circle: {
            const double scale = std::max({a.radius, b.radius, 1e-12});
            return std::abs(a.radius - b.radius) <= tol * scale && center_gap() <= tol * scale;
        }
        case Model::line: {
            const double scale = std::max({a.extent_max - a.extent_min, b.extent_max - b.extent_min, 1e-12});
            return angle_gap(a.direction_angle, b.direction_angle) <= tol * kPi / 2 &&
                   std::abs(a.offset - b.offset) <= tol * scale;
        }
        case Model::ellipse: {
            const double scale = std::max(a.semi_major, b.semi_major);
            const bool round = a.semi_minor > 0.95 * a.semi_major && b.semi_minor > 0.95 * b.semi_major;
            return std::abs(a.semi_major - b.semi_major) <= tol * scale &&
                   std::abs(a.semi_minor - b.semi_minor) <= tol * scale && center_gap() <= tol * scale &&
                   (round || angle_gap(a.orientation, b.orientation) <= tol * kPi / 2);
        }
        case Model::segmented:
            return false;
    }
    return false;
}

double segmented_rms(const std::vector<SegmentFit> &segments, std::span<const Point2> points) {
    double ss = 0.0;
    for (const SegmentFit &s : segments) {
        for (size_t i = s.begin; i < s.end; i++) {
            const double r = residual(s.fit, points[i]);
            ss += r * r;
        }
    }
    return std::sqrt(ss / static_cast<double>(points.size()));
}

}  // namespace

std::vector<Point2> plane_points(std::span<const TrajectoryPoint> points) {
    std::vector<Point2> out;
    out.reserve(points.size());
    for (const TrajectoryPoint &p : points) {
        out.push_back({p.w2, p.w2p});
    }
    return out;
}

std::string_view to_string(Model model) {
    switch (model) {
        case Model::circle:
            return "circle";
        case Model::ellipse:
            return "ellipse";
        case Model::line:
            return "line";
        case Model::segmented:
            return "segmented";
    }
    return "?";
}

double residual(const GeometryFit &fit, Point2 p) {
    switch (fit.model) {
        case Model::circle:
            return std::abs(std::hypot(p.x - fit.center.x, p.y - fit.center.y) - fit.radius);
        case Model::line:
            return std::abs(-std::sin(fit.direction_angle) * p.x + std::cos(fit.direction_angle) * p.y - fit.offset);
        case Model::ellipse: {
            const double c = std::cos(fit.orientation);
            const double s = std::sin(fit.orientation);
            const double dx = p.x - fit.center.x;
            const double dy = p.y - fit.center.y;
            const double u = std::abs(c * dx + s * dy);
            const double v = std::abs(-s * dx + c * dy);
            if (fit.semi_minor <= 0.0) {
                // Collapsed onto the major axis segment.
                return u <= fit.semi_major ? v : std::hypot(u - fit.semi_major, v);
            }
            return ellipse_distance_first_quadrant(fit.semi_major, fit.semi_minor, u, v);
        }
        case Model::segmented:
            break;
    }
    throw InvalidArgument("residual is undefined for a segmented fit");
}

GeometryFit fit_circle(std::span<const Point2> points) {
    require_points(points, 8, "circle fit");
    const Frame f = frame_of(points);
    if (!(f.spread > 0.0)) {
        throw DegenerateFit("circle fit: all points coincide");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixX2d xy(n, 2);
    for (Eigen::Index i = 0; i < n; i++) {
        xy(i, 0) = (points[i].x - f.centroid.x) / f.spread;
        xy(i, 1) = (points[i].y - f.centroid.y) / f.spread;
    }
    Eigen::Matrix2d cov = xy.transpose() * xy / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> cov_eig(cov);
    if (cov_eig.eigenvalues()(0) < 1e-10 * cov_eig.eigenvalues()(1)) {
        throw DegenerateFit("circle fit: points are collinear");
    }

    // Kasa: x^2 + y^2 + D x + E y + F = 0 in the least-squares sense.
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; i++) {
        a(i, 0) = xy(i, 0);
        a(i, 1) = xy(i, 1);
        a(i, 2) = 1.0;
        b(i) = -(xy(i, 0) * xy(i, 0) + xy(i, 1) * xy(i, 1));
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < 3) {
        throw DegenerateFit("circle fit: rank-deficient normal equations");
    }
    const Eigen::Vector3d def = qr.solve(b);
    double cx = -def(0) / 2.0;
    double cy = -def(1) / 2.0;
    const double r2 = cx * cx + cy * cy - def(2);
    if (!(r2 > 0.0)) {
        throw DegenerateFit("circle fit: non-positive squared radius");
    }
    double r = std::sqrt(r2);

    // Gauss-Newton on the geometric residuals |p - c| - R.
    Eigen::MatrixXd jac(n, 3);
    Eigen::VectorXd res(n);
    for (int iter = 0; iter < 50; iter++) {
        for (Eigen::Index i = 0; i < n; i++) {
            const double dx = xy(i, 0) - cx;
            const double dy = xy(i, 1) - cy;
            const double d = std::hypot(dx, dy);
            if (d == 0.0) {
                jac.row(i).setZero();
                jac(i, 2) = -1.0;
            } else {
                jac(i, 0) = -dx / d;
                jac(i, 1) = -dy / d;
                jac(i, 2) = -1.0;
            }
            res(i) = d - r;
        }
        const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-res);
        if (!step.allFinite() || !(r + step(2) > 0.0)) {
            break;
        }
        cx += step(0);
        cy += step(1);
        r += step(2);
        if (step.norm() <= 1e-15 * (1.0 + r)) {
            break;
        }
    }
    if (r > 1e6) {
        throw DegenerateFit("circle fit: radius diverges, data is effectively a line");
    }

    GeometryFit fit;
    fit.model = Model::circle;
    fit.center = {f.centroid.x + f.spread * cx, f.centroid.y + f.spread * cy};
    fit.radius = f.spread * r;
    fit.rms_residual = rms_of(fit, points);
    return fit;
}

GeometryFit fit_line(std::span<const Point2> points) {
    require_points(points, 8, "line fit");
    const Frame f = frame_of(points);
    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
    for (const Point2 &p : points) {
        const Eigen::Vector2d d(p.x - f.centroid.x, p.y - f.centroid.y);
        cov += d * d.transpose();
    }
    cov /= static_cast<double>(points.size());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
    const double minor = std::max(eig.eigenvalues()(0), 0.0);
    const double major = eig.eigenvalues()(1);
    if (!(major > 0.0) || major < 4.0 * minor) {
        throw DegenerateFit("line fit: point cloud is nearly isotropic");
    }
    const Eigen::Vector2d dir = eig.eigenvectors().col(1);

    GeometryFit fit;
    fit.model = Model::line;
    fit.direction_angle = half_turn(std::atan2(dir(1), dir(0)));
    const double c = std::cos(fit.direction_angle);
    const double s = std::sin(fit.direction_angle);
    fit.offset = -s * f.centroid.x + c * f.centroid.y;
    fit.extent_min = std::numeric_limits<double>::infinity();
    fit.extent_max = -std::numeric_limits<double>::infinity();
    for (const Point2 &p : points) {
        const double t = c * p.x + s * p.y;
        fit.extent_min = std::min(fit.extent_min, t);
        fit.extent_max = std::max(fit.extent_max, t);
    }
    fit.rms_residual = rms_of(fit, points);
    return fit;
}

GeometryFit fit_ellipse(std::span<const Point2> points) {
    require_points(points, 12, "ellipse fit");
    const Frame f = frame_of(points);
    if (!(f.spread > 0.0)) {
        throw DegenerateFit("ellipse fit: all points coincide");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixX3d d1(n, 3);
    Eigen::MatrixX3d d2(n, 3);
    for (Eigen::Index i = 0; i < n; i++) {
        const double x = (points[i].x - f.centroid.x) / f.spread;
        const double y = (points[i].y - f.centroid.y) / f.spread;
        d1.row(i) << x * x, x * y, y * y;
        d2.row(i) << x, y, 1.0;
    }
    const Eigen::Matrix3d s1 = d1.transpose() * d1;
    const Eigen::Matrix3d s2 = d1.transpose() * d2;
    const Eigen::Matrix3d s3 = d2.transpose() * d2;
    Eigen::FullPivLU<Eigen::Matrix3d> s3_lu(s3);
    s3_lu.setThreshold(1e-12);
    if (s3_lu.rank() < 3) {
        throw DegenerateFit("ellipse fit: points are collinear");
    }
    const Eigen::Matrix3d t = -s3_lu.solve(s2.transpose());
    const Eigen::Matrix3d m = s1 + s2 * t;
    Eigen::Matrix3d reduced;
    reduced.row(0) = m.row(2) / 2.0;
    reduced.row(1) = -m.row(1);
    reduced.row(2) = m.row(0) / 2.0;

    Eigen::EigenSolver<Eigen::Matrix3d> es(reduced);
    int chosen = -1;
    double best_cond = 0.0;
    for (int k = 0; k < 3; k++) {
        const Eigen::Vector3d v = es.eigenvectors().col(k).real().normalized();
        const double cond = 4.0 * v(0) * v(2) - v(1) * v(1);
        if (cond > best_cond) {
            best_cond = cond;
            chosen = k;
        }
    }
    if (chosen < 0) {
        throw DegenerateFit("ellipse fit: conic solution is not an ellipse");
    }
    Eigen::Vector3d a1 = es.eigenvectors().col(chosen).real();
    Eigen::Vector3d a2 = t * a1;
    double ca = a1(0), cb = a1(1), cc = a1(2), cd = a2(0), ce = a2(1), cf = a2(2);
    if (ca + cc < 0.0) {
        ca = -ca, cb = -cb, cc = -cc, cd = -cd, ce = -ce, cf = -cf;
    }
    const double det = 4.0 * ca * cc - cb * cb;
    if (!(det > 0.0)) {
        throw DegenerateFit("ellipse fit: conic solution is not an ellipse");
    }
    const double x0 = (cb * ce - 2.0 * cc * cd) / det;
    const double y0 = (cb * cd - 2.0 * ca * ce) / det;
    const double f0 = cf + 0.5 * (cd * x0 + ce * y0);
    Eigen::Matrix2d q;
    q << ca, cb / 2.0, cb / 2.0, cc;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> qe(q);
    const double l_small = qe.eigenvalues()(0);
    const double l_large = qe.eigenvalues()(1);
    if (!(f0 < 0.0) || !(l_small > 0.0)) {
        throw DegenerateFit("ellipse fit: conic solution is an imaginary or point ellipse");
    }
    const Eigen::Vector2d major_dir = qe.eigenvectors().col(0);

    GeometryFit fit;
    fit.model = Model::ellipse;
    fit.center = {f.centroid.x + f.spread * x0, f.centroid.y + f.spread * y0};
    fit.semi_major = f.spread * std::sqrt(-f0 / l_small);
    fit.semi_minor = f.spread * std::sqrt(-f0 / l_large);
    fit.orientation = half_turn(std::atan2(major_dir(1), major_dir(0)));
    fit.rms_residual = rms_of(fit, points);
    return fit;
}

double point_noise(const Trajectory &traj, std::span<const TrajectoryPoint> points) {
    double ss = 0.0;
    size_t counted = 0;
    const double reps = traj.reps > 0 ? static_cast<double>(traj.reps) : 1.0;
    for (const TrajectoryPoint &p : points) {
        if (p.w2_std && p.w2p_std) {
            ss += 0.5 * ((*p.w2_std) * (*p.w2_std) + (*p.w2p_std) * (*p.w2p_std)) / reps;
            counted++;
        }
    }
    return counted == 0 ? 0.0 : std::sqrt(ss / static_cast<double>(counted));
}

GeometryFit classify(std::span<const Point2> points, const ClassifyOptions &options) {
    return classify_single(points, 0.0, options).fit;
}

GeometryFit classify(const Trajectory &traj, const ClassifyOptions &options, const SegmentOptions &segment_options) {
    const std::vector<Point2> pts = plane_points(traj.points);
    const Candidate single = classify_single(pts, point_noise(traj, traj.points), options);
    if (single.adequate || pts.size() < 24) {
        return single.fit;
    }
    SegmentOptions seg_opt = segment_options;
    seg_opt.classify = options;
    std::vector<SegmentFit> segments = segment(traj, seg_opt);
    if (segments.size() < 2) {
        return single.fit;
    }
    GeometryFit fit;
    fit.model = Model::segmented;
    fit.rms_residual = segmented_rms(segments, pts);
    fit.segments = std::move(segments);
    return fit;
}

std::vector<SegmentFit> segment(const Trajectory &traj, const SegmentOptions &options) {
    const std::vector<Point2> pts = plane_points(traj.points);
    const size_t n = pts.size();
    if (n < 24) {
        throw InvalidArgument("segmentation needs at least 24 points, got " + std::to_string(n));
    }
    const ClassifyOptions &copt = options.classify;
    const size_t min_points = std::max<size_t>(copt.min_points, 1);
    const size_t seed = std::max(options.seed_points, min_points);
    const size_t window = static_cast<size_t>(std::max(options.window, 1));
    const std::span<const TrajectoryPoint> all(traj.points);

    auto classify_range = [&](size_t begin, size_t end) {
        const std::span<const Point2> range(pts.data() + begin, end - begin);
        return classify_single(range, point_noise(traj, all.subspan(begin, end - begin)), copt);
    };
    auto fit_range = [&](size_t begin, size_t end) { return classify_range(begin, end).fit; };

    std::vector<SegmentFit> segments;
    size_t start = 0;
    while (start < n) {
        if (n - start < min_points && !segments.empty()) {
            segments.back().end = n;
            segments.back().fit = fit_range(segments.back().begin, n);
            break;
        }
        size_t end = std::min(n, start + seed);
        GeometryFit fit = fit_range(start, end);
        while (end < n) {
            const Frame fr = frame_of(std::span<const Point2>(pts.data() + start, end - start));
            const double floor = std::max(copt.abs_tol, copt.rel_tol * fr.spread);
            const double threshold = options.k * std::max(fit.rms_residual, floor);
            bool change = end + window <= n;
            for (size_t j = end; change && j < end + window; j++) {
                change = residual(fit, pts[j]) > threshold;
            }
            if (change) {
                break;
            }
            end++;
            fit = fit_range(start, end);
        }
        segments.push_back({start, end, fit});
        start = end;
    }

    for (bool merged = true; merged && segments.size() > 1;) {
        merged = false;
        for (size_t i = 0; i + 1 < segments.size(); i++) {
            // A short arc can pass for a line, so neighbours are also merged
            // whenever one model explains both.
            const Candidate joint = classify_range(segments[i].begin, segments[i + 1].end);
            if (joint.adequate || compatible(segments[i].fit, segments[i + 1].fit, options.merge_tol)) {
                segments[i].end = segments[i + 1].end;
                segments[i].fit = joint.fit;
                segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                merged = true;
                break;
            }
        }
    }
    return segments;
}

PhaseFit fit_phase(const Trajectory &traj, size_t begin, size_t end) {
    if (end > traj.points.size() || begin > end || end - begin < 12) {
        throw InvalidArgument("phase fit needs a range of at least 12 points");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(end - begin);
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; i++) {
        const TrajectoryPoint &p = traj.points[begin + static_cast<size_t>(i)];
        a(i, 0) = std::cos(p.phi);
        a(i, 1) = std::sin(p.phi);
        a(i, 2) = 1.0;
        b(i) = p.w2;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < 3) {
        throw UndetectableShift("phase fit: phi values do not resolve a sinusoid");
    }
    const Eigen::Vector3d coef = qr.solve(b);
    PhaseFit fit;
    fit.amplitude = std::hypot(coef(0), coef(1));
    fit.delta = wrap_angle(std::atan2(coef(1), coef(0)) - kPi / 4);
    fit.offset = coef(2);
    fit.rms_residual = std::sqrt((a * coef - b).squaredNorm() / static_cast<double>(n));
    return fit;
}

namespace {

double segment_delta(const Trajectory &traj, size_t begin, size_t end) {
    const PhaseFit fit = fit_phase(traj, begin, end);
    const std::span<const TrajectoryPoint> range(traj.points.data() + begin, end - begin);
    const double sigma = std::max(fit.rms_residual, point_noise(traj, range));
    const double standard_error = sigma * std::sqrt(2.0 / static_cast<double>(end - begin));
    if (!(fit.amplitude > std::max(1e-9, 3.0 * standard_error))) {
        throw UndetectableShift("sinusoid amplitude " + std::to_string(fit.amplitude) + " is below the noise floor");
    }
    return fit.delta;
}

}  // namespace

double detect_phase_shift(const Trajectory &traj) {
    return segment_delta(traj, 0, traj.points.size());
}

double detect_phase_shift(const Trajectory &traj, const SegmentFit &a, const SegmentFit &b) {
    return wrap_angle(segment_delta(traj, b.begin, b.end) - segment_delta(traj, a.begin, a.end));
}

double infer_t1_from_fit(const GeometryFit &fit, double t) {
    if (fit.model != Model::circle) {
        throw InvalidArgument("T1 inference needs a circle fit, got " + std::string(to_string(fit.model)));
    }
    return infer_t1(fit.radius, t);
}

bool lr_flag(const GeometryFit &fit) {
    if (fit.model == Model::circle) {
        return fit.radius > kLocalRealismBound;
    }
    if (fit.model == Model::segmented) {
        return std::any_of(fit.segments.begin(), fit.segments.end(),
                           [](const SegmentFit &s) { return lr_flag(s.fit); });
    }
    return false;
}

std::vector<Point2> resample(const GeometryFit &fit, size_t count) {
    std::vector<Point2> out;
    out.reserve(count);
    switch (fit.model) {
        case Model::circle:
            for (size_t i = 0; i < count; i++) {
                const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
                out.push_back({fit.center.x + fit.radius * std::cos(a), fit.center.y + fit.radius * std::sin(a)});
            }
            break;
        case Model::ellipse: {
            const double c = std::cos(fit.orientation);
            const double s = std::sin(fit.orientation);
            for (size_t i = 0; i < count; i++) {
                const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
                const double u = fit.semi_major * std::cos(a);
                const double v = fit.semi_minor * std::sin(a);
                out.push_back({fit.center.x + c * u - s * v, fit.center.y + s * u + c * v});
            }
            break;
        }
        case Model::line: {
            const double c = std::cos(fit.direction_angle);
            const double s = std::sin(fit.direction_angle);
            for (size_t i = 0; i < count; i++) {
                const double frac = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
                const double t = fit.extent_min + frac * (fit.extent_max - fit.extent_min);
                out.push_back({-s * fit.offset + c * t, c * fit.offset + s * t});
            }
            break;
        }
        case Model::segmented:
            for (const SegmentFit &seg : fit.segments) {
                const std::vector<Point2> part = resample(seg.fit, count);
                out.insert(out.end(), part.begin(), part.end());
            }
            break;
    }
    return out;
}

}  // namespace phasetraj
