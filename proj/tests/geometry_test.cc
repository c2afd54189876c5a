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

#include <gtest/gtest.h>

#include "phasetraj/error.h"
#include "phasetraj/oracle.h"
#include "phasetraj/trajectory.h"
#include "phasetraj/witness.h"
#include "support/reference.h"

using namespace phasetraj;

namespace {

std::vector<Point2> circle_points(double cx, double cy, double r, int n, double start = 0.0) {
    std::vector<Point2> out;
    for (int i = 0; i < n; i++) {
        const double a = start + 2 * ref::kPi * i / n;
        out.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return out;
}

Trajectory exact(const Scenario &s, int n = 64) {
    return sweep(phi_grid(0, 2 * ref::kPi, n), s, ShotPlan::exact_plan());
}

Trajectory exact(const SchedulePreset &p) { return sweep(p.grid, p.schedule, ShotPlan::exact_plan()); }

ChannelScenario depol_before(double p1, double p2) {
    return ChannelScenario{ChannelKind::depolarizing, {Location::before_cnot, p1, p2}};
}

}  // namespace

TEST(FitCircle, Examples) {
    const GeometryFit a = fit_circle(circle_points(0, 0, 2.1, 64));
    EXPECT_EQ(a.model, Model::circle);
    EXPECT_NEAR(a.radius, 2.1, 1e-9);
    EXPECT_NEAR(a.center.x, 0, 1e-9);
    EXPECT_NEAR(a.center.y, 0, 1e-9);

    const GeometryFit g = fit_circle(plane_points(exact(NoiselessScenario{}).points));
    EXPECT_NEAR(g.radius, 2 * ref::kSqrt2, 1e-9);
    EXPECT_NEAR(std::hypot(g.center.x, g.center.y), 0, 1e-9);

    const Trajectory s = sweep(phi_grid(0, 2 * ref::kPi, 64), NoiselessScenario{}, ShotPlan{1024, 5, 1, false});
    EXPECT_NEAR(fit_circle(plane_points(s.points)).radius, 2 * ref::kSqrt2, 0.15);
}

TEST(FitCircle, OffCentreArcAndErrors) {
    const GeometryFit a = fit_circle(circle_points(1.5, -0.7, 0.4, 20, 0.3));
    EXPECT_NEAR(a.radius, 0.4, 1e-12);
    EXPECT_NEAR(a.center.x, 1.5, 1e-12);
    EXPECT_NEAR(a.center.y, -0.7, 1e-12);
    std::vector<Point2> line;
    for (int i = 0; i < 10; i++) line.push_back({1.0 * i, 2.0 * i});
    EXPECT_THROW(fit_circle(line), DegenerateFit);
    EXPECT_THROW(fit_circle(circle_points(0, 0, 1, 7)), InvalidArgument);
}

TEST(FitLine, Examples) {
    const GeometryFit a = fit_line(plane_points(exact(RhoPrimeScenario{0.5, 0.5}).points));
    EXPECT_EQ(a.model, Model::line);
    EXPECT_NEAR(a.direction_angle, ref::kPi / 4, 1e-9);
    EXPECT_NEAR(a.offset, 0, 1e-9);

    std::vector<Point2> anti;
    for (int i = 0; i < 10; i++) anti.push_back({i - 4.5, 4.5 - i});
    EXPECT_NEAR(fit_line(anti).direction_angle, 3 * ref::kPi / 4, 1e-12);

    EXPECT_THROW(fit_line(std::vector<Point2>{{0, 0}, {1, 1}}), InvalidArgument);
    EXPECT_THROW(fit_line(circle_points(0, 0, 1, 16)), DegenerateFit);
}

TEST(FitLine, OffsetAndExtent) {
    std::vector<Point2> pts;
    for (int i = 0; i < 12; i++) pts.push_back({static_cast<double>(i), 3.0});
    const GeometryFit f = fit_line(pts);
    EXPECT_NEAR(f.direction_angle, 0, 1e-12);
    EXPECT_NEAR(f.offset, 3, 1e-12);
    EXPECT_NEAR(f.extent_min, 0, 1e-12);
    EXPECT_NEAR(f.extent_max, 11, 1e-12);
}

TEST(FitEllipse, Examples) {
    const GeometryFit e = fit_ellipse(plane_points(exact(depol_before(0, 1)).points));
    EXPECT_EQ(e.model, Model::ellipse);
    EXPECT_NEAR(e.semi_major, 2 * ref::kSqrt2, 1e-9);
    EXPECT_NEAR(e.semi_minor, ref::kSqrt2, 1e-9);
    EXPECT_NEAR(e.orientation, ref::kPi / 4, 1e-9);

    const GeometryFit c = fit_ellipse(circle_points(0.2, 0.1, 1.3, 40));
    EXPECT_NEAR(c.semi_major, 1.3, 1e-6);
    EXPECT_NEAR(c.semi_minor, 1.3, 1e-6);

    const GeometryFit n = fit_ellipse(plane_points(exact(depol_before(0, 0)).points));
    EXPECT_NEAR(n.semi_major, 2 * ref::kSqrt2, 1e-9);
    EXPECT_NEAR(n.semi_minor, 2 * ref::kSqrt2, 1e-9);
}

TEST(FitEllipse, RotatedAndShifted) {
    std::vector<Point2> pts;
    const double th = 0.6;
    for (int i = 0; i < 30; i++) {
        const double a = 2 * ref::kPi * i / 30;
        const double u = 3 * std::cos(a), v = 1.2 * std::sin(a);
        pts.push_back({-1 + std::cos(th) * u - std::sin(th) * v, 2 + std::sin(th) * u + std::cos(th) * v});
    }
    const GeometryFit e = fit_ellipse(pts);
    EXPECT_NEAR(e.semi_major, 3, 1e-9);
    EXPECT_NEAR(e.semi_minor, 1.2, 1e-9);
    EXPECT_NEAR(e.orientation, th, 1e-9);
    EXPECT_NEAR(e.center.x, -1, 1e-9);
    EXPECT_NEAR(e.center.y, 2, 1e-9);
    EXPECT_LT(e.rms_residual, 1e-9);
    EXPECT_GE(e.semi_major, e.semi_minor);
}

TEST(FitEllipse, DegenerateInputs) {
    std::vector<Point2> line;
    for (int i = 0; i < 20; i++) line.push_back({0.5 * i, 0.25 * i});
    EXPECT_THROW(fit_ellipse(line), DegenerateFit);
    EXPECT_THROW(fit_ellipse(circle_points(0, 0, 1, 11)), InvalidArgument);
}

TEST(Residual, EllipseDistanceAgainstBruteForce) {
    GeometryFit e;
    e.model = Model::ellipse;
    e.center = {0.3, -0.2};
    e.semi_major = 2.0;
    e.semi_minor = 0.7;
    e.orientation = 1.1;
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 100; i++) {
        const Point2 p{u(rng), u(rng)};
        double best = 1e300;
        for (int k = 0; k < 200000; k++) {
            const double a = 2 * ref::kPi * k / 200000;
            const double x = 2.0 * std::cos(a), y = 0.7 * std::sin(a);
            const double qx = 0.3 + std::cos(1.1) * x - std::sin(1.1) * y;
            const double qy = -0.2 + std::sin(1.1) * x + std::cos(1.1) * y;
            best = std::min(best, std::hypot(p.x - qx, p.y - qy));
        }
        EXPECT_NEAR(residual(e, p), best, 1e-4);
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(exact(NoiselessScenario{})).model, Model::circle);
    const GeometryFit line = classify(exact(RhoPrimeScenario{0.5, 0.5}));
    EXPECT_EQ(line.model, Model::line);
    EXPECT_NEAR(line.direction_angle, ref::kPi / 4, 1e-9);
    EXPECT_EQ(classify(exact(depol_before(0.2, 1.0))).model, Model::ellipse);
}

TEST(Classify, CirclesForDampingDephasingAndT1T2) {
    for (double p : {0.1, 0.5, 0.8}) {
        for (Location w : {Location::before_cnot, Location::after_cnot, Location::after_phase}) {
            EXPECT_EQ(classify(exact(ChannelScenario{ChannelKind::amplitude_damping, {w, p, 0.3}})).model,
                      Model::circle);
            EXPECT_EQ(classify(exact(ChannelScenario{ChannelKind::dephasing, {w, p, 0.3}})).model, Model::circle);
        }
    }
    EXPECT_EQ(classify(exact(T1T2Scenario{{0.1, 0.3, 0.4, 0.5, 0.2}})).model, Model::circle);
}

TEST(Classify, CollapsedTrajectoryIsPointCircle) {
    const GeometryFit f = classify(exact(ChannelScenario{ChannelKind::dephasing, {Location::after_cnot, 1, 1}}));
    EXPECT_EQ(f.model, Model::circle);
    EXPECT_EQ(f.radius, 0.0);
    EXPECT_FALSE(lr_flag(f));
}

TEST(Classify, TooFewPoints) {
    EXPECT_THROW(classify(circle_points(0, 0, 1, 11)), InvalidArgument);
}

TEST(ClassifyProperty, ResampledModelClassifiesTheSame) {
    const Trajectory inputs[] = {exact(NoiselessScenario{}), exact(RhoPrimeScenario{0.5, 0.5}),
                                 exact(depol_before(0.3, 0.9)),
                                 exact(ChannelScenario{ChannelKind::amplitude_damping, {Location::after_cnot, 0.4, 0.2}})};
    for (const Trajectory &t : inputs) {
        const GeometryFit f = classify(t);
        const GeometryFit again = classify(t);
        EXPECT_EQ(f.model, again.model);
        EXPECT_EQ(f.rms_residual, again.rms_residual);
        const GeometryFit r = classify(resample(f, 64));
        EXPECT_EQ(r.model, f.model);
    }
}

TEST(ClassifyProperty, DampingRescalesButNeverShiftsPhase) {
    for (double p : {0.0, 0.2, 0.5, 0.7}) {
        const Trajectory t = exact(ChannelScenario{ChannelKind::amplitude_damping, {Location::after_cnot, p, p}});
        const GeometryFit f = classify(t);
        ASSERT_EQ(f.model, Model::circle);
        EXPECT_NEAR(f.center.x, 0, 1e-9);
        EXPECT_NEAR(f.center.y, 0, 1e-9);
        EXPECT_NEAR(detect_phase_shift(t), 0, 1e-9);
    }
}

TEST(Segment, TwoRadii) {
    const Trajectory t = exact(concentric_circles({2.1, 0.5}));
    const auto segs = segment(t);
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0].begin, 0u);
    EXPECT_EQ(segs[0].end, 64u);
    EXPECT_NEAR(segs[0].fit.radius, 2.1, 1e-6);
    EXPECT_NEAR(segs[1].fit.radius, 0.5, 1e-6);
    const GeometryFit f = classify(t);
    EXPECT_EQ(f.model, Model::segmented);
    EXPECT_TRUE(lr_flag(f));
}

TEST(Segment, FourRadii) {
    const double radii[] = {0.25, 0.6, 0.375, 0.9};
    const auto segs = segment(exact(concentric_circles({radii[0], radii[1], radii[2], radii[3]})));
    ASSERT_EQ(segs.size(), 4u);
    for (int i = 0; i < 4; i++) {
        EXPECT_EQ(segs[i].fit.model, Model::circle);
        EXPECT_NEAR(segs[i].fit.radius, radii[i], 1e-6);
    }
}

TEST(Segment, ConstantScenarioIsOneSegment) {
    const Trajectory t = sweep(phi_grid(0, 4 * ref::kPi, 128), NoiselessScenario{}, ShotPlan::exact_plan());
    EXPECT_EQ(segment(t).size(), 1u);
    EXPECT_THROW(segment(exact(NoiselessScenario{}, 20)), InvalidArgument);
}

TEST(SegmentProperty, SampledFalsePositiveRate) {
    int splits = 0;
    const int trials = 40;
    for (int seed = 0; seed < trials; seed++) {
        const Trajectory t = sweep(phi_grid(0, 2 * ref::kPi, 64), NoiselessScenario{},
                                   ShotPlan{1024, 5, static_cast<std::uint64_t>(seed), false});
        if (classify(t).model == Model::segmented) splits++;
    }
    EXPECT_LE(splits, trials / 20);
}

TEST(PhaseShift, Examples) {
    EXPECT_NEAR(detect_phase_shift(exact(NoiselessScenario{})), 0, 1e-9);
    EXPECT_NEAR(detect_phase_shift(exact(RhoPrimeScenario{0.5, 0.5})), ref::kPi / 4, 1e-9);
    const Trajectory t = exact(circle_then_line(2.1));
    const auto segs = segment(t);
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0].fit.model, Model::circle);
    EXPECT_EQ(segs[1].fit.model, Model::line);
    EXPECT_NEAR(detect_phase_shift(t, segs[0], segs[1]), ref::kPi / 4, 0.05);
}

TEST(PhaseShift, FitMatchesGeneratingSinusoid) {
    Trajectory t;
    for (int i = 0; i < 30; i++) {
        const double phi = 2 * ref::kPi * i / 30;
        t.points.push_back({phi, 1.7 * std::cos(phi - ref::kPi / 4 - 0.4) + 0.2, 0.0});
    }
    const PhaseFit f = fit_phase(t, 0, 30);
    EXPECT_NEAR(f.amplitude, 1.7, 1e-12);
    EXPECT_NEAR(f.delta, 0.4, 1e-12);
    EXPECT_NEAR(f.offset, 0.2, 1e-12);
}

TEST(PhaseShift, FlatSignalIsUndetectable) {
    Trajectory t;
    for (int i = 0; i < 20; i++) t.points.push_back({0.3 * i, 0.0, 0.0});
    EXPECT_THROW(detect_phase_shift(t), UndetectableShift);
    t.points.resize(8);
    EXPECT_THROW(detect_phase_shift(t), InvalidArgument);
}

TEST(InferT1, Examples) {
    GeometryFit f;
    f.model = Model::circle;
    f.radius = 2 * ref::kSqrt2 * std::exp(-0.5);
    EXPECT_NEAR(infer_t1_from_fit(f, 0.1), 0.2, 1e-12);
    f.radius = 2 * ref::kSqrt2;
    EXPECT_TRUE(std::isinf(infer_t1_from_fit(f, 0.1)));
    f.radius = 2.1;
    EXPECT_NEAR(infer_t1_from_fit(f, 0.1), 0.1 / std::log(2 * ref::kSqrt2 / 2.1), 1e-12);
    EXPECT_NEAR(infer_t1_from_fit(f, 0.1), 0.336, 1e-3);
    f.model = Model::line;
    EXPECT_THROW(infer_t1_from_fit(f, 0.1), InvalidArgument);
}

TEST(LrFlag, Examples) {
    EXPECT_TRUE(lr_flag(classify(exact(NoiselessScenario{}))));
    EXPECT_FALSE(lr_flag(classify(exact(ChannelScenario{ChannelKind::depolarizing, {Location::after_cnot, 1, 1}}))));
    EXPECT_FALSE(lr_flag(classify(exact(circle_scenario(1.9)))));
}

TEST(Segment, ShortArcDoesNotSplitSmallCircle) {
    const std::vector<double> radii = {0.25, 0.6, 0.375, 0.9};
    const SchedulePreset preset = concentric_circles(radii, 128);
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        const GeometryFit f = classify(sweep(preset.grid, preset.schedule, ShotPlan{1024, 5, seed, false}));
        ASSERT_EQ(f.model, Model::segmented);
        ASSERT_EQ(f.segments.size(), radii.size()) << "seed " << seed;
        for (size_t i = 0; i < radii.size(); i++) {
            EXPECT_EQ(f.segments[i].fit.model, Model::circle);
            EXPECT_NEAR(f.segments[i].fit.radius, radii[i], 0.05 * radii[i]);
        }
    }
}

TEST(Segment, JointFitMergesNeighbours) {
    // Two halves of one sampled circle stay one segment.
    const SchedulePreset preset = concentric_circles({0.5, 0.5}, 64);
    const GeometryFit f = classify(sweep(preset.grid, preset.schedule, ShotPlan{1024, 5, 3, false}));
    EXPECT_EQ(f.model, Model::circle);
    EXPECT_NEAR(f.radius, 0.5, 0.025);
}
