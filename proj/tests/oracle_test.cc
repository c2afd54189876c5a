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

#include "phasetraj/oracle.h"

#include <gtest/gtest.h>

#include "phasetraj/error.h"
#include "phasetraj/states.h"
#include "phasetraj/witness.h"
#include "support/reference.h"

using namespace phasetraj;

namespace {

const ChannelKind kKinds[] = {ChannelKind::depolarizing, ChannelKind::dephasing, ChannelKind::amplitude_damping};
const Location kPlaces[] = {Location::before_cnot, Location::after_cnot, Location::after_phase};

}  // namespace

TEST(Oracle, Examples) {
    for (double p1 : {0.0, 0.3, 1.0}) {
        const double phi = 0.8;
        const DensityMatrix ad = oracle_density({ChannelKind::amplitude_damping, Location::before_cnot, p1, 0.4, phi});
        EXPECT_LT(std::abs(ad(0, 3) - 0.5 * std::sqrt(1 - p1) * std::polar(1.0, -phi)), 1e-15);
        EXPECT_NEAR(ad(0, 0).real(), 0.5 + 0.5 * p1, 1e-15);
    }
    EXPECT_LT(ref::max_diff(oracle_density({ChannelKind::depolarizing, Location::before_cnot, 0, 0, 1.7}),
                            ref::ghz(1.7)),
              1e-15);
    const DensityMatrix dep = oracle_density({ChannelKind::depolarizing, Location::after_cnot, 0.3, 0.6, 1.7});
    EXPECT_EQ(dep(1, 2), cplx(0));
}

TEST(Oracle, RadiusExamples) {
    EXPECT_NEAR(oracle_radius({ChannelKind::amplitude_damping, Location::after_cnot, 0.5, 0.5, 0.3}), std::sqrt(2.0),
                1e-15);
    for (ChannelKind k : kKinds) {
        for (Location w : kPlaces) {
            EXPECT_NEAR(oracle_radius({k, w, 0, 0, 1.1}), 2 * ref::kSqrt2, 1e-15);
        }
    }
    EXPECT_NEAR(oracle_radius({ChannelKind::dephasing, Location::before_cnot, 0.5, 0.0, 0.0}), std::sqrt(2.0), 1e-15);
}

TEST(OracleProperty, MatchesKrausSimulationOnFullGrid) {
    const double rates[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (ChannelKind k : kKinds) {
        for (Location w : kPlaces) {
            for (double p1 : rates) {
                for (double p2 : rates) {
                    for (int j = 0; j < 16; j++) {
                        const double phi = 2 * ref::kPi * j / 16;
                        const DensityMatrix a = oracle_density({k, w, p1, p2, phi});
                        const DensityMatrix b = noisy_prepare(phi, Placement{w, p1, p2}, k);
                        EXPECT_LE(a.mat().max_abs_diff(b.mat()), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(OracleProperty, RadiusConsistency) {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 300; i++) {
        const OracleQuery q{kKinds[i % 3], kPlaces[(i / 3) % 3], u(rng), u(rng), 2 * ref::kPi * u(rng)};
        EXPECT_NEAR(oracle_radius(q), witness_values(oracle_density(q)).radius, 1e-12);
        if (!(q.kind == ChannelKind::depolarizing && q.where == Location::before_cnot)) {
            OracleQuery shifted = q;
            shifted.phi += 1.234;
            EXPECT_NEAR(oracle_radius(q), oracle_radius(shifted), 1e-12);
        }
    }
}

TEST(OracleProperty, RadiusIsMonotoneInEqualRates) {
    for (ChannelKind k : kKinds) {
        for (Location w : kPlaces) {
            for (double phi : {0.0, 0.7, 2.0}) {
                double prev = oracle_radius({k, w, 0, 0, phi});
                EXPECT_NEAR(prev, 2 * ref::kSqrt2, 1e-15);
                for (int i = 1; i <= 100; i++) {
                    const double p = i / 100.0;
                    const double r = oracle_radius({k, w, p, p, phi});
                    EXPECT_LE(r, prev + 1e-15);
                    prev = r;
                }
                EXPECT_NEAR(prev, 0.0, 1e-15);
            }
        }
    }
}

TEST(Oracle, EllipseAxesExamples) {
    const EllipseAxes a = oracle_ellipse_axes(0, 0);
    EXPECT_NEAR(a.semi_major_along_diag, 2 * ref::kSqrt2, 1e-15);
    EXPECT_NEAR(a.semi_minor_anti_diag, 2 * ref::kSqrt2, 1e-15);
    const EllipseAxes b = oracle_ellipse_axes(0, 1);
    EXPECT_NEAR(b.semi_major_along_diag, 2 * ref::kSqrt2, 1e-15);
    EXPECT_NEAR(b.semi_minor_anti_diag, ref::kSqrt2, 1e-15);
    const EllipseAxes c = oracle_ellipse_axes(1, 0.3);
    EXPECT_NEAR(c.semi_major_along_diag, 0, 1e-15);
    EXPECT_NEAR(c.semi_minor_anti_diag, 0, 1e-15);
}

TEST(OracleProperty, EllipseAxesMatchWitnessSweep) {
    // Project the exact depolarizing-before sweep onto the diagonals.
    for (double p1 : {0.0, 0.2, 0.6}) {
        for (double p2 : {0.1, 0.5, 1.0}) {
            double diag = 0, anti = 0;
            for (int k = 0; k < 720; k++) {
                const double phi = 2 * ref::kPi * k / 720;
                const WitnessValue w =
                    witness_values(noisy_prepare(phi, Placement{Location::before_cnot, p1, p2}, ChannelKind::depolarizing));
                diag = std::max(diag, std::abs(w.w2 + w.w2p) / ref::kSqrt2);
                anti = std::max(anti, std::abs(w.w2 - w.w2p) / ref::kSqrt2);
            }
            const EllipseAxes ax = oracle_ellipse_axes(p1, p2);
            EXPECT_NEAR(ax.semi_major_along_diag, diag, 1e-12);
            EXPECT_NEAR(ax.semi_minor_anti_diag, anti, 1e-12);
        }
    }
}

TEST(Oracle, InferT1Examples) {
    EXPECT_NEAR(infer_t1(2 * ref::kSqrt2 * std::exp(-1.0), 1.0), 1.0, 1e-12);
    EXPECT_TRUE(std::isinf(infer_t1(2 * ref::kSqrt2, 1.0)));
    EXPECT_NEAR(infer_t1(ref::kSqrt2, 0.1), 0.1 / std::log(2.0), 1e-12);
    EXPECT_NEAR(infer_t1(ref::kSqrt2, 0.1), 0.14427, 1e-5);
    EXPECT_THROW(infer_t1(0.0, 0.1), InvalidArgument);
    EXPECT_THROW(infer_t1(3.0, 0.1), InvalidArgument);
    EXPECT_THROW(infer_t1(1.0, 0.0), InvalidArgument);
}

TEST(OracleProperty, AmplitudeDampingRadiusInvertsToT1) {
    for (double t1 : {0.05, 0.2, 1.0, 7.5}) {
        const double t = 0.1;
        const double p = 1 - std::exp(-t / t1);
        const double r = oracle_radius({ChannelKind::amplitude_damping, Location::after_cnot, p, p, 0.0});
        EXPECT_NEAR(r, 2 * std::sqrt(2 * (1 - p - p + p * p)), 1e-12);
        EXPECT_NEAR(std::log(2 * ref::kSqrt2 / r), t / t1, 1e-12);
        EXPECT_NEAR(infer_t1(r, t), t1, 1e-9 * t1);
    }
}

TEST(Oracle, T1T2Examples) {
    EXPECT_LT(ref::max_diff(t1t2_evolved_ghz(0.4, {0.0, 1, 1, 2, 3}), ref::ghz(0.4)), 1e-15);
    const T1T2Params same{0.3, 1.0, 0.8, 1.0, 0.8};
    EXPECT_NEAR(std::abs(t1t2_evolved_ghz(0.4, same)(0, 3)), 0.5 * std::exp(-2 * 0.3 / 0.8), 1e-15);
    const T1T2Params unit{1.0, 1.0, 1.0, 1.0, 1.0};
    EXPECT_NEAR(t1t2_evolved_ghz(0.4, unit)(3, 3).real(), 0.5 * std::exp(-2.0), 1e-15);
    EXPECT_NEAR(t1t2_radius(same), 4 * ref::kSqrt2 * 0.5 * std::exp(-2 * 0.3 / 0.8), 1e-15);
    EXPECT_THROW(t1t2_evolved_ghz(0.4, {0.1, 1.0, 3.0, 1.0, 1.0}), InvalidArgument);
}

TEST(OracleProperty, T1T2MatchesChannelSimulation) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(0.05, 1);
    for (int i = 0; i < 100; i++) {
        const T1T2Params p{u(rng), u(rng), 0, u(rng), 0};
        T1T2Params q = p;
        q.t2_q0 = 2 * q.t1_q0 * u(rng);
        q.t2_q1 = 2 * q.t1_q1 * u(rng);
        const double phi = 2 * ref::kPi * u(rng);
        const DensityMatrix sim = noisy_prepare(phi, Location::after_cnot, make_t1t2_channel(q.t, q.t1_q0, q.t2_q0),
                                                make_t1t2_channel(q.t, q.t1_q1, q.t2_q1));
        EXPECT_LT(t1t2_evolved_ghz(phi, q).mat().max_abs_diff(sim.mat()), 1e-12);
        EXPECT_NEAR(witness_values(sim).radius, t1t2_radius(q), 1e-12);
    }
}
