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

#include "phasetraj/witness.h"

#include <gtest/gtest.h>

#include "phasetraj/states.h"
#include "support/reference.h"

using namespace phasetraj;

namespace {

/// Witnesses written out from reference Pauli expectations.
ref::M4 witness_operator(double xx, double xy, double yx, double yy) {
    ref::M4 out{};
    const std::pair<double, const char *> terms[] = {{xx, "XX"}, {xy, "XY"}, {yx, "YX"}, {yy, "YY"}};
    for (auto [w, name] : terms) {
        const ref::M4 p = ref::kron(ref::pauli(name[0]), ref::pauli(name[1]));
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) out[i][j] += w * p[i][j];
    }
    return out;
}

}  // namespace

TEST(Witness, PauliExpectationExamples) {
    EXPECT_NEAR(pauli_expectation(ghz_density(0.0), Pauli::X, Pauli::X), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(ghz_density(ref::kPi / 2), Pauli::Y, Pauli::X), 1.0, 1e-15);
    for (double theta : {0.2, 1.0, 2.9, -1.3}) {
        EXPECT_NEAR(pauli_expectation(build_rho_prime({0.5, 0.5, theta}), Pauli::X, Pauli::Y), -std::sin(theta),
                    1e-15);
    }
}

TEST(WitnessProperty, PauliExpectationAgreesWithReferenceTrace) {
    std::mt19937_64 rng(31);
    const Pauli ps[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (int i = 0; i < 50; i++) {
        const ref::M4 rho = ref::random_density(rng);
        const DensityMatrix m(ref::to_matrix(rho));
        for (Pauli a : ps) {
            for (Pauli b : ps) {
                const char name[] = {pauli_symbol(a), pauli_symbol(b)};
                EXPECT_NEAR(pauli_expectation(m, a, b), ref::expect(rho, std::string_view(name, 2)), 1e-14);
            }
        }
    }
}

TEST(Witness, Examples) {
    const WitnessValue g = witness_values(ghz_density(ref::kPi / 4));
    EXPECT_NEAR(g.m2, 2 * ref::kSqrt2, 1e-15);
    EXPECT_NEAR(g.w2, 2 * ref::kSqrt2, 1e-15);
    EXPECT_NEAR(g.m2p, 0, 1e-15);
    EXPECT_NEAR(g.w2p, 0, 1e-15);

    const WitnessValue r = witness_values(build_rho_prime({0.5, 0.5, ref::kPi / 2}));
    EXPECT_NEAR(r.m2, 0, 1e-15);
    EXPECT_NEAR(r.m2p, 0, 1e-15);
    EXPECT_NEAR(r.w2, 2, 1e-15);
    EXPECT_NEAR(r.w2p, 2, 1e-15);

    const WitnessValue z = witness_values(DensityMatrix::maximally_mixed());
    EXPECT_EQ(z.w2, 0);
    EXPECT_EQ(z.w2p, 0);
    EXPECT_EQ(z.m2, 0);
    EXPECT_EQ(z.m2p, 0);
}

TEST(Witness, AnalyticExamples) {
    const WitnessValue a = analytic_ghz_witness(ref::kPi / 4);
    EXPECT_NEAR(a.w2, 2 * ref::kSqrt2, 1e-15);
    EXPECT_NEAR(a.w2p, 0, 1e-15);
    const WitnessValue b = analytic_ghz_witness(0);
    EXPECT_NEAR(b.w2, 2, 1e-15);
    EXPECT_NEAR(b.w2p, -2, 1e-15);
    for (double phi = -3; phi < 7; phi += 0.37) {
        EXPECT_NEAR(analytic_ghz_witness(phi).radius, 2 * ref::kSqrt2, 1e-15);
    }
}

TEST(WitnessProperty, GhzEquivalenceOn64Points) {
    for (int k = 0; k < 64; k++) {
        const double phi = 2 * ref::kPi * k / 64;
        const WitnessValue w = witness_values(ghz_density(phi));
        const WitnessValue a = analytic_ghz_witness(phi);
        EXPECT_NEAR(w.w2, a.w2, 1e-12);
        EXPECT_NEAR(w.w2p, a.w2p, 1e-12);
        EXPECT_NEAR(w.m2, a.m2, 1e-12);
        EXPECT_NEAR(w.m2p, a.m2p, 1e-12);
        EXPECT_NEAR(w.m2, w.w2, 1e-12);
    }
}

TEST(WitnessProperty, MerminBlindWitnessVisible) {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0, 1);
    const ref::M4 w2_op = witness_operator(1, 0, 2, -1);
    const ref::M4 w2p_op = witness_operator(-1, 0, 2, 1);
    for (int i = 0; i < 200; i++) {
        const double a = u(rng);
        const double r = u(rng) * std::sqrt(a * (1 - a));
        const double theta = 2 * ref::kPi * u(rng);
        const WitnessValue w = witness_values(build_rho_prime({a, r, theta}));
        EXPECT_EQ(w.m2, 0.0);
        EXPECT_EQ(w.m2p, 0.0);
        EXPECT_NEAR(w.w2, 4 * r * std::sin(theta), 1e-12);
        EXPECT_NEAR(w.w2p, 4 * r * std::sin(theta), 1e-12);
        const ref::M4 rho = ref::rho_prime(a, r, theta);
        EXPECT_NEAR(w.w2, ref::trace(ref::mul(rho, w2_op)).real(), 1e-14);
        EXPECT_NEAR(w.w2p, ref::trace(ref::mul(rho, w2p_op)).real(), 1e-14);
    }
}

TEST(WitnessProperty, DiagonalStatesAreInvisible) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 50; i++) {
        cplx d[4];
        double total = 0;
        for (cplx &x : d) total += (x = u(rng)).real();
        for (cplx &x : d) x /= total;
        const WitnessValue w = witness_values(DensityMatrix(ComplexMatrix::diagonal(d)));
        EXPECT_EQ(w.w2, 0.0);
        EXPECT_EQ(w.w2p, 0.0);
        EXPECT_EQ(w.m2, 0.0);
        EXPECT_EQ(w.m2p, 0.0);
    }
}

TEST(WitnessProperty, RadiusAndOperatorNormBounds) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; i++) {
        const WitnessValue w = witness_values(DensityMatrix(ref::to_matrix(ref::random_density(rng))));
        EXPECT_NEAR(w.radius, std::hypot(w.w2, w.w2p), 1e-12);
        EXPECT_LE(std::abs(w.m2), 2 * ref::kSqrt2 + 1e-12);
        EXPECT_LE(std::abs(w.w2), 4 + 1e-12);
    }
}

TEST(Witness, Bounds) {
    EXPECT_EQ(kLocalRealismBound, 2.0);
    EXPECT_NEAR(kQuantumBound, 2 * ref::kSqrt2, 1e-15);
}
