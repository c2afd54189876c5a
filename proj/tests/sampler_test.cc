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

#include "phasetraj/sampler.h"

#include <gtest/gtest.h>

#include "phasetraj/error.h"
#include "phasetraj/states.h"
#include "support/reference.h"

using namespace phasetraj;

namespace {

/// Rotated diagonal via explicit H and S^dagger matrices.
std::array<double, 4> ref_probabilities(const ref::M4 &rho, char a, char b) {
    const double s = 1 / std::sqrt(2.0);
    const ref::M2 h{{{s, s}, {s, -s}}};
    const ref::M2 sdg{{{1, 0}, {0, ref::c(0, -1)}}};
    auto rot = [&](char p) -> ref::M2 {
        if (p == 'X') return h;
        if (p == 'Y') {
            ref::M2 m{};
            for (int i = 0; i < 2; i++)
                for (int j = 0; j < 2; j++)
                    for (int k = 0; k < 2; k++) m[i][j] += h[i][k] * sdg[k][j];
            return m;
        }
        return ref::pauli('I');
    };
    const ref::M4 u = ref::kron(rot(a), rot(b));
    const ref::M4 r = ref::mul(ref::mul(u, rho), ref::dagger(u));
    return {r[0][0].real(), r[1][1].real(), r[2][2].real(), r[3][3].real()};
}

}  // namespace

TEST(Sampler, PlanValidation) {
    EXPECT_NO_THROW(validate(ShotPlan{}));
    EXPECT_NO_THROW(validate(ShotPlan::exact_plan()));
    EXPECT_THROW(validate(ShotPlan{0, 5, 1, false}), InvalidArgument);
    EXPECT_THROW(validate(ShotPlan{1024, 0, 1, false}), InvalidArgument);
}

TEST(Sampler, ProbabilityExamples) {
    const auto a = measurement_probabilities(ghz_density(0), Pauli::X, Pauli::X);
    EXPECT_NEAR(a[0], 0.5, 1e-15);
    EXPECT_NEAR(a[1], 0.0, 1e-15);
    EXPECT_NEAR(a[2], 0.0, 1e-15);
    EXPECT_NEAR(a[3], 0.5, 1e-15);
    for (Pauli p : {Pauli::X, Pauli::Y}) {
        for (double v : measurement_probabilities(DensityMatrix::maximally_mixed(), p, Pauli::Y)) {
            EXPECT_NEAR(v, 0.25, 1e-15);
        }
    }
    const auto c = measurement_probabilities(ghz_density(ref::kPi / 2), Pauli::Y, Pauli::X);
    EXPECT_NEAR(c[0] + c[3], 1.0, 1e-15);
}

TEST(SamplerProperty, ProbabilitiesMatchReferenceAndParity) {
    std::mt19937_64 rng(61);
    const Pauli ps[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int i = 0; i < 50; i++) {
        const ref::M4 rho = ref::random_density(rng);
        const DensityMatrix m(ref::to_matrix(rho));
        for (Pauli a : ps) {
            for (Pauli b : ps) {
                const auto p = measurement_probabilities(m, a, b);
                const auto q = ref_probabilities(rho, pauli_symbol(a), pauli_symbol(b));
                double total = 0;
                for (int k = 0; k < 4; k++) {
                    EXPECT_NEAR(p[k], q[k], 1e-14);
                    total += p[k];
                }
                EXPECT_NEAR(total, 1.0, 1e-12);
                EXPECT_NEAR(p[0] - p[1] - p[2] + p[3], pauli_expectation(m, a, b), 1e-12);
            }
        }
    }
}

TEST(Sampler, CountsExamples) {
    const cplx ground[] = {1, 0, 0, 0};
    const CountsTable z = sample_counts(DensityMatrix(projector(ground)), Pauli::Z, Pauli::Z, 1000, 9);
    EXPECT_EQ(z.counts[0], 1000u);
    EXPECT_THROW(sample_counts(ghz_density(0), Pauli::X, Pauli::X, 0, 1), InvalidArgument);
    const CountsTable big = sample_counts(ghz_density(0), Pauli::X, Pauli::X, 1000000, 4);
    EXPECT_EQ(big.counts[1] + big.counts[2], 0u);
    EXPECT_EQ(big.total(), 1000000u);
}

TEST(Sampler, CountsAreDeterministic) {
    const DensityMatrix rho = ghz_density(0.77);
    const CountsTable a = sample_counts(rho, Pauli::Y, Pauli::X, 4096, 123);
    const CountsTable b = sample_counts(rho, Pauli::Y, Pauli::X, 4096, 123);
    const CountsTable c = sample_counts(rho, Pauli::Y, Pauli::X, 4096, 124);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_NE(a.counts, c.counts);
}

TEST(Sampler, SeedDerivationSeparatesCoordinates) {
    EXPECT_NE(derive_seed(1, {0, 1}), derive_seed(1, {1, 0}));
    EXPECT_NE(derive_seed(1, {0, 0}), derive_seed(2, {0, 0}));
    EXPECT_EQ(derive_seed(5, {3, 4, 2}), derive_seed(5, {3, 4, 2}));
    // Reference SplitMix64 output for state 0.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(SamplerProperty, ParityConvergesWithinThreeSigma) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 20; i++) {
        const DensityMatrix m(ref::to_matrix(ref::random_density(rng)));
        const int shots = 200000;
        const double e = pauli_expectation(m, Pauli::Y, Pauli::X);
        const CountsTable t = sample_counts(m, Pauli::Y, Pauli::X, shots, 1000 + i);
        const double sigma = std::sqrt((1 - e * e) / shots);
        EXPECT_LE(std::abs(t.parity() - e), 3 * sigma + 1e-12) << "trial " << i;
    }
}

TEST(Sampler, ExactPlanBypassesSampling) {
    const DensityMatrix rho = build_rho_prime({0.4, 0.3, 1.2});
    const WitnessEstimate e = estimate_witness(rho, ShotPlan::exact_plan());
    const WitnessValue w = witness_values(rho);
    EXPECT_EQ(e.w2_mean, w.w2);
    EXPECT_EQ(e.w2p_mean, w.w2p);
    EXPECT_EQ(e.w2_std, 0.0);
    EXPECT_EQ(e.w2p_std, 0.0);
}

TEST(Sampler, GhzEstimateWithinFourSigma) {
    const double bound = 4 * std::sqrt(6.0 / 1024);
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        const WitnessEstimate e = estimate_witness(ghz_density(ref::kPi / 4), ShotPlan{1024, 5, seed, false});
        EXPECT_LE(std::abs(e.w2_mean - 2 * ref::kSqrt2), bound);
        EXPECT_GE(e.w2_std, 0.0);
        const WitnessEstimate z = estimate_witness(DensityMatrix::maximally_mixed(), ShotPlan{1024, 5, seed, false});
        EXPECT_LE(std::abs(z.w2_mean), bound);
    }
}

TEST(Sampler, SingleRepetitionHasZeroSpread) {
    const WitnessEstimate e = estimate_witness(ghz_density(1.0), ShotPlan{256, 1, 3, false});
    EXPECT_EQ(e.w2_std, 0.0);
}

TEST(Sampler, EstimateIsDeterministic) {
    const DensityMatrix rho = ghz_density(2.2);
    const ShotPlan plan{1024, 5, 99, false};
    const WitnessEstimate a = estimate_witness(rho, plan, 7);
    const WitnessEstimate b = estimate_witness(rho, plan, 7);
    EXPECT_EQ(a.w2_mean, b.w2_mean);
    EXPECT_EQ(a.w2_std, b.w2_std);
    EXPECT_EQ(a.w2p_mean, b.w2p_mean);
    EXPECT_EQ(a.w2p_std, b.w2p_std);
    EXPECT_NE(a.w2_mean, estimate_witness(rho, plan, 8).w2_mean);
}

TEST(SamplerProperty, ConsistentAtMillionShots) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 20; i++) {
        const DensityMatrix m(ref::to_matrix(ref::random_density(rng)));
        const WitnessEstimate e = estimate_witness(m, ShotPlan{1000000, 1, static_cast<std::uint64_t>(i), false});
        const WitnessValue w = witness_values(m);
        EXPECT_LE(std::abs(e.w2_mean - w.w2), 0.01);
        EXPECT_LE(std::abs(e.w2p_mean - w.w2p), 0.01);
    }
}

TEST(Sampler, MerminEstimateTracksExactValue) {
    const DensityMatrix rho = ghz_density(ref::kPi / 4);
    const MerminEstimate m = estimate_mermin(rho, ShotPlan{100000, 3, 5, false});
    EXPECT_NEAR(m.m2_mean, 2 * ref::kSqrt2, 0.05);
    EXPECT_NEAR(m.m2p_mean, 0.0, 0.05);
    const MerminEstimate blind = estimate_mermin(build_rho_prime({0.5, 0.5, 1.0}), ShotPlan{100000, 3, 5, false});
    EXPECT_NEAR(blind.m2_mean, 0.0, 0.05);
}
