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

#ifndef PHASETRAJ_SAMPLER_H
#define PHASETRAJ_SAMPLER_H

#include <array>
#include <cstdint>
#include <initializer_list>

#include "phasetraj/qmat.h"
#include "phasetraj/witness.h"

namespace phasetraj {

/// Shots per measurement setting and repetitions per data point. With
/// `exact` set, estimates are the exact expectation values and no sampling
/// takes place.
struct ShotPlan {
    int shots = 1024;
    int repetitions = 5;
    std::uint64_t seed = 0;
    bool exact = false;

    static ShotPlan exact_plan() { return ShotPlan{0, 0, 0, true}; }
};

/// Throws InvalidArgument unless shots >= 1 and repetitions >= 1
/// (exact plans are always valid).
void validate(const ShotPlan &plan);

/// Outcome counts indexed by the bit string q0 q1: 00, 01, 10, 11.
struct CountsTable {
    std::array<std::uint64_t, 4> counts{};

    std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    /// (n00 - n01 - n10 + n11) / total
    double parity() const;
};

// Sampling streams: every (plan seed, point, repetition, setting) tuple maps
// to its own std::mt19937_64 seeded with a SplitMix64 hash of the tuple. Shot
// outcomes use the top 53 bits of each draw as a uniform double in [0, 1) and
// inverse-CDF lookup over the four outcomes. Both pieces are fully specified,
// so counts are identical on every platform and independent of the order in
// which streams are evaluated.

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Hashes a seed and a sequence of stream coordinates into one sub-seed.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> coords);

/// Outcome probabilities after rotating each qubit into the eigenbasis of
/// its Pauli (X: H, Y: S^dagger then H, Z/I: nothing) and measuring in Z.
std::array<double, 4> measurement_probabilities(const DensityMatrix &rho, Pauli q0, Pauli q1);

/// Multinomial draw of `shots` outcomes. Throws InvalidArgument for shots < 1.
CountsTable sample_counts(const DensityMatrix &rho, Pauli q0, Pauli q1, int shots, std::uint64_t stream_seed);

struct WitnessEstimate {
    double w2_mean = 0.0;
    double w2_std = 0.0;
    double w2p_mean = 0.0;
    double w2p_std = 0.0;
    ShotPlan plan;
};

/// Shot-based <W2>, <W2'> from the XX, YX and YY settings. Each repetition
/// samples the three settings independently; mean and n-1 standard
/// deviation are taken over repetitions. `stream` distinguishes data points
/// that share a plan (e.g. the index of phi in a sweep).
WitnessEstimate estimate_witness(const DensityMatrix &rho, const ShotPlan &plan, std::uint64_t stream = 0);

struct MerminEstimate {
    double m2_mean = 0.0;
    double m2_std = 0.0;
    double m2p_mean = 0.0;
    double m2p_std = 0.0;
    ShotPlan plan;
};

/// Same protocol for <M2>, <M2'>, which also needs the XY setting.
MerminEstimate estimate_mermin(const DensityMatrix &rho, const ShotPlan &plan, std::uint64_t stream = 0);

}  // namespace phasetraj

#endif
