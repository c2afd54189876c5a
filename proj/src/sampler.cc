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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "phasetraj/error.h"
#include "phasetraj/states.h"

namespace phasetraj {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

ComplexMatrix basis_change(Pauli p) {
    switch (p) {
        case Pauli::X:
            return gate(GateName::H);
        case Pauli::Y:
            return gate(GateName::H) * gate(GateName::Sdg);
        case Pauli::Z:
        case Pauli::I:
            return ComplexMatrix::identity(2);
    }
    throw InvalidArgument("unknown Pauli");
}

double uniform01(std::mt19937_64 &gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

struct Moments {
    double mean = 0.0;
    double std = 0.0;
};

Moments moments(const std::vector<double> &xs) {
    Moments m;
    for (double x : xs) {
        m.mean += x;
    }
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - m.mean) * (x - m.mean);
        }
        m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return m;
}

enum Setting : std::uint64_t { kXX = 0, kYX = 1, kYY = 2, kXY = 3 };

double sampled_parity(const DensityMatrix &rho, Setting s, const ShotPlan &plan, std::uint64_t stream, int rep) {
    static constexpr Pauli q0[] = {Pauli::X, Pauli::Y, Pauli::Y, Pauli::X};
    static constexpr Pauli q1[] = {Pauli::X, Pauli::X, Pauli::Y, Pauli::Y};
    const std::uint64_t sub = derive_seed(plan.seed, {stream, static_cast<std::uint64_t>(rep), s});
    return sample_counts(rho, q0[s], q1[s], plan.shots, sub).parity();
}

}  // namespace

void validate(const ShotPlan &plan) {
    if (plan.exact) {
        return;
    }
    if (plan.shots < 1) {
        throw InvalidArgument("shots must be >= 1 (use the exact flag to bypass sampling)");
    }
    if (plan.repetitions < 1) {
        throw InvalidArgument("repetitions must be >= 1");
    }
}

double CountsTable::parity() const {
    const double n = static_cast<double>(total());
    const double even = static_cast<double>(counts[0] + counts[3]);
    const double odd = static_cast<double>(counts[1] + counts[2]);
    return (even - odd) / n;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> coords) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t c : coords) {
        h = splitmix64(h ^ splitmix64(c + kGolden));
    }
    return h;
}

std::array<double, 4> measurement_probabilities(const DensityMatrix &rho, Pauli q0, Pauli q1) {
    const ComplexMatrix u = tensor(basis_change(q0), basis_change(q1));
    const ComplexMatrix rotated = u * rho.mat() * u.adjoint();
    std::array<double, 4> probs{};
    double total = 0.0;
    for (int i = 0; i < 4; i++) {
        probs[i] = std::max(0.0, rotated(i, i).real());
        total += probs[i];
    }
    for (double &p : probs) {
        p /= total;
    }
    return probs;
}

CountsTable sample_counts(const DensityMatrix &rho, Pauli q0, Pauli q1, int shots, std::uint64_t stream_seed) {
    if (shots < 1) {
        throw InvalidArgument("shots must be >= 1, got " + std::to_string(shots));
    }
    const std::array<double, 4> probs = measurement_probabilities(rho, q0, q1);
    std::array<double, 3> cumulative{};
    double acc = 0.0;
    for (int i = 0; i < 3; i++) {
        acc += probs[i];
        cumulative[i] = acc;
    }
    int last = 3;
    while (last > 0 && probs[last] == 0.0) {
        last--;
    }

    std::mt19937_64 gen(stream_seed);
    CountsTable table;
    for (int s = 0; s < shots; s++) {
        const double u = uniform01(gen);
        int outcome = last;
        for (int i = 0; i < last; i++) {
            if (u < cumulative[i]) {
                outcome = i;
                break;
            }
        }
        table.counts[outcome]++;
    }
    return table;
}

WitnessEstimate estimate_witness(const DensityMatrix &rho, const ShotPlan &plan, std::uint64_t stream) {
    validate(plan);
    WitnessEstimate est;
    est.plan = plan;
    if (plan.exact) {
        const WitnessValue w = witness_values(rho);
        est.w2_mean = w.w2;
        est.w2p_mean = w.w2p;
        return est;
    }
    std::vector<double> w2(plan.repetitions);
    std::vector<double> w2p(plan.repetitions);
    for (int rep = 0; rep < plan.repetitions; rep++) {
        const double xx = sampled_parity(rho, kXX, plan, stream, rep);
        const double yx = sampled_parity(rho, kYX, plan, stream, rep);
        const double yy = sampled_parity(rho, kYY, plan, stream, rep);
        w2[rep] = xx + 2.0 * yx - yy;
        w2p[rep] = -xx + 2.0 * yx + yy;
    }
    const Moments a = moments(w2);
    const Moments b = moments(w2p);
    est.w2_mean = a.mean;
    est.w2_std = a.std;
    est.w2p_mean = b.mean;
    est.w2p_std = b.std;
    return est;
}

MerminEstimate estimate_mermin(const DensityMatrix &rho, const ShotPlan &plan, std::uint64_t stream) {
    validate(plan);
    MerminEstimate est;
    est.plan = plan;
    if (plan.exact) {
        const WitnessValue w = witness_values(rho);
        est.m2_mean = w.m2;
        est.m2p_mean = w.m2p;
        return est;
    }
    std::vector<double> m2(plan.repetitions);
    std::vector<double> m2p(plan.repetitions);
    for (int rep = 0; rep < plan.repetitions; rep++) {
        const double xx = sampled_parity(rho, kXX, plan, stream, rep);
        const double yx = sampled_parity(rho, kYX, plan, stream, rep);
        const double yy = sampled_parity(rho, kYY, plan, stream, rep);
        const double xy = sampled_parity(rho, kXY, plan, stream, rep);
        m2[rep] = xx + xy + yx - yy;
        m2p[rep] = -xx + xy + yx + yy;
    }
    const Moments a = moments(m2);
    const Moments b = moments(m2p);
    est.m2_mean = a.mean;
    est.m2_std = a.std;
    est.m2p_mean = b.mean;
    est.m2p_std = b.std;
    return est;
}

}  // namespace phasetraj
