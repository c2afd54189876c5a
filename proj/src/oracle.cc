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

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phasetraj/error.h"
#include "phasetraj/witness.h"

namespace phasetraj {

namespace {

void check_rate(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
    }
}

/// Matrix with populations d0..d3, <00|rho|11> = c00_11 e^{-i phi} and
/// <01|rho|10> = c01_10 e^{-i phi}.
ComplexMatrix x_shaped(double d0, double d1, double d2, double d3, double c00_11, double c01_10, double phi) {
    ComplexMatrix m(4);
    m(0, 0) = d0;
    m(1, 1) = d1;
    m(2, 2) = d2;
    m(3, 3) = d3;
    m(0, 3) = std::polar(c00_11, -phi);
    m(3, 0) = std::polar(c00_11, phi);
    m(1, 2) = std::polar(c01_10, -phi);
    m(2, 1) = std::polar(c01_10, phi);
    return m;
}

void check_cptp(double t, double t1, double t2, const char *qubit) {
    if (!(t1 > 0.0) || !(t2 > 0.0)) {
        throw InvalidArgument(std::string("T1 and T2 of ") + qubit + " must be positive");
    }
    if (std::exp(-t / t2) > std::exp(-t / (2.0 * t1)) * (1.0 + kIdentityTolerance)) {
        throw InvalidArgument(std::string("not CPTP on ") + qubit + ": need e^{-t/T2} <= e^{-t/(2 T1)}");
    }
}

}  // namespace

DensityMatrix oracle_density(const OracleQuery &q) {
    check_rate(q.p1, "p1");
    check_rate(q.p2, "p2");
    const double p1 = q.p1;
    const double p2 = q.p2;
    if (q.where == Location::before_cnot) {
        switch (q.kind) {
            case ChannelKind::depolarizing: {
                const double pop = 0.5 - 0.25 * p2;
                const double inner = 0.25 * p2;
                const double coh = 0.5 - 0.5 * p1 - 0.25 * p2 + 0.25 * p1 * p2;
                const double excited = 0.25 * p2 - 0.25 * p1 * p2;
                return DensityMatrix(x_shaped(pop, inner, inner, pop, coh, excited, q.phi));
            }
            case ChannelKind::dephasing:
                return DensityMatrix(x_shaped(0.5, 0.0, 0.0, 0.5, 0.5 - 0.5 * p1, 0.0, q.phi));
            case ChannelKind::amplitude_damping:
                return DensityMatrix(
                    x_shaped(0.5 + 0.5 * p1, 0.0, 0.0, 0.5 - 0.5 * p1, 0.5 * std::sqrt(1.0 - p1), 0.0, q.phi));
            case ChannelKind::t1t2:
                break;
        }
    } else {
        switch (q.kind) {
            case ChannelKind::depolarizing: {
                const double pop = 0.5 - 0.25 * p1 - 0.25 * p2 + 0.25 * p1 * p2;
                const double inner = 0.25 * p1 + 0.25 * p2 - 0.25 * p1 * p2;
                const double coh = 0.5 - 0.5 * p1 - 0.5 * p2 + 0.5 * p1 * p2;
                return DensityMatrix(x_shaped(pop, inner, inner, pop, coh, 0.0, q.phi));
            }
            case ChannelKind::dephasing: {
                const double coh = 0.5 - 0.5 * p1 - 0.5 * p2 + 0.5 * p1 * p2;
                return DensityMatrix(x_shaped(0.5, 0.0, 0.0, 0.5, coh, 0.0, q.phi));
            }
            case ChannelKind::amplitude_damping: {
                const double keep = (1.0 - p1) * (1.0 - p2);
                return DensityMatrix(x_shaped(0.5 + 0.5 * p1 * p2, 0.5 * p1 - 0.5 * p1 * p2,
                                              0.5 * p2 - 0.5 * p1 * p2, 0.5 * keep, 0.5 * std::sqrt(keep), 0.0,
                                              q.phi));
            }
            case ChannelKind::t1t2:
                break;
        }
    }
    throw InvalidArgument("no rate-based closed form for t1t2; use t1t2_evolved_ghz");
}

double oracle_radius(const OracleQuery &q) {
    check_rate(q.p1, "p1");
    check_rate(q.p2, "p2");
    const double p1 = q.p1;
    const double p2 = q.p2;
    if (q.where == Location::before_cnot) {
        switch (q.kind) {
            case ChannelKind::depolarizing: {
                const EllipseAxes axes = oracle_ellipse_axes(p1, p2);
                // Diagonal coordinate follows sin(phi), anti-diagonal cos(phi).
                return std::hypot(axes.semi_major_along_diag * std::sin(q.phi),
                                  axes.semi_minor_anti_diag * std::cos(q.phi));
            }
            case ChannelKind::dephasing:
                return kQuantumBound * (1.0 - p1);
            case ChannelKind::amplitude_damping:
                return kQuantumBound * std::sqrt(1.0 - p1);
            case ChannelKind::t1t2:
                break;
        }
    } else {
        switch (q.kind) {
            case ChannelKind::depolarizing:
            case ChannelKind::dephasing:
                return kQuantumBound * (1.0 - p1) * (1.0 - p2);
            case ChannelKind::amplitude_damping:
                return 2.0 * std::sqrt(2.0 * (1.0 - p1) * (1.0 - p2));
            case ChannelKind::t1t2:
                break;
        }
    }
    throw InvalidArgument("no rate-based closed form for t1t2; use t1t2_radius");
}

EllipseAxes oracle_ellipse_axes(double p1, double p2) {
    check_rate(p1, "p1");
    check_rate(p2, "p2");
    const double q = 0.5 - 0.5 * p1 - 0.25 * p2 + 0.25 * p1 * p2;
    const double r = 0.25 * p2 * (1.0 - p1);
    const double scale = 4.0 * std::numbers::sqrt2;
    return {scale * (q + r), scale * q};
}

double infer_t1(double radius, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("gate time must be positive");
    }
    if (!(radius > 0.0) || radius > kQuantumBound * (1.0 + 1e-9)) {
        throw InvalidArgument("radius must be in (0, 2 sqrt2], got " + std::to_string(radius));
    }
    if (radius >= kQuantumBound) {
        return std::numeric_limits<double>::infinity();
    }
    return t / std::log(kQuantumBound / radius);
}

DensityMatrix t1t2_evolved_ghz(double phi, const T1T2Params &params) {
    const double t = params.t;
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("gate time must be finite and non-negative");
    }
    check_cptp(t, params.t1_q0, params.t2_q0, "qubit 0");
    check_cptp(t, params.t1_q1, params.t2_q1, "qubit 1");
    const double e1 = std::exp(-t / params.t1_q0);
    const double e2 = std::exp(-t / params.t1_q1);
    const double coh = 0.5 * std::exp(-t / params.t2_q0 - t / params.t2_q1);
    return DensityMatrix(x_shaped(1.0 - 0.5 * e1 - 0.5 * e2 + 0.5 * e1 * e2, 0.5 * e2 - 0.5 * e1 * e2,
                                  0.5 * e1 - 0.5 * e1 * e2, 0.5 * e1 * e2, coh, 0.0, phi));
}

double t1t2_radius(const T1T2Params &params) {
    return kQuantumBound * std::exp(-params.t / params.t2_q0 - params.t / params.t2_q1);
}

}  // namespace phasetraj
