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

#include "phasetraj/cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "phasetraj/error.h"
#include "phasetraj/witness.h"

namespace phasetraj::cli {

namespace {

constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

struct Axis {
    double lo, hi, px_lo, px_hi;
    double operator()(double v) const { return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo); }
};

double w_extent(const Trajectory &traj) {
    double m = 3.2;
    for (const TrajectoryPoint &p : traj.points) {
        m = std::max({m, std::abs(p.w2) + p.w2_std.value_or(0.0), std::abs(p.w2p) + p.w2p_std.value_or(0.0)});
    }
    return std::ceil(m * 1.05 * 2.0) / 2.0;
}

void error_bar(std::string &s, double x1, double y1, double x2, double y2) {
    s += "<line class=\"err\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
         "\"/>\n";
}

void text(std::string &s, double x, double y, const std::string &anchor, const std::string &body) {
    s += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + body + "</text>\n";
}

std::string header(int width, int height) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
         "\">\n";
    s += "<style>"
         "text{font-family:sans-serif;font-size:12px}"
         ".axis{stroke:#000;stroke-width:1}"
         ".grid{stroke:#ddd;stroke-width:0.5}"
         ".bound{fill:none;stroke:#888;stroke-dasharray:4 3}"
         ".pt{fill:#1f77b4}"
         ".pt2{fill:#d62728}"
         ".err{stroke:#555;stroke-width:0.7}"
         "</style>\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    return s;
}

std::string portrait(const Trajectory &traj) {
    constexpr int kSize = 640;
    const double e = w_extent(traj);
    const Axis x{-e, e, kMargin, kSize - kMargin};
    const Axis y{-e, e, kSize - kMargin, kMargin};
    std::string s = header(kSize, kSize);
    for (double t = std::ceil(-e); t <= e; t += 1.0) {
        s += "<line class=\"grid\" x1=\"" + num(x(t)) + "\" y1=\"" + num(y(-e)) + "\" x2=\"" + num(x(t)) +
             "\" y2=\"" + num(y(e)) + "\"/>\n";
        s += "<line class=\"grid\" x1=\"" + num(x(-e)) + "\" y1=\"" + num(y(t)) + "\" x2=\"" + num(x(e)) +
             "\" y2=\"" + num(y(t)) + "\"/>\n";
        text(s, x(t), y(-e) + 16, "middle", num(t).substr(0, num(t).find('.')));
        text(s, x(-e) - 6, y(t) + 4, "end", num(t).substr(0, num(t).find('.')));
    }
    s += "<line class=\"axis\" x1=\"" + num(x(-e)) + "\" y1=\"" + num(y(0)) + "\" x2=\"" + num(x(e)) + "\" y2=\"" +
         num(y(0)) + "\"/>\n";
    s += "<line class=\"axis\" x1=\"" + num(x(0)) + "\" y1=\"" + num(y(-e)) + "\" x2=\"" + num(x(0)) + "\" y2=\"" +
         num(y(e)) + "\"/>\n";
    const double px_per_unit = (kSize - 2 * kMargin) / (2 * e);
    for (double bound : {kLocalRealismBound, kQuantumBound}) {
        s += "<circle class=\"bound\" cx=\"" + num(x(0)) + "\" cy=\"" + num(y(0)) + "\" r=\"" +
             num(bound * px_per_unit) + "\"/>\n";
    }
    text(s, kSize / 2.0, kSize - 12, "middle", "&lt;W2&gt;");
    text(s, 16, kSize / 2.0, "middle", "&lt;W2&apos;&gt;");
    for (const TrajectoryPoint &p : traj.points) {
        const double sx = p.w2_std.value_or(0.0);
        const double sy = p.w2p_std.value_or(0.0);
        if (sx > 0.0) error_bar(s, x(p.w2 - sx), y(p.w2p), x(p.w2 + sx), y(p.w2p));
        if (sy > 0.0) error_bar(s, x(p.w2), y(p.w2p - sy), x(p.w2), y(p.w2p + sy));
        s += "<circle class=\"pt\" cx=\"" + num(x(p.w2)) + "\" cy=\"" + num(y(p.w2p)) + "\" r=\"2.5\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string phase(const Trajectory &traj) {
    constexpr int kWidth = 800;
    constexpr int kHeight = 480;
    const double e = w_extent(traj);
    double lo = traj.points.front().phi;
    double hi = traj.points.back().phi;
    if (!(hi > lo)) {
        hi = lo + 1.0;
    }
    const Axis x{lo, hi, kMargin, kWidth - kMargin};
    const Axis y{-e, e, kHeight - kMargin, kMargin};
    std::string s = header(kWidth, kHeight);
    for (double t = std::ceil(-e); t <= e; t += 1.0) {
        s += "<line class=\"grid\" x1=\"" + num(x(lo)) + "\" y1=\"" + num(y(t)) + "\" x2=\"" + num(x(hi)) +
             "\" y2=\"" + num(y(t)) + "\"/>\n";
        text(s, x(lo) - 6, y(t) + 4, "end", num(t).substr(0, num(t).find('.')));
    }
    const double half_pi = std::numbers::pi / 2.0;
    for (double t = std::ceil(lo / half_pi) * half_pi; t <= hi + 1e-12; t += half_pi) {
        s += "<line class=\"grid\" x1=\"" + num(x(t)) + "\" y1=\"" + num(y(-e)) + "\" x2=\"" + num(x(t)) +
             "\" y2=\"" + num(y(e)) + "\"/>\n";
        text(s, x(t), y(-e) + 16, "middle", num(t));
    }
    s += "<line class=\"axis\" x1=\"" + num(x(lo)) + "\" y1=\"" + num(y(0)) + "\" x2=\"" + num(x(hi)) + "\" y2=\"" +
         num(y(0)) + "\"/>\n";
    text(s, kWidth / 2.0, kHeight - 12, "middle", "phi (rad)");
    text(s, kWidth - kMargin, kMargin - 20, "end", "&lt;W2&gt; blue, &lt;W2&apos;&gt; red");
    for (const TrajectoryPoint &p : traj.points) {
        const double s1 = p.w2_std.value_or(0.0);
        const double s2 = p.w2p_std.value_or(0.0);
        if (s1 > 0.0) error_bar(s, x(p.phi), y(p.w2 - s1), x(p.phi), y(p.w2 + s1));
        if (s2 > 0.0) error_bar(s, x(p.phi), y(p.w2p - s2), x(p.phi), y(p.w2p + s2));
        s += "<circle class=\"pt\" cx=\"" + num(x(p.phi)) + "\" cy=\"" + num(y(p.w2)) + "\" r=\"2.5\"/>\n";
        s += "<circle class=\"pt2\" cx=\"" + num(x(p.phi)) + "\" cy=\"" + num(y(p.w2p)) + "\" r=\"2.5\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace

PlotStyle parse_plot_style(std::string_view text) {
    if (text == "portrait") return PlotStyle::portrait;
    if (text == "phase") return PlotStyle::phase;
    throw InvalidArgument("unknown plot style '" + std::string(text) + "' (expected portrait or phase)");
}

std::string render_svg(const Trajectory &traj, PlotStyle style) {
    if (traj.points.empty()) {
        throw InvalidArgument("cannot plot an empty trajectory");
    }
    return style == PlotStyle::portrait ? portrait(traj) : phase(traj);
}

}  // namespace phasetraj::cli
