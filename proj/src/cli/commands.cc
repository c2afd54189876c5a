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

#include "phasetraj/cli/commands.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phasetraj/cli/config.h"
#include "phasetraj/cli/csv.h"
#include "phasetraj/cli/report.h"
#include "phasetraj/cli/svg.h"
#include "phasetraj/error.h"
#include "phasetraj/oracle.h"
#include "phasetraj/witness.h"

namespace phasetraj::cli {

using nlohmann::json;

namespace {

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file(path, content);
    }
}

double parse_real(const std::string &text) {
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw InvalidArgument("cannot parse '" + text + "' as a number");
    }
    return v;
}

struct Options {
    std::optional<std::uint64_t> seed;

    std::string config;
    std::string output;
    int threads = 0;

    std::string kind;
    std::string placement;
    double p1 = 0.0;
    double p2 = 0.0;
    std::string phi;

    std::string input;
    double gate_time = kDefaultGateTime;
    std::string svg;
    std::string style = "portrait";
};

int cmd_sweep(const Options &o, std::ostream &out) {
    RunConfig cfg = load_run_config(o.config);
    if (o.seed) cfg.plan.seed = *o.seed;
    if (o.threads > 0) cfg.threads = o.threads;
    if (!o.output.empty()) cfg.output = o.output;
    const std::vector<double> grid = cfg.grid();
    const Trajectory traj = std::visit(
        [&](const auto &model) { return sweep(grid, model, cfg.plan, cfg.threads); }, cfg.model);
    emit(cfg.output, to_csv(traj), out);
    return kExitOk;
}

int cmd_oracle(const Options &o, std::ostream &out) {
    OracleQuery q;
    q.kind = parse_channel_kind(o.kind);
    q.where = parse_location(o.placement);
    q.p1 = o.p1;
    q.p2 = o.p2;
    q.phi = parse_angle(o.phi);
    const DensityMatrix rho = oracle_density(q);
    const WitnessValue w = witness_values(rho);
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < 4; i++) {
        json rr = json::array();
        json ii = json::array();
        for (int j = 0; j < 4; j++) {
            rr.push_back(rho(i, j).real());
            ii.push_back(rho(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    json doc = {{"kind", std::string(to_string(q.kind))},
                {"placement", std::string(to_string(q.where))},
                {"p1", q.p1},
                {"p2", q.p2},
                {"phi", q.phi},
                {"rho", {{"real", re}, {"imag", im}}},
                {"w2", w.w2},
                {"w2p", w.w2p},
                {"radius", oracle_radius(q)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_analyze(const Options &o, std::ostream &out) {
    const Trajectory traj = read_csv_file(o.input);
    const Analysis a = analyze(traj, o.gate_time);
    emit(o.output, to_json(a).dump(2) + "\n", out);
    if (!o.svg.empty()) {
        write_file(o.svg, render_svg(traj, PlotStyle::portrait));
    }
    return kExitOk;
}

int cmd_plot(const Options &o) {
    const PlotStyle style = parse_plot_style(o.style);
    const Trajectory traj = read_csv_file(o.input);
    write_file(o.svg, render_svg(traj, style));
    return kExitOk;
}

}  // namespace

double parse_angle(const std::string &text) {
    constexpr std::string_view kDeg = "deg";
    if (text.size() > kDeg.size() && text.ends_with(kDeg)) {
        return parse_real(text.substr(0, text.size() - kDeg.size())) * std::numbers::pi / 180.0;
    }
    return parse_real(text);
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Phase trajectories of two-qubit GHZ-like states under noise", "phasetraj"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for every random draw");

    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Run a phase sweep and write a trajectory CSV");
    sweep_cmd->add_option("--config", o.config, "Run configuration (JSON)")->required();
    sweep_cmd->add_option("--output", o.output, "CSV path, overrides the config");
    sweep_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    CLI::App *oracle_cmd = app.add_subcommand("oracle", "Print a closed-form noisy state and its witness values");
    oracle_cmd->add_option("--kind", o.kind, "depolarizing, dephasing or amplitude_damping")->required();
    oracle_cmd->add_option("--placement", o.placement, "before_cnot, after_cnot or after_phase")->required();
    oracle_cmd->add_option("--p1", o.p1, "Rate on qubit 0");
    oracle_cmd->add_option("--p2", o.p2, "Rate on qubit 1");
    oracle_cmd->add_option("--phi", o.phi, "Phase in radians, or degrees with a 'deg' suffix")->required();

    CLI::App *analyze_cmd = app.add_subcommand("analyze", "Fit and classify a trajectory CSV");
    analyze_cmd->add_option("csv", o.input, "Trajectory CSV")->required();
    analyze_cmd->add_option("--gate-time", o.gate_time, "Gate time used for T1 inference");
    analyze_cmd->add_option("--svg", o.svg, "Also write a portrait plot");
    analyze_cmd->add_option("--output", o.output, "Report path (default stdout)");

    CLI::App *plot_cmd = app.add_subcommand("plot", "Render a trajectory CSV as SVG");
    plot_cmd->add_option("csv", o.input, "Trajectory CSV")->required();
    plot_cmd->add_option("svg", o.svg, "Output SVG")->required();
    plot_cmd->add_option("--style", o.style, "portrait or phase");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        if (e.get_exit_code() == 0) {
            return kExitOk;
        }
        return kExitInvalid;
    }

    try {
        if (sweep_cmd->parsed()) return cmd_sweep(o, out);
        if (oracle_cmd->parsed()) return cmd_oracle(o, out);
        if (analyze_cmd->parsed()) return cmd_analyze(o, out);
        if (plot_cmd->parsed()) return cmd_plot(o);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const DegenerateFit &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace phasetraj::cli
