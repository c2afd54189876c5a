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

#include "phasetraj/cli/config.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace phasetraj::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const std::string &s : items) {
        out += "\n  " + s;
    }
    return out;
}

/// Collects violations while walking a document.
class Checker {
   public:
    std::vector<std::string> violations;

    void fail(const std::string &path, const std::string &message) { violations.push_back(path + ": " + message); }

    bool object(const json &node, const std::string &path, const std::set<std::string> &allowed,
                const std::set<std::string> &required) {
        if (!node.is_object()) {
            fail(path, "expected an object");
            return false;
        }
        for (const auto &item : node.items()) {
            if (!allowed.contains(item.key())) {
                fail(path + "/" + item.key(), "unknown key");
            }
        }
        bool ok = true;
        for (const std::string &key : required) {
            if (!node.contains(key)) {
                fail(path + "/" + key, "required key is missing");
                ok = false;
            }
        }
        return ok;
    }

    double number(const json &node, const std::string &key, const std::string &path, double fallback,
                  double lo = -std::numeric_limits<double>::infinity(),
                  double hi = std::numeric_limits<double>::infinity()) {
        if (!node.contains(key)) {
            return fallback;
        }
        const json &v = node.at(key);
        if (!v.is_number()) {
            fail(path + "/" + key, "expected a number");
            return fallback;
        }
        const double d = v.get<double>();
        if (!(d >= lo && d <= hi)) {
            fail(path + "/" + key, "value " + std::to_string(d) + " is outside [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
            return fallback;
        }
        return d;
    }

    long long integer(const json &node, const std::string &key, const std::string &path, long long fallback,
                      long long lo, long long hi) {
        if (!node.contains(key)) {
            return fallback;
        }
        const json &v = node.at(key);
        if (!v.is_number_integer()) {
            fail(path + "/" + key, "expected an integer");
            return fallback;
        }
        const long long i = v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(hi)
                                ? hi + 1
                                : v.get<long long>();
        if (i < lo || i > hi) {
            fail(path + "/" + key, "value is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            return fallback;
        }
        return i;
    }

    std::string text(const json &node, const std::string &key, const std::string &path,
                     const std::set<std::string> &choices) {
        if (!node.contains(key)) {
            return "";
        }
        const json &v = node.at(key);
        if (!v.is_string()) {
            fail(path + "/" + key, "expected a string");
            return "";
        }
        const std::string s = v.get<std::string>();
        if (!choices.empty() && !choices.contains(s)) {
            std::string list;
            for (const std::string &c : choices) {
                list += (list.empty() ? "" : ", ") + c;
            }
            fail(path + "/" + key, "'" + s + "' is not one of " + list);
            return "";
        }
        return s;
    }

    std::optional<Scenario> scenario(const json &node, const std::string &path) {
        if (!node.is_object() || !node.contains("type")) {
            fail(path, node.is_object() ? "scenario needs a 'type'" : "expected an object");
            return std::nullopt;
        }
        const size_t before = violations.size();
        const std::string type =
            text(node, "type", path, {"noiseless", "channel", "t1t2", "rho_prime", "dissipative"});
        std::optional<Scenario> out;
        if (type == "noiseless") {
            object(node, path, {"type"}, {});
            out = NoiselessScenario{};
        } else if (type == "channel") {
            object(node, path, {"type", "kind", "placement", "p1", "p2"}, {"kind", "placement"});
            ChannelScenario c;
            const std::string kind = text(node, "kind", path, {"depolarizing", "dephasing", "amplitude_damping"});
            const std::string where = text(node, "placement", path, {"before_cnot", "after_cnot", "after_phase"});
            if (!kind.empty()) c.kind = parse_channel_kind(kind);
            if (!where.empty()) c.placement.where = parse_location(where);
            c.placement.p1 = number(node, "p1", path, 0.0, 0.0, 1.0);
            c.placement.p2 = number(node, "p2", path, 0.0, 0.0, 1.0);
            out = c;
        } else if (type == "t1t2") {
            object(node, path, {"type", "t", "T1_q0", "T2_q0", "T1_q1", "T2_q1"},
                   {"t", "T1_q0", "T2_q0", "T1_q1", "T2_q1"});
            const double inf = std::numeric_limits<double>::infinity();
            T1T2Params p;
            p.t = number(node, "t", path, 0.0, 0.0, inf);
            p.t1_q0 = number(node, "T1_q0", path, 1.0, 0.0, inf);
            p.t2_q0 = number(node, "T2_q0", path, 1.0, 0.0, inf);
            p.t1_q1 = number(node, "T1_q1", path, 1.0, 0.0, inf);
            p.t2_q1 = number(node, "T2_q1", path, 1.0, 0.0, inf);
            out = T1T2Scenario{p};
        } else if (type == "rho_prime") {
            object(node, path, {"type", "a", "r"}, {"a", "r"});
            RhoPrimeScenario s;
            s.a = number(node, "a", path, 0.5, 0.0, 1.0);
            s.r = number(node, "r", path, 0.0, 0.0, 0.5);
            out = s;
        } else if (type == "dissipative") {
            object(node, path, {"type", "gamma0_t", "gamma1_t"}, {"gamma0_t", "gamma1_t"});
            const double inf = std::numeric_limits<double>::infinity();
            DissipationParams d;
            d.gamma0_t = number(node, "gamma0_t", path, 0.0, 0.0, inf);
            d.gamma1_t = number(node, "gamma1_t", path, 0.0, 0.0, inf);
            out = DissipativeScenario{d};
        }
        if (violations.size() != before || !out) {
            return std::nullopt;
        }
        try {
            validate(*out);
        } catch (const std::invalid_argument &e) {
            fail(path, e.what());
            return std::nullopt;
        }
        return out;
    }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : InvalidArgument("invalid run configuration:" + join(violations)), violations_(std::move(violations)) {}

std::vector<double> RunConfig::grid() const {
    return phi_grid(phi.start, phi.end, phi.count, phi.endpoint);
}

Scenario parse_scenario(const json &doc) {
    Checker check;
    std::optional<Scenario> s = check.scenario(doc, "");
    if (!s) {
        throw ConfigError(check.violations);
    }
    return *s;
}

RunConfig parse_run_config(const json &doc) {
    Checker check;
    RunConfig cfg;
    if (!check.object(doc, "", {"phi", "scenario", "schedule", "sampling", "seed", "threads", "output"}, {"phi"})) {
        if (!doc.is_object()) {
            throw ConfigError(check.violations);
        }
    }

    if (doc.contains("phi") && check.object(doc["phi"], "/phi", {"start", "end", "count", "endpoint"}, {"end"})) {
        const json &phi = doc["phi"];
        cfg.phi.start = check.number(phi, "start", "/phi", 0.0);
        cfg.phi.end = check.number(phi, "end", "/phi", 0.0);
        cfg.phi.count = static_cast<int>(check.integer(phi, "count", "/phi", 64, 1, 1000000));
        if (phi.contains("endpoint")) {
            if (phi["endpoint"].is_boolean()) {
                cfg.phi.endpoint = phi["endpoint"].get<bool>();
            } else {
                check.fail("/phi/endpoint", "expected a boolean");
            }
        }
        if (!(cfg.phi.end > cfg.phi.start)) {
            check.fail("/phi", "end must be greater than start");
        }
    }

    const bool has_scenario = doc.contains("scenario");
    const bool has_schedule = doc.contains("schedule");
    if (has_scenario == has_schedule) {
        check.fail("", "exactly one of 'scenario' or 'schedule' is required");
    } else if (has_scenario) {
        if (auto s = check.scenario(doc["scenario"], "/scenario")) {
            cfg.model = *s;
        }
    } else {
        const json &list = doc["schedule"];
        NoiseSchedule schedule;
        bool ok = list.is_array() && !list.empty();
        if (!ok) {
            check.fail("/schedule", "expected a non-empty array");
        } else {
            for (size_t i = 0; i < list.size(); i++) {
                const std::string path = "/schedule/" + std::to_string(i);
                if (!check.object(list[i], path, {"phi_start", "phi_end", "scenario"},
                                  {"phi_start", "phi_end", "scenario"})) {
                    ok = false;
                    continue;
                }
                ScheduleSegment seg;
                seg.phi_start = check.number(list[i], "phi_start", path, 0.0);
                seg.phi_end = check.number(list[i], "phi_end", path, 0.0);
                if (auto s = check.scenario(list[i]["scenario"], path + "/scenario")) {
                    seg.scenario = *s;
                } else {
                    ok = false;
                }
                schedule.segments.push_back(seg);
            }
        }
        if (ok) {
            try {
                schedule.validate();
                if (schedule.segments.front().phi_start > cfg.phi.start + 1e-12 ||
                    schedule.segments.back().phi_end < cfg.phi.end - 1e-12) {
                    check.fail("/schedule", "schedule does not cover the phi range");
                }
            } catch (const std::invalid_argument &e) {
                check.fail("/schedule", e.what());
            }
        }
        cfg.model = schedule;
    }

    if (doc.contains("sampling") &&
        check.object(doc["sampling"], "/sampling", {"mode", "shots", "repetitions"}, {"mode"})) {
        const json &s = doc["sampling"];
        const std::string mode = check.text(s, "mode", "/sampling", {"exact", "sampled"});
        if (mode == "sampled") {
            cfg.plan = ShotPlan{};
            cfg.plan.shots = static_cast<int>(check.integer(s, "shots", "/sampling", 1024, 1, 100000000));
            cfg.plan.repetitions = static_cast<int>(check.integer(s, "repetitions", "/sampling", 5, 1, 100000));
        } else if (mode == "exact" && (s.contains("shots") || s.contains("repetitions"))) {
            check.fail("/sampling", "shots and repetitions are only allowed in sampled mode");
        }
    }
    if (doc.contains("seed")) {
        if (doc["seed"].is_number_unsigned() || (doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0)) {
            cfg.plan.seed = doc["seed"].get<std::uint64_t>();
        } else {
            check.fail("/seed", "expected a non-negative integer");
        }
    }
    cfg.threads = static_cast<int>(check.integer(doc, "threads", "", 1, 1, 256));
    if (doc.contains("output")) {
        if (doc["output"].is_string()) {
            cfg.output = doc["output"].get<std::string>();
        } else {
            check.fail("/output", "expected a string");
        }
    }
    if (!check.violations.empty()) {
        throw ConfigError(check.violations);
    }
    return cfg;
}

RunConfig parse_run_config_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    return parse_run_config(doc);
}

RunConfig load_run_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config_text(ss.str());
}

json scenario_to_json(const Scenario &scenario) {
    return std::visit(
        [](const auto &s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, NoiselessScenario>) {
                return {{"type", "noiseless"}};
            } else if constexpr (std::is_same_v<T, ChannelScenario>) {
                return {{"type", "channel"},
                        {"kind", std::string(to_string(s.kind))},
                        {"placement", std::string(to_string(s.placement.where))},
                        {"p1", s.placement.p1},
                        {"p2", s.placement.p2}};
            } else if constexpr (std::is_same_v<T, T1T2Scenario>) {
                return {{"type", "t1t2"},          {"t", s.params.t},         {"T1_q0", s.params.t1_q0},
                        {"T2_q0", s.params.t2_q0}, {"T1_q1", s.params.t1_q1}, {"T2_q1", s.params.t2_q1}};
            } else if constexpr (std::is_same_v<T, RhoPrimeScenario>) {
                return {{"type", "rho_prime"}, {"a", s.a}, {"r", s.r}};
            } else {
                return {{"type", "dissipative"}, {"gamma0_t", s.params.gamma0_t}, {"gamma1_t", s.params.gamma1_t}};
            }
        },
        scenario);
}

}  // namespace phasetraj::cli
