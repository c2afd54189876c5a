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

#ifndef PHASETRAJ_CLI_CONFIG_H
#define PHASETRAJ_CLI_CONFIG_H

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "phasetraj/error.h"
#include "phasetraj/sampler.h"
#include "phasetraj/trajectory.h"

namespace phasetraj::cli {

struct PhiRange {
    double start = 0.0;
    double end = 0.0;
    int count = 64;
    bool endpoint = false;
};

struct RunConfig {
    PhiRange phi;
    std::variant<Scenario, NoiseSchedule> model;
    ShotPlan plan = ShotPlan::exact_plan();
    int threads = 1;
    std::string output;  // empty means stdout

    std::vector<double> grid() const;
};

/// Thrown with every violation found, not just the first.
class ConfigError : public InvalidArgument {
   public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string> &violations() const { return violations_; }

   private:
    std::vector<std::string> violations_;
};

RunConfig parse_run_config(const nlohmann::json &doc);
RunConfig parse_run_config_text(const std::string &text);
RunConfig load_run_config(const std::string &path);

Scenario parse_scenario(const nlohmann::json &doc);
nlohmann::json scenario_to_json(const Scenario &scenario);

}  // namespace phasetraj::cli

#endif
