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

#ifndef PHASETRAJ_CLI_CSV_H
#define PHASETRAJ_CLI_CSV_H

#include <iosfwd>
#include <string>
#include <string_view>

#include "phasetraj/trajectory.h"

namespace phasetraj::cli {

inline constexpr std::string_view kCsvHeader = "phi_rad,w2_mean,w2_std,w2p_mean,w2p_std,shots,reps";

/// Shortest text that parses back to the same double (17 significant digits).
std::string format_double(double value);

void write_csv(std::ostream &out, const Trajectory &traj);
std::string to_csv(const Trajectory &traj);

/// Reads a trajectory CSV. The std, shots and reps columns may be omitted;
/// errors name the offending line.
Trajectory read_csv(std::istream &in);
Trajectory read_csv_file(const std::string &path);

}  // namespace phasetraj::cli

#endif
