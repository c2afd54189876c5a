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

#ifndef PHASETRAJ_CLI_SVG_H
#define PHASETRAJ_CLI_SVG_H

#include <string>
#include <string_view>

#include "phasetraj/trajectory.h"

namespace phasetraj::cli {

enum class PlotStyle {
    portrait,  // W2 against W2'
    phase,     // W2 and W2' against phi
};

PlotStyle parse_plot_style(std::string_view text);

/// Byte-for-byte deterministic for a given trajectory and style.
std::string render_svg(const Trajectory &traj, PlotStyle style);

}  // namespace phasetraj::cli

#endif
