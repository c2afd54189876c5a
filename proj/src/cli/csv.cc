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

#include "phasetraj/cli/csv.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "phasetraj/error.h"

namespace phasetraj::cli {

namespace {

enum class Column { phi, w2, w2_std, w2p, w2p_std, shots, reps };

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string &text, size_t line_no, std::string_view column) {
    double value = 0.0;
    const char *begin = text.data();
    const char *end = begin + text.size();
    if (!text.empty() && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": column " + std::string(column) +
                              ": cannot parse '" + text + "' as a number");
    }
    if (!std::isfinite(value)) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": column " + std::string(column) +
                              ": value is not finite");
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(std::ostream &out, const Trajectory &traj) {
    out << kCsvHeader << '\n';
    for (const TrajectoryPoint &p : traj.points) {
        out << format_double(p.phi) << ',' << format_double(p.w2) << ',' << format_double(p.w2_std.value_or(0.0))
            << ',' << format_double(p.w2p) << ',' << format_double(p.w2p_std.value_or(0.0)) << ',' << traj.shots
            << ',' << traj.reps << '\n';
    }
}

std::string to_csv(const Trajectory &traj) {
    std::ostringstream ss;
    write_csv(ss, traj);
    return ss.str();
}

Trajectory read_csv(std::istream &in) {
    std::string line;
    size_t line_no = 0;
    std::vector<Column> columns;
    while (std::getline(in, line)) {
        line_no++;
        if (!trim(line).empty()) {
            break;
        }
    }
    if (trim(line).empty()) {
        throw InvalidArgument("CSV is empty");
    }
    bool has[7] = {};
    for (const std::string &raw : split_fields(line)) {
        const std::string name = trim(raw);
        Column c;
        if (name == "phi_rad") {
            c = Column::phi;
        } else if (name == "w2_mean") {
            c = Column::w2;
        } else if (name == "w2_std") {
            c = Column::w2_std;
        } else if (name == "w2p_mean") {
            c = Column::w2p;
        } else if (name == "w2p_std") {
            c = Column::w2p_std;
        } else if (name == "shots") {
            c = Column::shots;
        } else if (name == "reps") {
            c = Column::reps;
        } else {
            throw InvalidArgument("line " + std::to_string(line_no) + ": unknown column '" + name + "'");
        }
        if (has[static_cast<int>(c)]) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": duplicate column '" + name + "'");
        }
        has[static_cast<int>(c)] = true;
        columns.push_back(c);
    }
    for (auto [c, name] : {std::pair{Column::phi, "phi_rad"}, {Column::w2, "w2_mean"}, {Column::w2p, "w2p_mean"}}) {
        if (!has[static_cast<int>(c)]) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": missing required column '" + name + "'");
        }
    }

    Trajectory traj;
    traj.provenance = Provenance::ingested;
    std::optional<double> shots;
    std::optional<double> reps;
    bool uniform_plan = true;
    while (std::getline(in, line)) {
        line_no++;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != columns.size()) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected " + std::to_string(columns.size()) +
                                  " fields, got " + std::to_string(fields.size()));
        }
        TrajectoryPoint p;
        for (size_t i = 0; i < columns.size(); i++) {
            const std::string text = trim(fields[i]);
            switch (columns[i]) {
                case Column::phi:
                    p.phi = parse_number(text, line_no, "phi_rad");
                    break;
                case Column::w2:
                    p.w2 = parse_number(text, line_no, "w2_mean");
                    break;
                case Column::w2p:
                    p.w2p = parse_number(text, line_no, "w2p_mean");
                    break;
                case Column::w2_std:
                    p.w2_std = parse_number(text, line_no, "w2_std");
                    break;
                case Column::w2p_std:
                    p.w2p_std = parse_number(text, line_no, "w2p_std");
                    break;
                case Column::shots:
                case Column::reps: {
                    const bool is_shots = columns[i] == Column::shots;
                    const double v = parse_number(text, line_no, is_shots ? "shots" : "reps");
                    if (v < 0 || v != std::floor(v)) {
                        throw InvalidArgument("line " + std::to_string(line_no) +
                                              ": shots and reps must be non-negative integers");
                    }
                    std::optional<double> &slot = is_shots ? shots : reps;
                    if (slot && *slot != v) {
                        uniform_plan = false;
                    }
                    slot = v;
                    break;
                }
            }
        }
        if ((p.w2_std && *p.w2_std < 0) || (p.w2p_std && *p.w2p_std < 0)) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": negative standard deviation");
        }
        if (!traj.points.empty() && !(p.phi > traj.points.back().phi)) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": phi_rad is not strictly increasing");
        }
        traj.points.push_back(p);
    }
    if (traj.points.empty()) {
        throw InvalidArgument("CSV has a header but no data rows");
    }
    if (uniform_plan) {
        traj.shots = static_cast<int>(shots.value_or(0.0));
        traj.reps = static_cast<int>(reps.value_or(0.0));
    }
    return traj;
}

Trajectory read_csv_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_csv(in);
}

}  // namespace phasetraj::cli
