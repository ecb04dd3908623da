// Copyright 2026 The ringcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ringcat::cli {

enum class Format { Csv, Json };

/// Everything a run depends on. Two runs with equal configs produce
/// byte-identical output.
struct RunConfig {
    std::string command;
    std::vector<int> n;         ///< particle counts; single-N commands use n.front()
    double theta_pi = 2.0 / 3;  ///< hold phase U t in units of π
    double delta = 0.0;         ///< cat: fractional timing error; calibrate-u: bracket half-width
    double c_target = 0.9;
    double J = 0.0;
    double xi = 1.0;  ///< fringes: largest xi of the scan (scan starts at 0)
    double dt = 1.0;
    int grid = 101;
    Format format = Format::Csv;
    std::string out = "-";
};

using Cell = std::variant<std::int64_t, double>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, Cell>> parameters;
    std::vector<Table> tables;
};

/// Parses "5", "1:31", "3:30:3" (inclusive, optional step) or "3,6,9".
/// Throws std::invalid_argument on malformed or empty input.
std::vector<int> parse_particle_counts(const std::string& text);

// Each command validates its inputs (std::invalid_argument for bad configs,
// PhysicsPreconditionError for physically meaningless requests) and checks
// that every probability column it emits sums as expected before returning.
Report cmd_ground(const RunConfig& config);
Report cmd_cat(const RunConfig& config);
Report cmd_cattiness_sweep(const RunConfig& config);
Report cmd_timing(const RunConfig& config);
Report cmd_calibrate_u(const RunConfig& config);
Report cmd_fringes(const RunConfig& config);

/// Dispatches on config.command.
Report run(const RunConfig& config);

/// CSV: a "# ringcat <command> k=v ..." line, then per table a "# <name>"
/// line, a header row and data rows; tables separated by a blank line.
/// Doubles use 17 significant digits.
std::string render_csv(const Report& report);

/// {"command": ..., "parameters": {...}, "tables": {name: [{column: value}, ...]}}
std::string render_json(const Report& report);

std::string render(const Report& report, Format format);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitPhysicsPrecondition = 3;

}  // namespace ringcat::cli
