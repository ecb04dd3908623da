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

#include "ringcat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ringcat/cat_protocol.hpp"
#include "ringcat/errors.hpp"
#include "ringcat/momentum_modes.hpp"
#include "ringcat/quantum_state.hpp"
#include "ringcat/ring_interferometer.hpp"

namespace ringcat::cli {

namespace {

constexpr double kSumTolerance = 1e-10;

void check_sum(double sum, double expected, const std::string& what) {
    if (!(std::abs(sum - expected) <= kSumTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << " sums to " << sum << ", expected " << expected;
        throw std::logic_error(msg.str());
    }
}

int single_n(const RunConfig& config, int minimum) {
    if (config.n.size() != 1) {
        throw std::invalid_argument(config.command + ": expects exactly one --n value");
    }
    const int n = config.n.front();
    if (n < minimum) {
        throw std::invalid_argument(config.command + ": --n must be at least " + std::to_string(minimum));
    }
    return n;
}

void require_nonempty_n(const RunConfig& config, int minimum) {
    if (config.n.empty()) {
        throw std::invalid_argument(config.command + ": empty --n range");
    }
    for (int n : config.n) {
        if (n < minimum) {
            throw std::invalid_argument(config.command + ": every --n must be at least " + std::to_string(minimum));
        }
    }
}

double hold_phase(const RunConfig& config) {
    if (!std::isfinite(config.theta_pi)) throw std::invalid_argument("--theta-pi must be finite");
    return config.theta_pi * std::numbers::pi;
}

Cell integer(long long v) { return static_cast<std::int64_t>(v); }

std::string format_cell(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(cell));
    return buf;
}

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    if (value < 0) throw std::invalid_argument("particle count must be non-negative: '" + text + "'");
    return value;
}

}  // namespace

std::vector<int> parse_particle_counts(const std::string& text) {
    std::vector<int> out;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    } else if (text.find(':') != std::string::npos) {
        std::vector<int> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(parse_int(item));
        if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("range must be a:b or a:b:step");
        const int step = parts.size() == 3 ? parts[2] : 1;
        if (step <= 0) throw std::invalid_argument("range step must be positive");
        for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    } else {
        out.push_back(parse_int(text));
    }
    if (out.empty()) throw std::invalid_argument("empty particle-count range '" + text + "'");
    return out;
}

Report cmd_ground(const RunConfig& config) {
    const int n = single_n(config, 0);
    const auto dist = site_number_distribution(superfluid_ground_state(n));
    Table table{"site_distribution", {"n_a", "n_b", "probability"}, {}};
    double sum = 0.0;
    for (const auto& [occ, p] : dist) {
        table.rows.push_back({integer(occ.n0), integer(occ.n1), p});
        sum += p;
    }
    check_sum(sum, 1.0, "site distribution");
    return {"ground", {{"n", integer(n)}}, {std::move(table)}};
}

Report cmd_cat(const RunConfig& config) {
    const int n = single_n(config, 1);
    const double theta = hold_phase(config) * (1.0 + config.delta);
    const auto result = run_protocol(n, theta);
    const auto dist = momentum_distribution(result.final_state);

    Table distribution{"momentum_distribution", {"n_alpha", "n_beta", "probability"}, {}};
    double sum = 0.0;
    double leakage = 0.0;
    for (const auto& [occ, p] : dist) {
        distribution.rows.push_back({integer(occ.n0), integer(occ.n1), p});
        sum += p;
        if (occ.n0 != n && occ.n1 != n && occ.n2 != n) leakage += p;
    }
    check_sum(sum, 1.0, "momentum distribution");

    const auto& pr = result.probabilities;
    if (pr.sum() > 1.0 + kSumTolerance) check_sum(pr.sum(), 1.0, "extremal probabilities");
    Table summary{"summary", {"p_alpha", "p_beta", "p_gamma", "cattiness", "leakage"}, {}};
    summary.rows.push_back({pr.alpha, pr.beta, pr.gamma, result.cattiness, leakage});

    return {"cat",
            {{"n", integer(n)}, {"theta_pi", config.theta_pi}, {"delta", config.delta}, {"theta", theta}},
            {std::move(distribution), std::move(summary)}};
}

Report cmd_cattiness_sweep(const RunConfig& config) {
    require_nonempty_n(config, 1);
    const double theta = hold_phase(config);
    Table table{"cattiness", {"n", "p_alpha", "p_beta", "p_gamma", "cattiness"}, {}};
    for (const auto& row : cattiness_sweep(config.n, theta)) {
        if (row.probabilities.sum() > 1.0 + kSumTolerance) {
            check_sum(row.probabilities.sum(), 1.0, "extremal probabilities");
        }
        table.rows.push_back(
            {integer(row.n_particles), row.probabilities.alpha, row.probabilities.beta, row.probabilities.gamma, row.cattiness});
    }
    return {"cattiness-sweep", {{"theta_pi", config.theta_pi}}, {std::move(table)}};
}

Report cmd_timing(const RunConfig& config) {
    require_nonempty_n(config, 1);
    for (int n : config.n) {
        if (n % 3 != 0) {
            throw PhysicsPreconditionError("timing: N = " + std::to_string(n) + " is not a multiple of 3");
        }
    }
    const double hold = hold_phase(config);
    Table table{"timing", {"n", "delta0", "n_delta0", "inverse_delta0"}, {}};
    std::vector<double> tolerances;
    for (int n : config.n) {
        const double d0 = timing_tolerance(n, config.c_target, hold);
        tolerances.push_back(d0);
        table.rows.push_back({integer(n), d0, n * d0, 1.0 / d0});
    }
    const double prefactor = fit_inverse_tolerance_prefactor(config.n, tolerances);
    Table fit{"fit", {"prefactor", "slope"}, {{prefactor, 1.0 / prefactor}}};
    return {"timing",
            {{"theta_pi", config.theta_pi}, {"c_target", config.c_target}},
            {std::move(table), std::move(fit)}};
}

Report cmd_calibrate_u(const RunConfig& config) {
    const int n = single_n(config, 1);
    if (config.grid < 3) throw std::invalid_argument("calibrate-u: --grid must be at least 3");
    if (!(config.delta > 0.0)) throw std::invalid_argument("calibrate-u: --delta (bracket half-width) must be positive");
    const double center = hold_phase(config);
    std::vector<double> samples;
    for (int i = 0; i < config.grid; ++i) {
        const double u = -1.0 + 2.0 * i / (config.grid - 1);
        samples.push_back(center * (1.0 + config.delta * u));
    }
    if (center < 0.0) std::reverse(samples.begin(), samples.end());
    const auto cal = calibrate_hold_phase(n, samples, config.c_target);
    Table table{"calibration", {"theta_peak", "theta_peak_pi", "cattiness_peak", "half_width"}, {}};
    table.rows.push_back({cal.theta_peak, cal.theta_peak / std::numbers::pi, cal.cattiness_peak, cal.half_width});
    return {"calibrate-u",
            {{"n", integer(n)},
             {"theta_pi", config.theta_pi},
             {"delta", config.delta},
             {"grid", integer(config.grid)},
             {"c_target", config.c_target}},
            {std::move(table)}};
}

Report cmd_fringes(const RunConfig& config) {
    const int n = single_n(config, 1);
    if (n % 3 != 0) {
        throw PhysicsPreconditionError("fringes: N = " + std::to_string(n) + " is not a multiple of 3");
    }
    if (config.grid < 1) throw std::invalid_argument("fringes: --grid must be positive");
    std::vector<double> xi_values;
    for (int i = 0; i < config.grid; ++i) {
        xi_values.push_back(config.grid == 1 ? 0.0 : config.xi * i / (config.grid - 1));
    }
    const auto scan = fringe_scan(n, config.J, xi_values, config.dt, /*simulate=*/true);
    Table table{"fringes",
                {"xi", "xi_dt", "phi_rot", "phi_hop", "p_alpha", "p_beta", "p_gamma", "sim_p_alpha", "sim_p_beta",
                 "sim_p_gamma", "fringe_period"},
                {}};
    for (const auto& row : scan.rows) {
        const auto& c = row.closed_form;
        const auto& s = *row.simulated;
        check_sum(c.sum(), 1.0, "closed-form fringe row");
        check_sum(s.sum(), 1.0, "simulated fringe row");
        table.rows.push_back({row.xi, row.xi * config.dt, row.settings.phi_rot, row.settings.phi_hop, c.alpha, c.beta,
                              c.gamma, s.alpha, s.beta, s.gamma, scan.measured_period});
    }
    Table period{"period", {"measured_period", "expected_period"}, {{scan.measured_period, scan.expected_period}}};
    return {"fringes",
            {{"n", integer(n)}, {"j", config.J}, {"xi_max", config.xi}, {"dt", config.dt}, {"grid", integer(config.grid)}},
            {std::move(table), std::move(period)}};
}

Report run(const RunConfig& config) {
    if (config.command == "ground") return cmd_ground(config);
    if (config.command == "cat") return cmd_cat(config);
    if (config.command == "cattiness-sweep") return cmd_cattiness_sweep(config);
    if (config.command == "timing") return cmd_timing(config);
    if (config.command == "calibrate-u") return cmd_calibrate_u(config);
    if (config.command == "fringes") return cmd_fringes(config);
    throw std::invalid_argument("unknown command '" + config.command + "'");
}

std::string render_csv(const Report& report) {
    std::string out = "# ringcat " + report.command;
    for (const auto& [key, value] : report.parameters) out += " " + key + "=" + format_cell(value);
    out += "\n";
    for (std::size_t t = 0; t < report.tables.size(); ++t) {
        const Table& table = report.tables[t];
        if (t > 0) out += "\n";
        out += "# " + table.name + "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out += (c ? "," : "") + table.columns[c];
        }
        out += "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out += (c ? "," : "") + format_cell(row[c]);
            }
            out += "\n";
        }
    }
    return out;
}

std::string render_json(const Report& report) {
    using nlohmann::ordered_json;
    auto to_json = [](const Cell& cell) -> ordered_json {
        if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
        const double d = std::get<double>(cell);
        // JSON has no NaN; an undetermined value is written as null.
        if (!std::isfinite(d)) return nullptr;
        return d;
    };
    ordered_json doc;
    doc["command"] = report.command;
    doc["parameters"] = ordered_json::object();
    for (const auto& [key, value] : report.parameters) doc["parameters"][key] = to_json(value);
    doc["tables"] = ordered_json::object();
    for (const Table& table : report.tables) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = to_json(row[c]);
            rows.push_back(std::move(obj));
        }
        doc["tables"][table.name] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

std::string render(const Report& report, Format format) {
    return format == Format::Json ? render_json(report) : render_csv(report);
}

}  // namespace ringcat::cli
