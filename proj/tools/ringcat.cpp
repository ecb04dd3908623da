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

// ringcat: command-line driver for the three-site ring cat-state simulator.
//
//   ringcat ground          --n 30
//   ringcat cat             --n 3 --theta-pi 2/3
//   ringcat cattiness-sweep --n 1:31
//   ringcat timing          --n 3:30:3 --c-target 0.9
//   ringcat calibrate-u     --n 30 --delta 0.05 --grid 201
//   ringcat fringes         --n 3 --j 0 --xi 6.283185307179586 --dt 1 --grid 101
//
// Exit codes: 0 success, 1 internal error, 2 invalid configuration,
// 3 physics precondition violated (e.g. N not a multiple of 3 where required).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringcat/cli.hpp"
#include "ringcat/errors.hpp"

namespace {

// Accepts a decimal number or an exact fraction such as "2/3".
double parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("bad number '" + text + "'");
        return v;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double a = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument("bad number '" + text + "'");
    const double b = std::stod(den, &used);
    if (used != den.size() || b == 0.0) throw std::invalid_argument("bad number '" + text + "'");
    return a / b;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ringcat::cli;

    CLI::App app{"Exact Fock-space simulation of flow-state cats on a three-site ring lattice"};
    app.require_subcommand(1);

    RunConfig config;
    std::string n_text;
    std::string theta_text = "2/3";
    std::string format_text = "csv";

    auto add_common = [&](CLI::App* sub, bool multi_n) {
        sub->add_option("--n", n_text, multi_n ? "Particle counts: N, a:b[:step] or a,b,c" : "Particle count")
            ->required();
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", config.out, "Output path ('-' for stdout)");
    };
    auto add_theta = [&](CLI::App* sub) {
        sub->add_option("--theta-pi", theta_text, "Hold phase U t in units of pi, e.g. 2/3");
    };

    auto* ground = app.add_subcommand("ground", "Site-occupation distribution of the superfluid ground state");
    add_common(ground, false);

    auto* cat = app.add_subcommand("cat", "Run the cat protocol and report the momentum distribution");
    add_common(cat, false);
    add_theta(cat);
    cat->add_option("--delta", config.delta, "Fractional timing error applied to the hold");

    auto* sweep = app.add_subcommand("cattiness-sweep", "Cattiness after the protocol for a range of N");
    add_common(sweep, true);
    add_theta(sweep);

    auto* timing = app.add_subcommand("timing", "Timing tolerance delta0(N) and the 1/delta0 vs N fit");
    add_common(timing, true);
    add_theta(timing);
    timing->add_option("--c-target", config.c_target, "Cattiness threshold");

    auto* calibrate = app.add_subcommand("calibrate-u", "Locate the cattiness peak around a hold phase");
    add_common(calibrate, false);
    add_theta(calibrate);
    auto* calibrate_delta =
        calibrate->add_option("--delta", config.delta, "Bracket half-width as a fraction of the hold (default 0.1)");
    calibrate->add_option("--grid", config.grid, "Number of bracket samples (default 201)");
    calibrate->add_option("--c-target", config.c_target, "Cattiness level for the peak half-width");

    auto* fringes = app.add_subcommand("fringes", "Interferometer fringes: closed form and Fock-space simulation");
    add_common(fringes, false);
    fringes->add_option("--j", config.J, "Hopping J during the hold");
    fringes->add_option("--xi", config.xi, "Largest rotation coupling xi of the scan (scan starts at 0)");
    fringes->add_option("--dt", config.dt, "Hold duration");
    fringes->add_option("--grid", config.grid, "Number of xi samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        config.n = parse_particle_counts(n_text);
        config.theta_pi = parse_fraction(theta_text);
        config.format = format_text == "json" ? Format::Json : Format::Csv;
        if (config.command == "calibrate-u") {
            if (calibrate_delta->count() == 0) config.delta = 0.1;
            if (calibrate->get_option("--grid")->count() == 0) config.grid = 201;
        }

        const std::string text = render(run(config), config.format);
        if (config.out == "-") {
            std::cout << text;
        } else {
            std::ofstream file(config.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open '" + config.out + "' for writing");
            file << text;
            if (!file) throw std::invalid_argument("failed writing '" + config.out + "'");
        }
    } catch (const ringcat::PhysicsPreconditionError& e) {
        std::cerr << "ringcat: " << e.what() << "\n";
        return kExitPhysicsPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ringcat: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "ringcat: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
