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

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ringcat/cli.hpp"
#include "ringcat/errors.hpp"

using namespace ringcat;
using namespace ringcat::cli;

namespace {

double as_double(const Cell& c) {
    return std::holds_alternative<double>(c) ? std::get<double>(c) : static_cast<double>(std::get<std::int64_t>(c));
}

const Table& table(const Report& r, const std::string& name) {
    for (const auto& t : r.tables) {
        if (t.name == name) return t;
    }
    throw std::runtime_error("missing table " + name);
}

RunConfig config(const std::string& command, std::vector<int> n) {
    RunConfig c;
    c.command = command;
    c.n = std::move(n);
    return c;
}

}  // namespace

TEST(cli, parse_particle_counts) {
    EXPECT_EQ(parse_particle_counts("5"), (std::vector<int>{5}));
    EXPECT_EQ(parse_particle_counts("1:4"), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(parse_particle_counts("3:12:3"), (std::vector<int>{3, 6, 9, 12}));
    EXPECT_EQ(parse_particle_counts("3,6,9"), (std::vector<int>{3, 6, 9}));
    for (const char* bad : {"", "a", "3:", "5:1", "1:5:0", "3,,6", "-2"}) {
        EXPECT_THROW(parse_particle_counts(bad), std::invalid_argument) << bad;
    }
}

TEST(cli, ground_three_atoms) {
    const auto r = run(config("ground", {3}));
    const auto& t = table(r, "site_distribution");
    ASSERT_EQ(t.rows.size(), 10u);
    bool found = false;
    for (const auto& row : t.rows) {
        if (std::get<std::int64_t>(row[0]) == 1 && std::get<std::int64_t>(row[1]) == 1) {
            EXPECT_NEAR(std::get<double>(row[2]), 2.0 / 9.0, 1e-14);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(cli, ground_sizes) {
    EXPECT_EQ(table(run(config("ground", {30})), "site_distribution").rows.size(), 496u);
    const auto r0 = run(config("ground", {0}));
    const auto& empty = table(r0, "site_distribution");
    ASSERT_EQ(empty.rows.size(), 1u);
    EXPECT_EQ(std::get<std::int64_t>(empty.rows[0][0]), 0);
    EXPECT_EQ(std::get<double>(empty.rows[0][2]), 1.0);
    EXPECT_THROW(run(config("ground", {-1})), std::invalid_argument);
}

TEST(cli, cat_summary) {
    const auto r = run(config("cat", {6}));
    const auto& s = table(r, "summary");
    ASSERT_EQ(s.rows.size(), 1u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(as_double(s.rows[0][k]), 1.0 / 3.0, 1e-10);
    EXPECT_NEAR(as_double(s.rows[0][3]), 1.0, 1e-10);
    EXPECT_GE(as_double(s.rows[0][4]), 0.0);
    EXPECT_LT(as_double(s.rows[0][4]), 1e-10);
    EXPECT_EQ(table(r, "momentum_distribution").rows.size(), 28u);

    auto off = config("cat", {6});
    off.delta = 0.2;
    EXPECT_LT(as_double(table(run(off), "summary").rows[0][3]), 0.9);
    EXPECT_THROW(run(config("cat", {0})), std::invalid_argument);
}

TEST(cli, sweep_and_timing) {
    const auto sweep = table(run(config("cattiness-sweep", {3, 4})), "cattiness");
    ASSERT_EQ(sweep.rows.size(), 2u);
    EXPECT_NEAR(as_double(sweep.rows[0].back()), 1.0, 1e-10);

    const auto r = run(config("timing", {3, 6, 9}));
    const auto& t = table(r, "timing");
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_NEAR(as_double(t.rows[0][1]), 0.19527, 1e-4);
    const auto& fit = table(r, "fit");
    EXPECT_NEAR(as_double(fit.rows[0][1]), 1.0 / as_double(fit.rows[0][0]), 1e-12);
    EXPECT_THROW(run(config("timing", {3, 4})), PhysicsPreconditionError);
}

TEST(cli, calibrate_and_fringes) {
    auto cal = config("calibrate-u", {9});
    cal.delta = 0.1;
    cal.grid = 41;
    const auto rc = run(cal);
    const auto& c = table(rc, "calibration");
    EXPECT_NEAR(as_double(c.rows[0][1]), 2.0 / 3.0, 1e-8);

    auto fr = config("fringes", {3});
    fr.xi = 2.0 * std::acos(-1.0);
    fr.grid = 201;
    const auto r = run(fr);
    EXPECT_EQ(table(r, "fringes").rows.size(), 201u);
    EXPECT_THROW(run(config("fringes", {4})), PhysicsPreconditionError);
    EXPECT_THROW(run(config("nonsense", {3})), std::invalid_argument);
}

TEST(cli, csv_rendering) {
    Report r{"demo", {{"n", std::int64_t{3}}, {"x", 0.1}}, {{"t", {"a", "b"}, {{std::int64_t{1}, 0.5}, {std::int64_t{2}, 1.0 / 3.0}}}}};
    EXPECT_EQ(render_csv(r), "# ringcat demo n=3 x=0.10000000000000001\n# t\na,b\n1,0.5\n2,0.33333333333333331\n");
}

TEST(cli, json_rendering) {
    Report r{"demo", {{"n", std::int64_t{3}}}, {{"t", {"a", "b"}, {{std::int64_t{1}, std::nan("")}}}}};
    const auto j = nlohmann::json::parse(render_json(r));
    EXPECT_EQ(j["command"], "demo");
    EXPECT_EQ(j["parameters"]["n"], 3);
    EXPECT_TRUE(j["tables"]["t"][0]["b"].is_null());
    EXPECT_EQ(j["tables"]["t"][0]["a"], 1);
}

TEST(cli, rendering_is_deterministic) {
    for (const char* cmd : {"ground", "cat", "cattiness-sweep", "timing", "calibrate-u", "fringes"}) {
        const std::string name = cmd;
        auto c = config(cmd, name == "cattiness-sweep" || name == "timing" ? std::vector<int>{3, 6} : std::vector<int>{6});
        if (name == "calibrate-u") c.delta = 0.1;
        for (Format f : {Format::Csv, Format::Json}) {
            EXPECT_EQ(render(run(c), f), render(run(c), f)) << cmd;
        }
    }
}
