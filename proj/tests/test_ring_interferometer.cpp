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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ringcat/errors.hpp"
#include "ringcat/evolution.hpp"
#include "ringcat/hamiltonian.hpp"
#include "ringcat/ring_interferometer.hpp"
#include "support.hpp"

using namespace ringcat;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(ring_interferometer, cat_matrix_cube) {
    const Eigen::Matrix3cd w = cat_matrix();
    EXPECT_LT(reference::max_abs(w * w.adjoint() - Eigen::Matrix3cd::Identity()), 1e-15);
    // Eigenvalues of W are exp(-iπ/6) and exp(7iπ/6) (twice), so W^3 = -i.
    const Eigen::Matrix3cd minus_i = Complex{0.0, -1.0} * Eigen::Matrix3cd::Identity();
    EXPECT_LT(reference::max_abs(w * w * w - minus_i), 1e-12);
    // The simulated cat operator carries an extra exp(iπ/6) and cubes to the identity.
    for (int n : {3, 6}) {
        const Eigen::Matrix3cd m = protocol_subspace_matrix(n, kCatHoldPhase);
        EXPECT_LT(reference::max_abs(m - std::polar(1.0, kPi / 6.0) * w), 1e-10);
        EXPECT_LT(reference::max_abs(m * m * m - Eigen::Matrix3cd::Identity()), 1e-10);
    }
}

TEST(ring_interferometer, cat_matrix_on_ground_state) {
    const CatSubspaceVector out = cat_matrix() * CatSubspaceVector::UnitX();
    const double s = 1.0 / std::sqrt(3.0);
    EXPECT_NEAR(std::abs(out(0) - s * std::polar(1.0, -2.0 * kPi / 3.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out(1) - s), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out(2) - s), 0.0, 1e-15);
}

TEST(ring_interferometer, protocol_restricted_to_cat_subspace_is_w) {
    for (int n : {3, 6, 9}) {
        EXPECT_LT(reference::distance_up_to_phase(protocol_subspace_matrix(n, kCatHoldPhase), cat_matrix()), 1e-10)
            << "N=" << n;
        const Eigen::Matrix3cd w = cat_matrix();
        EXPECT_LT(reference::distance_up_to_phase(protocol_subspace_matrix(n, 2.0 * kCatHoldPhase), w * w), 1e-10)
            << "N=" << n;
    }
}

TEST(ring_interferometer, phase_matrix) {
    EXPECT_LT(reference::max_abs(phase_matrix({3, 0.0, 0.0}) - Eigen::Matrix3cd::Identity()), 1e-16);
    const auto q = phase_matrix({3, kPi, 0.4});
    EXPECT_NEAR(std::abs(q(0, 0) - std::polar(1.0, -0.4)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q(1, 1) + 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q(2, 2) + 1.0), 0.0, 1e-15);
    for (double r : {0.1, 2.0, -5.0}) {
        const auto m = phase_matrix({6, r, 1.3 * r});
        EXPECT_LT(reference::max_abs(m * m.adjoint() - Eigen::Matrix3cd::Identity()), 1e-15);
    }
}

TEST(ring_interferometer, fringe_special_points) {
    const auto rest = fringe_probabilities({3, 0.0, 0.0});
    EXPECT_NEAR(rest.alpha, 1.0, 1e-15);
    EXPECT_NEAR(rest.beta, 0.0, 1e-15);
    EXPECT_NEAR(rest.gamma, 0.0, 1e-15);
    const auto transfer = fringe_probabilities({3, 2.0 * kPi / 3.0, 0.0});
    EXPECT_NEAR(transfer.alpha, 0.0, 1e-15);
    EXPECT_NEAR(transfer.beta, 1.0, 1e-15);
    EXPECT_NEAR(transfer.gamma, 0.0, 1e-15);
}

TEST(ring_interferometer, closed_forms_match_matrix_chain) {
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            const FringeSettings s{3, 2.0 * kPi * i / 49.0, 2.0 * kPi * j / 49.0};
            const auto closed = fringe_probabilities(s);
            const auto chain = subspace_fringe_probabilities(s);
            ASSERT_NEAR(closed.alpha, chain.alpha, 1e-12);
            ASSERT_NEAR(closed.beta, chain.beta, 1e-12);
            ASSERT_NEAR(closed.gamma, chain.gamma, 1e-12);
            ASSERT_NEAR(closed.sum(), 1.0, 1e-12);
        }
    }
}

TEST(ring_interferometer, chain_is_unitary_on_every_input) {
    const Eigen::Matrix3cd w = cat_matrix();
    const Eigen::Matrix3cd chain = w * w * phase_matrix({3, 0.7, 2.1}) * w;
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(chain.col(k).squaredNorm(), 1.0, 1e-14);
}

TEST(ring_interferometer, rotation_reversal_swaps_beta_and_gamma) {
    for (double r : {0.2, 1.1, 2.9}) {
        for (double h : {0.0, 0.8}) {
            const auto fwd = fringe_probabilities({3, r, h});
            const auto rev = fringe_probabilities({3, -r, h});
            EXPECT_NEAR(fwd.alpha, rev.alpha, 1e-14);
            EXPECT_NEAR(fwd.beta, rev.gamma, 1e-14);
            EXPECT_NEAR(fwd.gamma, rev.beta, 1e-14);
        }
    }
}

TEST(ring_interferometer, full_simulation_matches_closed_forms) {
    for (int n : {3, 6}) {
        for (double J : {0.0, 0.23}) {
            for (int i = 0; i < 25; ++i) {
                const double xi = 2.0 * kPi * i / 24.0;
                const auto sim = full_simulation_fringes(n, J, xi, 1.0);
                const auto closed = fringe_probabilities(FringeSettings::from_physical(n, J, xi, 1.0));
                ASSERT_NEAR(sim.alpha, closed.alpha, 1e-10);
                ASSERT_NEAR(sim.beta, closed.beta, 1e-10);
                ASSERT_NEAR(sim.gamma, closed.gamma, 1e-10);
            }
        }
    }
    const auto rest = full_simulation_fringes(3, 0.0, 0.0, 0.0);
    EXPECT_NEAR(rest.alpha, 1.0, 1e-12);
}

TEST(ring_interferometer, forward_hold_convention_swaps_beta_and_gamma) {
    // Same pipeline as full_simulation_fringes but holding with exp(-iH dt).
    const int n = 3;
    const double J = 0.3;
    const double xi = 0.45;
    const auto created = run_protocol(n, kCatHoldPhase).final_state;
    const auto h = build_rotating_momentum_hamiltonian({J, 0.0, xi, n});
    const auto held = evolve_diagonal(to_momentum(created), h, 1.0);
    const auto out = extremal_mode_probabilities(evolve_interaction_phase(to_site(held), 2.0 * kCatHoldPhase));
    const auto closed = fringe_probabilities(FringeSettings::from_physical(n, J, xi, 1.0));
    EXPECT_NEAR(out.alpha, closed.alpha, 1e-10);
    EXPECT_NEAR(out.beta, closed.gamma, 1e-10);
    EXPECT_NEAR(out.gamma, closed.beta, 1e-10);
    EXPECT_GT(std::abs(closed.beta - closed.gamma), 0.1);
}

TEST(ring_interferometer, created_cat_has_no_leakage) {
    for (int n : {3, 6, 9}) {
        const auto m = to_momentum(run_protocol(n, kCatHoldPhase).final_state);
        const double inside = std::norm(m.amplitude({n, 0, 0})) + std::norm(m.amplitude({0, n, 0})) +
                              std::norm(m.amplitude({0, 0, n}));
        EXPECT_LT(1.0 - inside, 1e-10) << "N=" << n;
    }
}

TEST(ring_interferometer, full_simulation_requires_multiple_of_three) {
    EXPECT_THROW(full_simulation_fringes(4, 0.0, 0.1, 1.0), PhysicsPreconditionError);
}

TEST(ring_interferometer, fringe_period_scales_as_one_over_n) {
    auto period = [](int n) {
        std::vector<double> xi;
        for (int i = 0; i <= 4000; ++i) xi.push_back(2.0 * kPi * i / 4000.0);
        return fringe_scan(n, 0.0, xi, 1.0);
    };
    const auto t3 = period(3);
    const auto t30 = period(30);
    EXPECT_NEAR(t3.measured_period, 2.0 * kPi / 3.0, 1e-4);
    EXPECT_NEAR(t30.measured_period, 2.0 * kPi / 30.0, 1e-4);
    EXPECT_NEAR(t3.measured_period / t30.measured_period, 10.0, 0.1);
    for (const auto& row : t30.rows) ASSERT_NEAR(row.closed_form.sum(), 1.0, 1e-10);
    EXPECT_NEAR(t3.rows.front().closed_form.alpha, 1.0, 1e-15);
}

TEST(ring_interferometer, six_atom_period_is_half_of_three_atom_period) {
    std::vector<double> xi;
    for (int i = 0; i <= 600; ++i) xi.push_back(2.0 * kPi * i / 600.0);
    const auto t3 = fringe_scan(3, 0.0, xi, 1.0, true);
    const auto t6 = fringe_scan(6, 0.0, xi, 1.0, true);
    EXPECT_NEAR(t6.measured_period / t3.measured_period, 0.5, 1e-3);
    for (const auto& row : t6.rows) {
        ASSERT_TRUE(row.simulated.has_value());
        ASSERT_NEAR(row.simulated->alpha, row.closed_form.alpha, 1e-10);
    }
}

TEST(ring_interferometer, period_estimator_edge_cases) {
    EXPECT_TRUE(std::isnan(estimate_fringe_period(std::vector<double>{0.0, 1.0}, std::vector<double>{1.0, 0.0})));
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i < 1000; ++i) {
        x.push_back(0.01 * i);
        y.push_back(std::cos(2.0 * kPi * x.back() / 1.7));
    }
    EXPECT_NEAR(estimate_fringe_period(x, y), 1.7, 1e-5);
}
