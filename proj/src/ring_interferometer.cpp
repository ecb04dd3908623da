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

#include "ringcat/ring_interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ringcat/errors.hpp"
#include "ringcat/evolution.hpp"
#include "ringcat/hamiltonian.hpp"

namespace ringcat {

namespace {

constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

void require_cat_forming(int n_particles, const char* who) {
    if (n_particles < 1 || n_particles % 3 != 0) {
        throw PhysicsPreconditionError(std::string(who) + ": N = " + std::to_string(n_particles) +
                                       " is not a positive multiple of 3");
    }
}

StateVector all_in_mode(int n_particles, int mode) {
    FockState m{};
    (mode == 0 ? m.n0 : (mode == 1 ? m.n1 : m.n2)) = n_particles;
    return StateVector::basis_state(Representation::Momentum, m);
}

}  // namespace

Eigen::Matrix3cd cat_matrix() {
    const Complex w{-0.5, -0.5 * std::sqrt(3.0)};
    Eigen::Matrix3cd m;
    m << w, 1.0, 1.0,
         1.0, w, 1.0,
         1.0, 1.0, w;
    return m / std::sqrt(3.0);
}

Eigen::Matrix3cd phase_matrix(const FringeSettings& settings) {
    Eigen::Matrix3cd q = Eigen::Matrix3cd::Zero();
    q(0, 0) = std::polar(1.0, -settings.phi_hop);
    q(1, 1) = std::polar(1.0, settings.phi_rot);
    q(2, 2) = std::polar(1.0, -settings.phi_rot);
    return q;
}

ModeProbabilities fringe_probabilities(const FringeSettings& settings) {
    const double ch = std::cos(settings.phi_hop);
    auto branch = [ch](double phase) {
        const double c = std::cos(phase);
        return (1.0 + 4.0 * c * c + 4.0 * c * ch) / 9.0;
    };
    return {branch(settings.phi_rot), branch(settings.phi_rot - kTwoPiOverThree),
            branch(settings.phi_rot + kTwoPiOverThree)};
}

ModeProbabilities subspace_fringe_probabilities(const FringeSettings& settings) {
    const Eigen::Matrix3cd w = cat_matrix();
    const CatSubspaceVector out = w * w * phase_matrix(settings) * w * CatSubspaceVector::UnitX();
    return {std::norm(out(0)), std::norm(out(1)), std::norm(out(2))};
}

Eigen::Matrix3cd protocol_subspace_matrix(int n_particles, double theta) {
    if (n_particles < 1) {
        throw std::invalid_argument("protocol_subspace_matrix: need at least one particle");
    }
    Eigen::Matrix3cd m;
    for (int k = 0; k < 3; ++k) {
        const auto held = evolve_interaction_phase(to_site(all_in_mode(n_particles, k)), theta);
        const auto amps = extremal_mode_amplitudes(held);
        for (int row = 0; row < 3; ++row) m(row, k) = amps[static_cast<std::size_t>(row)];
    }
    return m;
}

ModeProbabilities full_simulation_fringes(int n_particles, double J, double xi, double dt, double theta) {
    require_cat_forming(n_particles, "full_simulation_fringes");
    const auto created = run_protocol(n_particles, theta).final_state;
    const auto rotating = build_rotating_momentum_hamiltonian({J, 0.0, xi, n_particles});
    // The read-out closed forms and Q are written for exp(+iH dt). A forward
    // exp(-iH dt) hold conjugates Q and swaps the beta and gamma outputs.
    const auto held = evolve_diagonal(to_momentum(created), rotating, -dt);
    const auto recombined = evolve_interaction_phase(to_site(held), 2.0 * theta);
    return extremal_mode_probabilities(recombined);
}

FringeTable fringe_scan(int n_particles, double J, std::span<const double> xi_values, double dt, bool simulate) {
    if (n_particles < 1) {
        throw std::invalid_argument("fringe_scan: need at least one particle");
    }
    if (simulate) require_cat_forming(n_particles, "fringe_scan");
    FringeTable table;
    table.rows.reserve(xi_values.size());
    std::vector<double> x;
    std::vector<double> p_alpha;
    for (double xi : xi_values) {
        FringeScanRow row;
        row.xi = xi;
        row.settings = FringeSettings::from_physical(n_particles, J, xi, dt);
        row.closed_form = fringe_probabilities(row.settings);
        if (simulate) row.simulated = full_simulation_fringes(n_particles, J, xi, dt);
        x.push_back(xi * dt);
        p_alpha.push_back(row.closed_form.alpha);
        table.rows.push_back(row);
    }
    table.expected_period = 2.0 * std::numbers::pi / n_particles;
    table.measured_period = estimate_fringe_period(x, p_alpha);
    return table;
}

double estimate_fringe_period(std::span<const double> x, std::span<const double> signal) {
    if (x.size() != signal.size()) {
        throw std::invalid_argument("estimate_fringe_period: sample and signal lengths differ");
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (x.size() < 3) return nan;
    const auto [lo_it, hi_it] = std::minmax_element(signal.begin(), signal.end());
    const double threshold = 0.5 * (*lo_it + *hi_it);

    std::vector<double> peaks;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double y0 = signal[i - 1];
        const double y1 = signal[i];
        const double y2 = signal[i + 1];
        if (!(y1 > threshold && y1 >= y0 && y1 > y2)) continue;
        // Vertex of the parabola through three (possibly non-uniform) samples.
        const double x0 = x[i - 1];
        const double x1 = x[i];
        const double x2 = x[i + 1];
        const double d0 = (y1 - y0) / (x1 - x0);
        const double d1 = (y2 - y1) / (x2 - x1);
        const double curvature = (d1 - d0) / (x2 - x0);
        double vertex = x1;
        if (curvature < 0.0) vertex = 0.5 * (x0 + x1) - d0 / (2.0 * curvature);
        peaks.push_back(vertex);
    }
    if (peaks.size() < 2) return nan;
    return (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
}

}  // namespace ringcat
