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

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "ringcat/cat_protocol.hpp"
#include "ringcat/momentum_modes.hpp"

namespace ringcat {

/// Amplitudes over {|N,0,0>, |0,N,0>, |0,0,N>} in the (alpha, beta, gamma) modes.
using CatSubspaceVector = Eigen::Vector3cd;

/// The two dimensionless phases the fringes depend on.
struct FringeSettings {
    int n_particles = 0;
    double phi_rot = 0.0;  ///< N xi dt
    double phi_hop = 0.0;  ///< 3 N J dt

    static FringeSettings from_physical(int n_particles, double J, double xi, double dt) {
        return {n_particles, n_particles * xi * dt, 3.0 * n_particles * J * dt};
    }
};

/// Cat creation restricted to the three extremal kets (N a multiple of 3):
/// (1/sqrt 3) [[w, 1, 1], [1, w, 1], [1, 1, w]] with w = exp(-2πi/3).
/// W^3 = -i, so W cubes to the identity only up to a global phase.
Eigen::Matrix3cd cat_matrix();

/// Phases picked up by the extremal kets during the hold, overall phase dropped:
/// diag(exp(-i phi_hop), exp(+i phi_rot), exp(-i phi_rot)).
Eigen::Matrix3cd phase_matrix(const FringeSettings& settings);

/// Closed-form read-out probabilities after create / hold / create-twice:
///   P_alpha = [1 + 4 cos²(phi_rot) + 4 cos(phi_rot) cos(phi_hop)] / 9
/// and P_beta, P_gamma with phi_rot shifted by -2π/3 and +2π/3.
ModeProbabilities fringe_probabilities(const FringeSettings& settings);

/// |W² Q W (1,0,0)|² evaluated by matrix products.
ModeProbabilities subspace_fringe_probabilities(const FringeSettings& settings);

/// Matrix of the whole-Fock-space hold-for-theta protocol between the three
/// extremal kets: entry (k', k) = <N e_k'| L P(theta) L† |N e_k>.
Eigen::Matrix3cd protocol_subspace_matrix(int n_particles, double theta);

/// Interferometer run entirely in Fock space: cat creation at hold theta,
/// hold dt under the rotating-lattice Hamiltonian in the momentum basis, cat
/// creation at hold 2 theta, read-out. The hold stage applies exp(+iH dt), the
/// sign in which Q is defined; the cat stages use exp(-iHt). Throws
/// PhysicsPreconditionError unless N is a positive multiple of 3.
ModeProbabilities full_simulation_fringes(int n_particles, double J, double xi, double dt,
                                          double theta = kCatHoldPhase);

struct FringeScanRow {
    double xi = 0.0;
    FringeSettings settings;
    ModeProbabilities closed_form;
    std::optional<ModeProbabilities> simulated;
};

struct FringeTable {
    std::vector<FringeScanRow> rows;
    double measured_period = 0.0;  ///< in xi*dt, from P_alpha peak spacing; NaN with fewer than two peaks
    double expected_period = 0.0;  ///< 2π / N
};

/// Closed-form fringes over the given xi values (and the Fock-space
/// simulation alongside when `simulate` is set).
FringeTable fringe_scan(int n_particles, double J, std::span<const double> xi_values, double dt,
                        bool simulate = false);

/// Mean spacing of the dominant maxima of `signal` sampled at increasing `x`.
/// Peaks below the midpoint of the signal range are ignored; each peak is
/// refined by a parabola through its three samples.
double estimate_fringe_period(std::span<const double> x, std::span<const double> signal);

}  // namespace ringcat
