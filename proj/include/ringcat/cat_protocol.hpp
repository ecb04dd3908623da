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

#include <numbers>
#include <span>
#include <vector>

#include "ringcat/momentum_modes.hpp"
#include "ringcat/quantum_state.hpp"

namespace ringcat {

/// Hold phase U t that turns the superfluid ground state into a three-branch cat.
inline constexpr double kCatHoldPhase = 2.0 * std::numbers::pi / 3.0;

/// Outcome of: prepare superfluid ground state, quench to the interaction-only
/// Hamiltonian, hold for phase theta = U t, release, read all-in-one-mode
/// probabilities.
struct ProtocolResult {
    int n_particles = 0;
    double theta = 0.0;
    ModeProbabilities probabilities;
    double cattiness = 0.0;
    StateVector final_state;  ///< site representation, after the hold
};

/// Requires n_particles >= 1.
ProtocolResult run_protocol(int n_particles, double theta);

/// 3 (P_alpha P_beta P_gamma)^(1/3). Throws std::invalid_argument if a
/// probability lies outside [0, 1] (a 1e-12 overshoot above 1 is tolerated).
double cattiness(double p_alpha, double p_beta, double p_gamma);
double cattiness(const ModeProbabilities& p);

/// Constant term of the closed-form beta-mode probability for three atoms.
/// Pinned by P_beta(0) = 0 and confirmed against full simulation; the value
/// 41 that also appears in the alpha-mode expression does not normalize.
inline constexpr double kThreeAtomBetaConstant = 14.0;

struct ThreeAtomProbabilities {
    double alpha = 0.0;
    double beta = 0.0;  ///< equal to gamma
};

/// Closed forms for N = 3:
///   P_alpha = [41 + 24 cos θ + 12 cos 2θ + 4 cos 3θ] / 81
///   P_beta  = [14 - 12 cos θ -  6 cos 2θ + 4 cos 3θ] / 81
ThreeAtomProbabilities analytic_three_atom_probabilities(double theta);

struct CattinessRow {
    int n_particles = 0;
    ModeProbabilities probabilities;
    double cattiness = 0.0;
};

/// run_protocol at a fixed hold phase for each requested N, in input order.
/// Each row is independent of the others.
std::vector<CattinessRow> cattiness_sweep(std::span<const int> particle_counts, double theta = kCatHoldPhase);

/// Largest timing error delta > 0 such that every hold phase in
/// [hold, (1+delta) hold] keeps cattiness >= c_target, i.e. the first
/// downward crossing. Found by a forward scan with step 1e-4/N and then
/// bisection to 1e-9. Throws PhysicsPreconditionError when N is not a
/// positive multiple of 3 or the target is never reached.
///
/// With the default hold 2π/3, delta0 * N tends to ~0.48. Measuring the
/// error relative to the doubled hold 4π/3 (which also forms a cat) gives
/// delta0 * N ~ 0.24.
double timing_tolerance(int n_particles, double c_target = 0.9, double hold_phase = kCatHoldPhase);

/// Origin-constrained least squares of 1/delta0 against N; returns the
/// prefactor k in delta0 ≈ k / N.
double fit_inverse_tolerance_prefactor(std::span<const int> particle_counts, std::span<const double> tolerances);

struct CalibrationResult {
    double theta_peak = 0.0;
    double cattiness_peak = 0.0;
    double half_width = 0.0;  ///< distance above theta_peak to the first point where C drops below c_target
};

/// Locates the cattiness maximum within the sample bracket (sampled argmax,
/// then golden-section refinement between the neighbouring samples) and the
/// half-width of the peak at c_target. Throws PhysicsPreconditionError when
/// the maximum sits on the bracket edge.
CalibrationResult calibrate_hold_phase(int n_particles, std::span<const double> theta_samples,
                                       double c_target = 0.9);

}  // namespace ringcat
