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

#include <array>

#include "ringcat/quantum_state.hpp"

namespace ringcat {

/// Single-particle 3x3 unitary F acting on annihilation operators:
/// mode_k = sum_j F(k, j) site_j.
class ModeUnitary {
  public:
    /// Throws std::invalid_argument unless max|F F† - I| <= kUnitaryTolerance.
    explicit ModeUnitary(const Eigen::Matrix3cd& entries);

    const Eigen::Matrix3cd& matrix() const { return entries_; }
    Complex operator()(int mode, int site) const { return entries_(mode, site); }

    ModeUnitary operator*(const ModeUnitary& rhs) const { return ModeUnitary(entries_ * rhs.entries_); }

    static ModeUnitary identity() { return ModeUnitary(Eigen::Matrix3cd::Identity()); }

    static constexpr double kUnitaryTolerance = 1e-12;

  private:
    Eigen::Matrix3cd entries_;
};

/// Quasi-momentum modes of the ring, rows ordered (alpha, beta, gamma) with
/// angular momentum (0, +1, -1), columns ordered by site (a, b, c):
///   F(k, j) = exp(2πi k j / 3) / sqrt(3).
ModeUnitary dft_mode_matrix();

/// Angular quasi-momentum carried by each row of dft_mode_matrix().
inline constexpr std::array<int, 3> kModeAngularMomentum = {0, +1, -1};

/// Symmetric N-th tensor power of a mode unitary: the dense
/// (N+1)(N+2)/2 square matrix L with L(m, n) = <m_F | n>, taking
/// site-occupation amplitudes to mode-occupation amplitudes. The map F -> L
/// is a group homomorphism.
class FockLift {
  public:
    FockLift(const ModeUnitary& modes, int n_particles);

    int particle_count() const { return n_particles_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

  private:
    int n_particles_;
    Eigen::MatrixXcd matrix_;
};

FockLift lift_to_fock(const ModeUnitary& modes, int n_particles);

/// Column of the lift belonging to a single site ket, built by applying the
/// mode creation operators one particle at a time, so that every
/// intermediate vector is a normalized Fock state.
std::vector<Complex> lift_column(const ModeUnitary& modes, const FockState& site_occupation);

/// Site -> momentum amplitudes without storing the dense lift (O(dim) memory).
StateVector to_momentum(const StateVector& site_state, const ModeUnitary& modes = dft_mode_matrix());

/// Momentum -> site amplitudes; inverse of to_momentum for the same modes.
StateVector to_site(const StateVector& momentum_state, const ModeUnitary& modes = dft_mode_matrix());

/// Full occupation distribution of a site-representation state over the
/// (alpha, beta, gamma) modes.
std::vector<OccupationProbability> momentum_distribution(const StateVector& site_state);

/// <N e_k | psi> for the three kets with every particle in one mode k. Only
/// touches the input vector once per mode.
std::array<Complex, 3> extremal_mode_amplitudes(const StateVector& site_state,
                                                const ModeUnitary& modes = dft_mode_matrix());

struct ModeProbabilities {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    double sum() const { return alpha + beta + gamma; }
    double operator[](int mode) const { return mode == 0 ? alpha : (mode == 1 ? beta : gamma); }
};

/// Probabilities of finding all atoms in alpha, in beta, and in gamma.
ModeProbabilities extremal_mode_probabilities(const StateVector& site_state);

}  // namespace ringcat
