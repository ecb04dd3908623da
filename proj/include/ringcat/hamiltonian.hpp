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

#include <cstddef>
#include <vector>

#include "ringcat/quantum_state.hpp"

namespace ringcat {

/// Energies in angular-frequency units with hbar = 1.
struct HubbardParams {
    double J = 1.0;   ///< tunneling between neighbouring sites
    double U = 0.0;   ///< on-site pair interaction
    double xi = 0.0;  ///< rotation coupling; shifts the +1/-1 flow modes by +xi/-xi
    int N = 0;        ///< particle count
};

/// Sparse Hermitian matrix over the N-particle Fock basis of one
/// representation. Entries are unique per (row, col) and sorted row-major.
class HermitianOperator {
  public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };

    /// Sorts and merges duplicate coordinates. Throws std::invalid_argument if
    /// an index is out of range or the result is not Hermitian to kHermitianTolerance.
    HermitianOperator(int n_particles, Representation rep, std::vector<Entry> entries);

    int particle_count() const { return n_particles_; }
    Representation representation() const { return rep_; }
    std::size_t dimension() const { return basis_dimension(n_particles_); }
    const std::vector<Entry>& entries() const { return entries_; }

    bool is_diagonal() const;
    Complex element(std::size_t row, std::size_t col) const;
    Eigen::MatrixXcd to_dense() const;

    /// H|psi>, returned unnormalized.
    std::vector<Complex> apply(std::span<const Complex> amplitudes) const;

    static constexpr double kHermitianTolerance = 1e-14;

  private:
    int n_particles_;
    Representation rep_;
    std::vector<Entry> entries_;
};

/// -J (a†b + b†c + c†a + h.c.) + U/2 (a†²a² + b†²b² + c†²c²) over site occupations.
HermitianOperator build_bose_hubbard(const HubbardParams& params);

/// -2J α†α + (J+ξ) β†β + (J-ξ) γ†γ over momentum occupations; diagonal.
HermitianOperator build_rotating_momentum_hamiltonian(const HubbardParams& params);

/// <psi|H|psi>. Representation and particle number must match.
double expectation(const HermitianOperator& op, const StateVector& state);

}  // namespace ringcat
