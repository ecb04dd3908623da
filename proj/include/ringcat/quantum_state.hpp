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

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "ringcat/fock_basis.hpp"

namespace ringcat {

using Complex = std::complex<double>;

/// Which three modes the occupations of a Fock basis refer to.
enum class Representation { Site, Momentum };

std::string_view to_string(Representation rep);

/// Pure state of N bosons on the three-site ring, stored densely over the
/// canonical Fock basis. Immutable after construction.
class StateVector {
  public:
    /// Takes ownership of `amplitudes`. Throws std::invalid_argument when the
    /// length is not basis_dimension(n_particles) or the norm differs from 1 by
    /// more than kNormTolerance.
    StateVector(int n_particles, Representation rep, std::vector<Complex> amplitudes);

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    static StateVector normalized(int n_particles, Representation rep,
                                  std::vector<Complex> amplitudes);

    /// Single Fock ket.
    static StateVector basis_state(Representation rep, const FockState& occupation);

    int particle_count() const { return n_particles_; }
    Representation representation() const { return rep_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    Complex amplitude(const FockState& occupation) const;
    Complex operator[](std::size_t index) const { return amplitudes_[index]; }

    double norm() const;

    static constexpr double kNormTolerance = 1e-10;

  private:
    int n_particles_;
    Representation rep_;
    std::vector<Complex> amplitudes_;
};

/// Probability attached to one Fock ket of a distribution.
struct OccupationProbability {
    FockState occupation;
    double probability = 0.0;
};

/// (a† + b† + c†)^N |0,0,0> / sqrt(3^N N!), i.e. all N atoms in the
/// zero-quasi-momentum mode, written over lattice-site occupations. Every
/// amplitude is real and positive.
StateVector superfluid_ground_state(int n_particles);

/// |amplitude|^2 over the full basis, in canonical order.
std::vector<OccupationProbability> occupation_distribution(const StateVector& state);

/// P(N_a, N_b) for a site-representation state, in canonical order (N_c is
/// implied). Throws std::invalid_argument for momentum-representation input.
std::vector<OccupationProbability> site_number_distribution(const StateVector& state);

/// <lhs|rhs>. Throws std::invalid_argument on mismatched particle number or
/// representation.
Complex overlap(const StateVector& lhs, const StateVector& rhs);

}  // namespace ringcat
