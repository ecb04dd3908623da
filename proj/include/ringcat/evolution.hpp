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

#include "ringcat/hamiltonian.hpp"
#include "ringcat/quantum_state.hpp"

namespace ringcat {

// All engines apply exp(-i H t) with hbar = 1.

/// Evolution for a dimensionless hold phase theta = U t under the
/// interaction-only Hamiltonian: the amplitude on |p,q,r> picks up
/// exp(-i theta/2 [p(p-1) + q(q-1) + r(r-1)]).
StateVector evolve_interaction_phase(const StateVector& site_state, double theta);

/// Exact evolution under an operator whose entries are all on the diagonal.
StateVector evolve_diagonal(const StateVector& state, const HermitianOperator& op, double t);

/// Cached eigendecomposition H = V diag(lambda) V† for repeated propagation.
class SpectralPropagator {
  public:
    /// Throws std::invalid_argument if the operator is not Hermitian and
    /// std::runtime_error if the eigensolver does not converge.
    explicit SpectralPropagator(const HermitianOperator& op);

    int particle_count() const { return n_particles_; }
    Representation representation() const { return rep_; }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

    StateVector evolve(const StateVector& state, double t) const;

  private:
    int n_particles_;
    Representation rep_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

/// One-shot V exp(-i Lambda t) V† |psi>.
StateVector evolve_spectral(const StateVector& state, const HermitianOperator& op, double t);

}  // namespace ringcat
