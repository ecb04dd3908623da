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

#include "ringcat/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace ringcat {

namespace {

void require_same_space(const StateVector& state, const HermitianOperator& op, const char* who) {
    if (state.particle_count() != op.particle_count() || state.representation() != op.representation()) {
        throw std::invalid_argument(std::string(who) + ": state and operator live in different spaces");
    }
}

}  // namespace

StateVector evolve_interaction_phase(const StateVector& site_state, double theta) {
    if (site_state.representation() != Representation::Site) {
        throw std::invalid_argument("evolve_interaction_phase: state is not in the site representation");
    }
    const auto basis = enumerate_basis(site_state.particle_count());
    std::vector<Complex> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const FockState& s = basis[i];
        // Pair counts are integers, so the phase is an exact integer multiple of theta/2.
        const long pairs = static_cast<long>(s.n0) * (s.n0 - 1) + static_cast<long>(s.n1) * (s.n1 - 1) +
                           static_cast<long>(s.n2) * (s.n2 - 1);
        out[i] = site_state[i] * std::polar(1.0, -0.5 * theta * static_cast<double>(pairs));
    }
    return StateVector(site_state.particle_count(), Representation::Site, std::move(out));
}

StateVector evolve_diagonal(const StateVector& state, const HermitianOperator& op, double t) {
    require_same_space(state, op, "evolve_diagonal");
    if (!op.is_diagonal()) {
        throw std::invalid_argument("evolve_diagonal: operator has off-diagonal entries");
    }
    std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
    for (const auto& e : op.entries()) {
        if (e.row == e.col) out[e.row] *= std::polar(1.0, -e.value.real() * t);
    }
    return StateVector(state.particle_count(), state.representation(), std::move(out));
}

SpectralPropagator::SpectralPropagator(const HermitianOperator& op)
    : n_particles_(op.particle_count()), rep_(op.representation()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.to_dense());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("SpectralPropagator: eigendecomposition did not converge");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

StateVector SpectralPropagator::evolve(const StateVector& state, double t) const {
    if (state.particle_count() != n_particles_ || state.representation() != rep_) {
        throw std::invalid_argument("SpectralPropagator::evolve: state and operator live in different spaces");
    }
    const auto dim = static_cast<Eigen::Index>(state.dimension());
    const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
    Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * psi;
    for (Eigen::Index k = 0; k < dim; ++k) coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * t);
    const Eigen::VectorXcd evolved = eigenvectors_ * coeffs;
    return StateVector(n_particles_, rep_, std::vector<Complex>(evolved.data(), evolved.data() + dim));
}

StateVector evolve_spectral(const StateVector& state, const HermitianOperator& op, double t) {
    require_same_space(state, op, "evolve_spectral");
    return SpectralPropagator(op).evolve(state, t);
}

}  // namespace ringcat
