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

#include "ringcat/quantum_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ringcat {

namespace {

double squared_norm(std::span<const Complex> amplitudes) {
    double sum = 0.0;
    for (const Complex& a : amplitudes) sum += std::norm(a);
    return sum;
}

}  // namespace

std::string_view to_string(Representation rep) {
    return rep == Representation::Site ? "site" : "momentum";
}

StateVector::StateVector(int n_particles, Representation rep, std::vector<Complex> amplitudes)
    : n_particles_(n_particles), rep_(rep), amplitudes_(std::move(amplitudes)) {
    if (n_particles_ < 0) {
        throw std::invalid_argument("StateVector: negative particle count");
    }
    if (amplitudes_.size() != basis_dimension(n_particles_)) {
        throw std::invalid_argument("StateVector: expected " +
                                    std::to_string(basis_dimension(n_particles_)) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    const double n = std::sqrt(squared_norm(amplitudes_));
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        throw std::invalid_argument("StateVector: norm " + std::to_string(n) + " is not 1");
    }
}

StateVector StateVector::normalized(int n_particles, Representation rep,
                                    std::vector<Complex> amplitudes) {
    const double n = std::sqrt(squared_norm(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("StateVector::normalized: zero or non-finite amplitudes");
    }
    for (Complex& a : amplitudes) a /= n;
    return StateVector(n_particles, rep, std::move(amplitudes));
}

StateVector StateVector::basis_state(Representation rep, const FockState& occupation) {
    const int n = occupation.total();
    std::vector<Complex> amplitudes(basis_dimension(n));
    amplitudes[rank(occupation, n).ordinal] = 1.0;
    return StateVector(n, rep, std::move(amplitudes));
}

Complex StateVector::amplitude(const FockState& occupation) const {
    return amplitudes_[rank(occupation, n_particles_).ordinal];
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector superfluid_ground_state(int n_particles) {
    const auto basis = enumerate_basis(n_particles);
    std::vector<Complex> amplitudes;
    amplitudes.reserve(basis.size());
    for (const FockState& s : basis) {
        amplitudes.emplace_back(multinomial_amplitude(s.n0, s.n1, s.n2), 0.0);
    }
    return StateVector(n_particles, Representation::Site, std::move(amplitudes));
}

std::vector<OccupationProbability> occupation_distribution(const StateVector& state) {
    const auto basis = enumerate_basis(state.particle_count());
    std::vector<OccupationProbability> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out.push_back({basis[i], std::norm(state[i])});
    }
    return out;
}

std::vector<OccupationProbability> site_number_distribution(const StateVector& state) {
    if (state.representation() != Representation::Site) {
        throw std::invalid_argument("site_number_distribution: state is in the momentum representation");
    }
    return occupation_distribution(state);
}

Complex overlap(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.particle_count() != rhs.particle_count()) {
        throw std::invalid_argument("overlap: particle numbers differ");
    }
    if (lhs.representation() != rhs.representation()) {
        throw std::invalid_argument("overlap: representations differ");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < lhs.dimension(); ++i) {
        sum += std::conj(lhs[i]) * rhs[i];
    }
    return sum;
}

}  // namespace ringcat
