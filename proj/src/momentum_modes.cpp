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

#include "ringcat/momentum_modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ringcat {

ModeUnitary::ModeUnitary(const Eigen::Matrix3cd& entries) : entries_(entries) {
    const double deviation = (entries_ * entries_.adjoint() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
    if (!(deviation <= kUnitaryTolerance)) {
        throw std::invalid_argument("ModeUnitary: matrix is not unitary (deviation " +
                                    std::to_string(deviation) + ")");
    }
}

ModeUnitary dft_mode_matrix() {
    // Cube roots of unity written out exactly rather than through cos/sin.
    const double s = 1.0 / std::sqrt(3.0);
    const Complex one{1.0, 0.0};
    const Complex w{-0.5, 0.5 * std::sqrt(3.0)};
    const Complex w2 = std::conj(w);
    Eigen::Matrix3cd f;
    f << one, one, one,
         one, w, w2,
         one, w2, w;
    return ModeUnitary(s * f);
}

std::vector<Complex> lift_column(const ModeUnitary& modes, const FockState& site_occupation) {
    const int occ[3] = {site_occupation.n0, site_occupation.n1, site_occupation.n2};
    if (occ[0] < 0 || occ[1] < 0 || occ[2] < 0) {
        throw std::invalid_argument("lift_column: negative occupation");
    }
    std::vector<Complex> current{Complex{1.0, 0.0}};
    int degree = 0;
    for (int site = 0; site < 3; ++site) {
        for (int t = 1; t <= occ[site]; ++t) {
            std::vector<Complex> next(basis_dimension(degree + 1));
            const double renorm = 1.0 / std::sqrt(static_cast<double>(t));
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (current[i] == Complex{}) continue;
                const FockState m = unrank({i}, degree);
                const int mocc[3] = {m.n0, m.n1, m.n2};
                for (int mode = 0; mode < 3; ++mode) {
                    int raised[3] = {mocc[0], mocc[1], mocc[2]};
                    ++raised[mode];
                    const std::size_t j = rank({raised[0], raised[1], raised[2]}, degree + 1).ordinal;
                    next[j] += current[i] * modes(mode, site) * std::sqrt(static_cast<double>(raised[mode])) * renorm;
                }
            }
            current = std::move(next);
            ++degree;
        }
    }
    return current;
}

FockLift::FockLift(const ModeUnitary& modes, int n_particles) : n_particles_(n_particles) {
    if (n_particles < 0) {
        throw std::invalid_argument("FockLift: negative particle count");
    }
    const auto basis = enumerate_basis(n_particles);
    const auto dim = static_cast<Eigen::Index>(basis.size());
    matrix_.resize(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const auto column = lift_column(modes, basis[static_cast<std::size_t>(col)]);
        for (Eigen::Index row = 0; row < dim; ++row) {
            matrix_(row, col) = column[static_cast<std::size_t>(row)];
        }
    }
}

FockLift lift_to_fock(const ModeUnitary& modes, int n_particles) { return FockLift(modes, n_particles); }

StateVector to_momentum(const StateVector& site_state, const ModeUnitary& modes) {
    if (site_state.representation() != Representation::Site) {
        throw std::invalid_argument("to_momentum: state is not in the site representation");
    }
    const int n = site_state.particle_count();
    const auto basis = enumerate_basis(n);
    std::vector<Complex> out(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        if (site_state[col] == Complex{}) continue;
        const auto column = lift_column(modes, basis[col]);
        for (std::size_t row = 0; row < out.size(); ++row) out[row] += column[row] * site_state[col];
    }
    return StateVector(n, Representation::Momentum, std::move(out));
}

StateVector to_site(const StateVector& momentum_state, const ModeUnitary& modes) {
    if (momentum_state.representation() != Representation::Momentum) {
        throw std::invalid_argument("to_site: state is not in the momentum representation");
    }
    const int n = momentum_state.particle_count();
    const auto basis = enumerate_basis(n);
    std::vector<Complex> out(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto column = lift_column(modes, basis[col]);
        Complex sum = 0.0;
        for (std::size_t row = 0; row < column.size(); ++row) sum += std::conj(column[row]) * momentum_state[row];
        out[col] = sum;
    }
    return StateVector(n, Representation::Site, std::move(out));
}

std::vector<OccupationProbability> momentum_distribution(const StateVector& site_state) {
    return occupation_distribution(to_momentum(site_state));
}

std::array<Complex, 3> extremal_mode_amplitudes(const StateVector& site_state, const ModeUnitary& modes) {
    if (site_state.representation() != Representation::Site) {
        throw std::invalid_argument("extremal_mode_amplitudes: state is not in the site representation");
    }
    const int n = site_state.particle_count();
    const auto basis = enumerate_basis(n);

    // <N e_k | n> = sqrt(N!/(n_a! n_b! n_c!)) prod_j F(k, j)^{n_j}, evaluated
    // as magnitude and phase separately to stay finite for large N.
    std::array<Complex, 3> result{};
    for (int mode = 0; mode < 3; ++mode) {
        double log_mag[3];
        double phase[3];
        bool zero[3];
        for (int site = 0; site < 3; ++site) {
            const Complex f = modes(mode, site);
            zero[site] = (f == Complex{});
            log_mag[site] = zero[site] ? 0.0 : std::log(std::abs(f));
            phase[site] = std::arg(f);
        }
        Complex sum = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const FockState& s = basis[i];
            const int occ[3] = {s.n0, s.n1, s.n2};
            double lm = 0.5 * (log_factorial(n) - log_factorial(occ[0]) - log_factorial(occ[1]) - log_factorial(occ[2]));
            double ph = 0.0;
            bool vanishes = false;
            for (int site = 0; site < 3; ++site) {
                if (occ[site] == 0) continue;
                if (zero[site]) {
                    vanishes = true;
                    break;
                }
                lm += occ[site] * log_mag[site];
                ph += occ[site] * phase[site];
            }
            if (vanishes) continue;
            sum += std::polar(std::exp(lm), ph) * site_state[i];
        }
        result[static_cast<std::size_t>(mode)] = sum;
    }
    return result;
}

ModeProbabilities extremal_mode_probabilities(const StateVector& site_state) {
    const auto amps = extremal_mode_amplitudes(site_state);
    return {std::norm(amps[0]), std::norm(amps[1]), std::norm(amps[2])};
}

}  // namespace ringcat
