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

#include "ringcat/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ringcat {

HermitianOperator::HermitianOperator(int n_particles, Representation rep, std::vector<Entry> entries)
    : n_particles_(n_particles), rep_(rep) {
    if (n_particles < 0) {
        throw std::invalid_argument("HermitianOperator: negative particle count");
    }
    const std::size_t dim = basis_dimension(n_particles);
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    for (const Entry& e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw std::invalid_argument("HermitianOperator: entry outside dimension " + std::to_string(dim));
        }
        if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
            entries_.back().value += e.value;
        } else {
            entries_.push_back(e);
        }
    }
    for (const Entry& e : entries_) {
        if (std::abs(e.value - std::conj(element(e.col, e.row))) > kHermitianTolerance) {
            throw std::invalid_argument("HermitianOperator: entry (" + std::to_string(e.row) + "," +
                                        std::to_string(e.col) + ") breaks Hermiticity");
        }
    }
}

bool HermitianOperator::is_diagonal() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.row == e.col || e.value == Complex{}; });
}

Complex HermitianOperator::element(std::size_t row, std::size_t col) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                                     [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                                         return e.row != key.first ? e.row < key.first : e.col < key.second;
                                     });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return {};
}

Eigen::MatrixXcd HermitianOperator::to_dense() const {
    const auto dim = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Entry& e : entries_) {
        dense(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    }
    return dense;
}

std::vector<Complex> HermitianOperator::apply(std::span<const Complex> amplitudes) const {
    if (amplitudes.size() != dimension()) {
        throw std::invalid_argument("HermitianOperator::apply: dimension mismatch");
    }
    std::vector<Complex> out(dimension());
    for (const Entry& e : entries_) out[e.row] += e.value * amplitudes[e.col];
    return out;
}

HermitianOperator build_bose_hubbard(const HubbardParams& params) {
    const int n = params.N;
    const auto basis = enumerate_basis(n);
    std::vector<HermitianOperator::Entry> entries;
    entries.reserve(basis.size() * 7);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const FockState& s = basis[col];
        const int occ[3] = {s.n0, s.n1, s.n2};

        double interaction = 0.0;
        for (int k : occ) interaction += static_cast<double>(k) * (k - 1);
        if (params.U * interaction != 0.0) {
            entries.push_back({col, col, Complex{0.5 * params.U * interaction, 0.0}});
        }

        if (params.J == 0.0) continue;
        // On a three-site ring every ordered pair of distinct sites is a bond,
        // so the hopping term plus its conjugate is a†_dst a_src over all dst != src.
        for (int src = 0; src < 3; ++src) {
            if (occ[src] == 0) continue;
            for (int dst = 0; dst < 3; ++dst) {
                if (dst == src) continue;
                int moved[3] = {occ[0], occ[1], occ[2]};
                --moved[src];
                ++moved[dst];
                const std::size_t row = rank({moved[0], moved[1], moved[2]}, n).ordinal;
                const double amp = -params.J * std::sqrt(static_cast<double>(occ[src]) * (occ[dst] + 1));
                entries.push_back({row, col, Complex{amp, 0.0}});
            }
        }
    }
    return HermitianOperator(n, Representation::Site, std::move(entries));
}

HermitianOperator build_rotating_momentum_hamiltonian(const HubbardParams& params) {
    const auto basis = enumerate_basis(params.N);
    std::vector<HermitianOperator::Entry> entries;
    entries.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const FockState& m = basis[i];
        const double energy = -2.0 * params.J * m.n0 + (params.J + params.xi) * m.n1 +
                              (params.J - params.xi) * m.n2;
        entries.push_back({i, i, Complex{energy, 0.0}});
    }
    return HermitianOperator(params.N, Representation::Momentum, std::move(entries));
}

double expectation(const HermitianOperator& op, const StateVector& state) {
    if (op.particle_count() != state.particle_count() || op.representation() != state.representation()) {
        throw std::invalid_argument("expectation: operator and state live in different spaces");
    }
    const auto h_psi = op.apply(state.amplitudes());
    Complex sum = 0.0;
    for (std::size_t i = 0; i < h_psi.size(); ++i) sum += std::conj(state[i]) * h_psi[i];
    return sum.real();
}

}  // namespace ringcat
