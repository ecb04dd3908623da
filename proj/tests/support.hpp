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

// Test-only helpers: seeded random generators and reference computations that
// deliberately avoid the library's own algorithms.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ringcat/fock_basis.hpp"
#include "ringcat/quantum_state.hpp"

namespace ringcat::reference {

inline Eigen::Matrix3cd random_unitary3(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::Matrix3cd z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) z(i, j) = {gauss(rng), gauss(rng)};
    Eigen::HouseholderQR<Eigen::Matrix3cd> qr(z);
    Eigen::Matrix3cd q = qr.householderQ();
    // Fix column phases so the distribution is Haar.
    const Eigen::Matrix3cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 3; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

inline StateVector random_state(int n, Representation rep, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(basis_dimension(n));
    for (auto& a : amps) a = {gauss(rng), gauss(rng)};
    return StateVector::normalized(n, rep, std::move(amps));
}

/// n! as an exact integer (n <= 20).
inline std::uint64_t exact_factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

/// Permanent by direct expansion over all permutations; fine for n <= 7.
inline Complex permanent(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return 1.0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// <m|Gamma(F)|n> = per(F[m, n]) / sqrt(prod m_k! prod n_j!), where rows of F
/// are repeated m_k times and columns n_j times.
inline Complex lift_element_by_permanent(const Eigen::Matrix3cd& f, const FockState& m, const FockState& n) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (int k = 0; k < 3; ++k)
        for (int r = 0; r < m[k]; ++r) rows.push_back(k);
    for (int j = 0; j < 3; ++j)
        for (int c = 0; c < n[j]; ++c) cols.push_back(j);
    const auto size = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd sub(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j) sub(i, j) = f(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    double norm = 1.0;
    for (int k = 0; k < 3; ++k) norm *= static_cast<double>(exact_factorial(m[k]) * exact_factorial(n[k]));
    return permanent(sub) / std::sqrt(norm);
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

/// Largest deviation of `a` from `b` after removing the best global phase.
inline double distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const Complex inner = (b.adjoint() * a).trace();
    const Complex phase = std::abs(inner) > 0 ? inner / std::abs(inner) : Complex{1.0};
    return max_abs(a - phase * b);
}

}  // namespace ringcat::reference
