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

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ringcat {

/// Occupation numbers of the three ring modes. In the site representation the
/// modes are the lattice sites (a, b, c); in the momentum representation they
/// are the flow modes (alpha, beta, gamma).
struct FockState {
    int n0 = 0;
    int n1 = 0;
    int n2 = 0;

    constexpr int total() const { return n0 + n1 + n2; }
    constexpr int operator[](int mode) const { return mode == 0 ? n0 : (mode == 1 ? n1 : n2); }

    auto operator<=>(const FockState&) const = default;

    std::string to_string() const;
};

/// Position of a FockState in the canonical enumeration of its N-particle basis.
struct BasisIndex {
    std::size_t ordinal = 0;

    auto operator<=>(const BasisIndex&) const = default;
};

/// (N+1)(N+2)/2, the number of ways to put N bosons in three modes.
constexpr std::size_t basis_dimension(int n_particles) {
    const auto n = static_cast<std::size_t>(n_particles);
    return (n + 1) * (n + 2) / 2;
}

/// All occupations summing to n_particles, ordered lexicographically descending
/// on (n0, n1): (N,0,0), (N-1,1,0), (N-1,0,1), (N-2,2,0), ... , (0,0,N).
std::vector<FockState> enumerate_basis(int n_particles);

/// Position of `state` in enumerate_basis(n_particles). Throws
/// std::invalid_argument if the occupations are negative or do not sum to
/// n_particles.
BasisIndex rank(const FockState& state, int n_particles);

/// Inverse of rank(). Throws std::out_of_range for index >= basis_dimension.
FockState unrank(BasisIndex index, int n_particles);

/// log(n!) for n >= 0. Values up to a fixed bound come from a cumulative table.
double log_factorial(int n);

/// sqrt(N! / (p! q! r!)) / sqrt(3^N), the superfluid ground-state amplitude on
/// |p, q, r>. Computed in log space, so it stays finite for large N.
double multinomial_amplitude(int p, int q, int r);

}  // namespace ringcat
