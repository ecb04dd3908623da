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

#include "ringcat/fock_basis.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ringcat {

namespace {

constexpr int kLogFactorialTableSize = 1024;

const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
    static const auto table = [] {
        std::array<double, kLogFactorialTableSize> t{};
        t[0] = 0.0;
        for (int k = 1; k < kLogFactorialTableSize; ++k) {
            t[k] = t[k - 1] + std::log(static_cast<double>(k));
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string FockState::to_string() const {
    return "|" + std::to_string(n0) + "," + std::to_string(n1) + "," + std::to_string(n2) + ">";
}

std::vector<FockState> enumerate_basis(int n_particles) {
    if (n_particles < 0) {
        throw std::invalid_argument("enumerate_basis: negative particle count");
    }
    std::vector<FockState> basis;
    basis.reserve(basis_dimension(n_particles));
    for (int n0 = n_particles; n0 >= 0; --n0) {
        for (int n1 = n_particles - n0; n1 >= 0; --n1) {
            basis.push_back({n0, n1, n_particles - n0 - n1});
        }
    }
    return basis;
}

BasisIndex rank(const FockState& state, int n_particles) {
    if (state.n0 < 0 || state.n1 < 0 || state.n2 < 0) {
        throw std::invalid_argument("rank: negative occupation in " + state.to_string());
    }
    if (state.total() != n_particles) {
        throw std::invalid_argument("rank: " + state.to_string() + " does not hold " +
                                    std::to_string(n_particles) + " particles");
    }
    // Every n0' > n0 contributes a block of (N - n0' + 1) states; within the
    // block n1 counts down from N - n0.
    const auto holes = static_cast<std::size_t>(n_particles - state.n0);
    return {holes * (holes + 1) / 2 + (holes - static_cast<std::size_t>(state.n1))};
}

FockState unrank(BasisIndex index, int n_particles) {
    if (n_particles < 0) {
        throw std::invalid_argument("unrank: negative particle count");
    }
    if (index.ordinal >= basis_dimension(n_particles)) {
        throw std::out_of_range("unrank: index " + std::to_string(index.ordinal) +
                                " outside basis of dimension " +
                                std::to_string(basis_dimension(n_particles)));
    }
    std::size_t holes = static_cast<std::size_t>(
        (std::sqrt(8.0 * static_cast<double>(index.ordinal) + 1.0) - 1.0) / 2.0);
    // Guard against floating-point rounding of the triangular root.
    while (holes * (holes + 1) / 2 > index.ordinal) --holes;
    while ((holes + 1) * (holes + 2) / 2 <= index.ordinal) ++holes;
    const std::size_t offset = index.ordinal - holes * (holes + 1) / 2;
    const int n0 = n_particles - static_cast<int>(holes);
    const int n1 = static_cast<int>(holes - offset);
    return {n0, n1, n_particles - n0 - n1};
}

double log_factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("log_factorial: negative argument");
    }
    if (n < kLogFactorialTableSize) {
        return log_factorial_table()[static_cast<std::size_t>(n)];
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double multinomial_amplitude(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0) {
        throw std::invalid_argument("multinomial_amplitude: negative occupation");
    }
    const int n = p + q + r;
    const double log_amp = 0.5 * (log_factorial(n) - log_factorial(p) - log_factorial(q) -
                                  log_factorial(r) - n * std::log(3.0));
    return std::exp(log_amp);
}

}  // namespace ringcat
