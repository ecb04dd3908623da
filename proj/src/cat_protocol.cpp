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

#include "ringcat/cat_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "ringcat/errors.hpp"
#include "ringcat/evolution.hpp"

namespace ringcat {

namespace {

constexpr double kProbabilitySlack = 1e-12;
constexpr double kBisectionTolerance = 1e-9;

double cattiness_at(int n_particles, double theta) {
    const auto held = evolve_interaction_phase(superfluid_ground_state(n_particles), theta);
    return cattiness(extremal_mode_probabilities(held));
}

// Walks x = start + k*step while f(x) >= target and returns the bisected
// boundary between the last passing and first failing sample. Returns NaN if
// no failing sample is seen before `limit`.
double first_downward_crossing(const std::function<double(double)>& f, double target, double start, double step,
                               double limit) {
    double good = start;
    for (long k = 1;; ++k) {
        const double x = start + static_cast<double>(k) * step;
        if (x > limit) return std::numeric_limits<double>::quiet_NaN();
        if (f(x) < target) {
            double bad = x;
            while (bad - good > kBisectionTolerance) {
                const double mid = 0.5 * (good + bad);
                (f(mid) >= target ? good : bad) = mid;
            }
            return good;
        }
        good = x;
    }
}

}  // namespace

ProtocolResult run_protocol(int n_particles, double theta) {
    if (n_particles < 1) {
        throw std::invalid_argument("run_protocol: need at least one particle");
    }
    auto held = evolve_interaction_phase(superfluid_ground_state(n_particles), theta);
    const auto probs = extremal_mode_probabilities(held);
    return {n_particles, theta, probs, cattiness(probs), std::move(held)};
}

double cattiness(double p_alpha, double p_beta, double p_gamma) {
    for (double p : {p_alpha, p_beta, p_gamma}) {
        if (!(p >= 0.0 && p <= 1.0 + kProbabilitySlack)) {
            throw std::invalid_argument("cattiness: probability " + std::to_string(p) + " outside [0, 1]");
        }
    }
    return 3.0 * std::cbrt(p_alpha * p_beta * p_gamma);
}

double cattiness(const ModeProbabilities& p) { return cattiness(p.alpha, p.beta, p.gamma); }

ThreeAtomProbabilities analytic_three_atom_probabilities(double theta) {
    const double c1 = std::cos(theta);
    const double c2 = std::cos(2.0 * theta);
    const double c3 = std::cos(3.0 * theta);
    return {
        (41.0 + 24.0 * c1 + 12.0 * c2 + 4.0 * c3) / 81.0,
        (kThreeAtomBetaConstant - 12.0 * c1 - 6.0 * c2 + 4.0 * c3) / 81.0,
    };
}

std::vector<CattinessRow> cattiness_sweep(std::span<const int> particle_counts, double theta) {
    std::vector<CattinessRow> rows;
    rows.reserve(particle_counts.size());
    for (int n : particle_counts) {
        const auto result = run_protocol(n, theta);
        rows.push_back({n, result.probabilities, result.cattiness});
    }
    return rows;
}

double timing_tolerance(int n_particles, double c_target, double hold_phase) {
    if (n_particles < 1 || n_particles % 3 != 0) {
        throw PhysicsPreconditionError("timing_tolerance: N = " + std::to_string(n_particles) +
                                       " is not a positive multiple of 3, so no cat forms");
    }
    if (!(c_target > 0.0 && c_target <= 1.0)) {
        throw std::invalid_argument("timing_tolerance: target cattiness must lie in (0, 1]");
    }
    auto c_of_delta = [n_particles, hold_phase](double delta) {
        return cattiness_at(n_particles, (1.0 + delta) * hold_phase);
    };
    if (c_of_delta(0.0) < c_target) {
        throw PhysicsPreconditionError("timing_tolerance: target cattiness unreachable at zero timing error");
    }
    // C is 2π-periodic in the hold phase, so one period in delta bounds the scan.
    const double period = 2.0 * std::numbers::pi / std::abs(hold_phase);
    const double delta0 = first_downward_crossing(c_of_delta, c_target, 0.0, 1e-4 / n_particles, period);
    if (std::isnan(delta0)) {
        throw PhysicsPreconditionError("timing_tolerance: cattiness never drops below the target");
    }
    return delta0;
}

double fit_inverse_tolerance_prefactor(std::span<const int> particle_counts, std::span<const double> tolerances) {
    if (particle_counts.size() != tolerances.size() || particle_counts.empty()) {
        throw std::invalid_argument("fit_inverse_tolerance_prefactor: need matching, non-empty inputs");
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < particle_counts.size(); ++i) {
        const double n = particle_counts[i];
        sxy += n / tolerances[i];
        sxx += n * n;
    }
    return sxx / sxy;
}

CalibrationResult calibrate_hold_phase(int n_particles, std::span<const double> theta_samples, double c_target) {
    if (theta_samples.size() < 3) {
        throw std::invalid_argument("calibrate_hold_phase: need at least three samples");
    }
    if (!std::is_sorted(theta_samples.begin(), theta_samples.end())) {
        throw std::invalid_argument("calibrate_hold_phase: samples must be increasing");
    }
    auto c_of_theta = [n_particles](double theta) { return cattiness_at(n_particles, theta); };

    std::size_t best = 0;
    double best_c = -1.0;
    for (std::size_t i = 0; i < theta_samples.size(); ++i) {
        const double c = c_of_theta(theta_samples[i]);
        if (c > best_c) {
            best_c = c;
            best = i;
        }
    }
    if (best == 0 || best + 1 == theta_samples.size()) {
        throw PhysicsPreconditionError("calibrate_hold_phase: cattiness maximum lies on the bracket edge");
    }

    // Golden-section search on the two intervals around the best sample.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = theta_samples[best - 1];
    double hi = theta_samples[best + 1];
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = c_of_theta(x1);
    double f2 = c_of_theta(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = c_of_theta(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = c_of_theta(x1);
        }
    }
    CalibrationResult result;
    result.theta_peak = 0.5 * (lo + hi);
    result.cattiness_peak = c_of_theta(result.theta_peak);
    // The flat top of the peak limits golden section to ~sqrt(eps) in theta;
    // keep the sample unless the refinement is better beyond rounding.
    if (best_c >= result.cattiness_peak - 1e-12) {
        result.theta_peak = theta_samples[best];
        result.cattiness_peak = best_c;
    }

    if (result.cattiness_peak >= c_target) {
        const double step = 1e-4 * kCatHoldPhase / n_particles;
        const double edge =
            first_downward_crossing(c_of_theta, c_target, result.theta_peak, step, result.theta_peak + 2.0 * std::numbers::pi);
        result.half_width = std::isnan(edge) ? std::numeric_limits<double>::quiet_NaN() : edge - result.theta_peak;
    }
    return result;
}

}  // namespace ringcat
