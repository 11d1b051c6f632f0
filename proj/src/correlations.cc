// Copyright 2026 The gaussdisc Authors
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

#include "gaussdisc/correlations.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussdisc/errors.h"

namespace gaussdisc {

namespace {

constexpr double kProbabilitySlack = 1e-12;
constexpr double kMuBracketHigh = 1e12;

}  // namespace

double entropy_h(double x) {
    if (!(x >= 1.0)) throw DomainError("entropy_h requires x >= 1");
    const double a = (x + 1.0) / 2.0;
    const double b = (x - 1.0) / 2.0;
    if (b == 0.0) return 0.0;
    if (x <= 3.0) return a * std::log2(a) - b * std::log2(b);
    // a log a - b log b with a = b + 1, rearranged to avoid cancelling two
    // terms of size x log x.
    return std::log2(b) + a * std::log1p(1.0 / b) / std::numbers::ln2;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy requires 0 <= p <= 1");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double delta_c(double mu) {
    if (!(mu >= 1.0)) throw DomainError("delta_c requires mu >= 1");
    return entropy_h(mu) - entropy_h((3.0 * mu - 1.0) / (mu + 1.0));
}

double delta_d(double mu) {
    if (!(mu >= 1.0)) throw DomainError("delta_d requires mu >= 1");
    return entropy_h(mu) - entropy_h(2.0 * mu - 1.0) + entropy_h((3.0 * mu - 1.0) / (mu + 1.0));
}

double mu_from_delta_d(double target) {
    if (!(target >= 0.0 && target < 1.0)) throw DomainError("mu_from_delta_d requires 0 <= target < 1");
    if (target == 0.0) return 1.0;
    if (target > delta_d(kMuBracketHigh)) {
        throw DomainError("mu_from_delta_d: target is beyond delta_d(1e12)");
    }
    // delta_d is increasing; bisect on log(mu).
    double lo = 0.0;
    double hi = std::log(kMuBracketHigh);
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 400; ++it) {
        mid = 0.5 * (lo + hi);
        const double f = delta_d(std::exp(mid)) - target;
        if (std::abs(f) <= 1e-12) break;
        if (f < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-16 * std::max(1.0, hi)) break;
    }
    const double mu = std::exp(mid);
    if (std::abs(delta_d(mu) - target) > 1e-10) {
        throw NumericalError("mu_from_delta_d: bisection did not reach 1e-10");
    }
    return mu;
}

CorrelationBudget correlation_budget(double mu) { return {mu, delta_c(mu), delta_d(mu)}; }

InfoBounds info_bounds(double p_upper, double p_lower) {
    if (!(p_lower >= -kProbabilitySlack && p_lower <= p_upper + kProbabilitySlack &&
          p_upper <= 0.5 + kProbabilitySlack)) {
        throw DomainError("info_bounds requires 0 <= p_lower <= p_upper <= 1/2");
    }
    auto clamp = [](double p) { return std::min(0.5, std::max(0.0, p)); };
    const double hi = clamp(p_upper);
    const double lo = std::min(clamp(p_lower), hi);
    return {1.0 - binary_entropy(hi), 1.0 - binary_entropy(lo)};
}

}  // namespace gaussdisc
