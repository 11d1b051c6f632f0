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

#ifndef GAUSSDISC_CORRELATIONS_H
#define GAUSSDISC_CORRELATIONS_H

// Entropic quantities. All information is measured in bits.

namespace gaussdisc {

/// Von Neumann entropy of a single-mode thermal state with CM x I.
/// h(1) = 0; throws DomainError for x < 1.
double entropy_h(double x);

/// Binary Shannon entropy, with H(0) = H(1) = 0.
double binary_entropy(double p);

/// Classical correlations of V(mu, mu-1, mu-1); the product state has none.
double delta_c(double mu);

/// Gaussian discord of V(mu, mu-1, mu-1). Lies in [0, 1).
double delta_d(double mu);

/// Inverse of delta_d by bisection in log(mu) over [1, 1e12].
double mu_from_delta_d(double target);

struct CorrelationBudget {
    double mu = 1.0;
    double delta_c = 0.0;
    double delta_d = 0.0;
};

CorrelationBudget correlation_budget(double mu);

/// Mutual-information interval implied by an error-probability interval.
struct InfoBounds {
    double i_lower = 0.0;  ///< 1 - H(p_upper)
    double i_upper = 0.0;  ///< 1 - H(p_lower)
};

/// Requires 0 <= p_lower <= p_upper <= 1/2 (up to 1e-12 slack).
InfoBounds info_bounds(double p_upper, double p_lower);

}  // namespace gaussdisc

#endif
