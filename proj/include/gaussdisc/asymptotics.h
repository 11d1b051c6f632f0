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

#ifndef GAUSSDISC_ASYMPTOTICS_H
#define GAUSSDISC_ASYMPTOTICS_H

#include <span>
#include <vector>

// Multi-copy error exponents, in nats.

namespace gaussdisc {

/// kappa = -ln inf_s Q_s for the global detector; 0 at mu = 1.
double kappa_global(double mu);

/// kappa_loc = -ln inf_s Q_s(Het) for the local detector; 0 at mu = 1.
double kappa_local(double mu);

struct ExponentReport {
    double kappa = 0.0;
    double kappa_loc = 0.0;
    double delta = 0.0;     ///< kappa - kappa_loc
    double ratio = 1.0;     ///< kappa / kappa_loc
    double ratio_db = 0.0;  ///< 10 log10(ratio)
};

/// Requires mu > 1; the ratio is undefined when both exponents vanish.
ExponentReport exponents(double mu);

/// Chernoff estimate Q^M / 2 of the M-copy error probability.
double multicopy_p_upper(double mu, int copies);

struct GainRow {
    double mu = 1.0;
    double delta_c = 0.0;
    double delta_d = 0.0;
    ExponentReport exponents;
};

/// Exponent table over a sorted grid of mu > 1.
std::vector<GainRow> gain_curves(std::span<const double> mu_grid);

}  // namespace gaussdisc

#endif
