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

#include "gaussdisc/asymptotics.h"

#include <cmath>

#include "gaussdisc/chernoff_global.h"
#include "gaussdisc/correlations.h"
#include "gaussdisc/errors.h"
#include "gaussdisc/local_measurement.h"

namespace gaussdisc {

double kappa_global(double mu) {
    if (!(mu >= 1.0)) throw DomainError("kappa_global requires mu >= 1");
    if (mu == 1.0) return 0.0;
    return -std::log(qcb_global(mu).q_value);
}

double kappa_local(double mu) {
    if (!(mu >= 1.0)) throw DomainError("kappa_local requires mu >= 1");
    if (mu == 1.0) return 0.0;
    return -std::log(2.0 * p_upper_local(mu).p_upper);
}

ExponentReport exponents(double mu) {
    if (!(mu > 1.0)) throw DomainError("exponents requires mu > 1 (the ratio is 0/0 at mu = 1)");
    ExponentReport r;
    r.kappa = kappa_global(mu);
    r.kappa_loc = kappa_local(mu);
    if (!(r.kappa_loc > 0.0)) throw DomainError("exponents: local exponent underflows to 0; mu is too close to 1");
    r.delta = r.kappa - r.kappa_loc;
    r.ratio = r.kappa / r.kappa_loc;
    r.ratio_db = 10.0 * std::log10(r.ratio);
    return r;
}

double multicopy_p_upper(double mu, int copies) {
    if (!(mu >= 1.0)) throw DomainError("multicopy_p_upper requires mu >= 1");
    if (copies < 1) throw DomainError("multicopy_p_upper requires copies >= 1");
    if (mu == 1.0) return 0.5;
    return 0.5 * std::pow(qcb_global(mu).q_value, copies);
}

std::vector<GainRow> gain_curves(std::span<const double> mu_grid) {
    std::vector<GainRow> rows;
    rows.reserve(mu_grid.size());
    double previous = 1.0;
    for (double mu : mu_grid) {
        if (!(mu > 1.0)) throw DomainError("gain_curves requires every grid value > 1");
        if (mu < previous) throw DomainError("gain_curves requires a sorted grid");
        previous = mu;
        rows.push_back({mu, delta_c(mu), delta_d(mu), exponents(mu)});
    }
    return rows;
}

}  // namespace gaussdisc
