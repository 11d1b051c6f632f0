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

#ifndef GAUSSDISC_SCALAR_MINIMIZE_H
#define GAUSSDISC_SCALAR_MINIMIZE_H

#include <cmath>
#include <string>
#include <utility>

#include "gaussdisc/errors.h"

namespace gaussdisc {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/// Brent's golden-section search with parabolic interpolation on [lo, hi].
///
/// Terminates once the bracket around the best point is narrower than
/// 2 * x_tolerance (plus a relative term at machine precision). Throws
/// NumericalError if that does not happen within max_iterations. A minimum
/// sitting on either endpoint is approached to within x_tolerance.
template <class F>
ScalarMinimum brent_minimize(F&& f, double lo, double hi, double x_tolerance = 1e-10, int max_iterations = 200) {
    constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt 5) / 2
    constexpr double kRelEps = 2.0e-16;

    double a = lo;
    double b = hi;
    double x = a + kGolden * (b - a);
    double w = x;
    double v = x;
    double fx = f(x);
    double fw = fx;
    double fv = fx;
    double d = 0.0;
    double e = 0.0;

    for (int it = 1; it <= max_iterations; ++it) {
        const double mid = 0.5 * (a + b);
        const double tol1 = kRelEps * std::abs(x) + x_tolerance / 2.0;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) {
            return {x, fx, it};
        }

        bool golden = true;
        if (std::abs(e) > tol1) {
            // Trial parabola through (v, fv), (w, fw), (x, fx).
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (mid - x >= 0.0) ? tol1 : -tol1;
                golden = false;
            }
        }
        if (golden) {
            e = (x >= mid) ? a - x : b - x;
            d = kGolden * e;
        }

        const double u = (std::abs(d) >= tol1) ? x + d : x + ((d >= 0.0) ? tol1 : -tol1);
        const double fu = f(u);

        if (fu <= fx) {
            if (u >= x) {
                a = x;
            } else {
                b = x;
            }
            v = w;
            fv = fw;
            w = x;
            fw = fx;
            x = u;
            fx = fu;
        } else {
            if (u < x) {
                a = u;
            } else {
                b = u;
            }
            if (fu <= fw || w == x) {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    throw NumericalError("brent_minimize: no convergence within " + std::to_string(max_iterations) + " iterations");
}

}  // namespace gaussdisc

#endif
