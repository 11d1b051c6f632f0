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

#include "gaussdisc/chernoff_global.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussdisc/errors.h"
#include "gaussdisc/scalar_minimize.h"

namespace gaussdisc {

namespace {

void require_open_unit(double s, const char* what) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError(std::string(what) + " requires 0 < s < 1");
}

// Numerically computed symplectic eigenvalues may undershoot 1 by rounding.
double snap_to_physical(double x) { return (x < 1.0 && x > 1.0 - 1e-9) ? 1.0 : x; }

struct PowerPair {
    double diff;  // (x+1)^s - (x-1)^s
    double sum;   // (x+1)^s + (x-1)^s
};

PowerPair powers(double s, double x) {
    if (x == 1.0) {
        const double p = std::pow(2.0, s);
        return {p, p};
    }
    const double low = std::pow(x - 1.0, s);
    const double diff = low * std::expm1(s * std::log1p(2.0 / (x - 1.0)));
    return {diff, diff + 2.0 * low};
}

}  // namespace

double g_weight(double s, double x) {
    require_open_unit(s, "g_weight");
    if (!(x >= 1.0)) throw DomainError("g_weight requires x >= 1");
    return std::pow(2.0, s) / powers(s, x).diff;
}

double lambda_weight(double s, double x) {
    require_open_unit(s, "lambda_weight");
    if (!(x >= 1.0)) throw DomainError("lambda_weight requires x >= 1");
    const auto p = powers(s, x);
    return p.sum / p.diff;
}

double s_overlap_two_mode(const WilliamsonDecomposition& a, const WilliamsonDecomposition& b, double s) {
    require_open_unit(s, "s_overlap_two_mode");
    const double am = snap_to_physical(a.nu_minus);
    const double ap = snap_to_physical(a.nu_plus);
    const double bm = snap_to_physical(b.nu_minus);
    const double bp = snap_to_physical(b.nu_plus);
    const double pi = 4.0 * g_weight(s, am) * g_weight(s, ap) * g_weight(1.0 - s, bm) * g_weight(1.0 - s, bp);

    Mat4 la = Mat4::Zero();
    la.diagonal() << lambda_weight(s, am), lambda_weight(s, am), lambda_weight(s, ap), lambda_weight(s, ap);
    Mat4 lb = Mat4::Zero();
    lb.diagonal() << lambda_weight(1.0 - s, bm), lambda_weight(1.0 - s, bm), lambda_weight(1.0 - s, bp),
        lambda_weight(1.0 - s, bp);
    const Mat4 sigma = a.s_matrix * la * a.s_matrix.transpose() + b.s_matrix * lb * b.s_matrix.transpose();
    const double det = sigma.determinant();
    if (!(det > 0.0)) throw NumericalError("s_overlap_two_mode: Sigma_s is not positive definite");
    return pi / std::sqrt(det);
}

double s_overlap_global(double mu, double s, OverlapPath path) {
    if (!(mu >= 1.0)) throw DomainError("s_overlap_global requires mu >= 1");
    require_open_unit(s, "s_overlap_global");
    if (path == OverlapPath::kFullDeterminant) {
        return s_overlap_two_mode(williamson_symmetric(make_state_zero(mu)), williamson_symmetric(make_state_one(mu)), s);
    }
    // rho_0: alpha_+- = mu, S_0 = I. rho_1: nu_- = 1, nu_+ = 2 mu - 1,
    // S_1 = O (Z + Z). O drops out of det Sigma_s, leaving a diagonal product.
    const double nu_plus = 2.0 * mu - 1.0;
    const double g0 = g_weight(s, mu);
    const double pi = 4.0 * g0 * g0 * g_weight(1.0 - s, 1.0) * g_weight(1.0 - s, nu_plus);
    const double l0 = lambda_weight(s, mu);
    const double sqrt_det = (l0 + lambda_weight(1.0 - s, 1.0)) * (l0 + lambda_weight(1.0 - s, nu_plus));
    return pi / sqrt_det;
}

SOverlapResult qcb_global(double mu) {
    if (!(mu >= 1.0)) throw DomainError("qcb_global requires mu >= 1");
    const auto best =
        brent_minimize([mu](double s) { return s_overlap_global(mu, s); }, kSMin, kSMax, kSTolerance, kSMaxIterations);
    const double q = std::min(1.0, best.value);
    return {best.x, q, 0.5 * q};
}

GlobalBounds bhattacharyya_global(double mu) {
    const auto chernoff = qcb_global(mu);
    const double b = std::min(1.0, s_overlap_global(mu, 0.5));
    const double p_lower = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - b * b)));
    return {chernoff.p_upper, p_lower, b};
}

}  // namespace gaussdisc
