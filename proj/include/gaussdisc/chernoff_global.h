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

#ifndef GAUSSDISC_CHERNOFF_GLOBAL_H
#define GAUSSDISC_CHERNOFF_GLOBAL_H

#include "gaussdisc/gaussian_core.h"

namespace gaussdisc {

/// The s-range searched by every Chernoff minimization. G_s degenerates at
/// the endpoints when a symplectic eigenvalue equals 1.
inline constexpr double kSMin = 1e-6;
inline constexpr double kSMax = 1.0 - 1e-6;
inline constexpr double kSTolerance = 1e-10;
inline constexpr int kSMaxIterations = 200;

/// G_s(x) = 2^s / ((x+1)^s - (x-1)^s), for 0 < s < 1 and x >= 1.
double g_weight(double s, double x);

/// Lambda_s(x) = ((x+1)^s + (x-1)^s) / ((x+1)^s - (x-1)^s), for 0 < s < 1 and x >= 1.
double lambda_weight(double s, double x);

enum class OverlapPath {
    kReduced,           ///< product of the four diagonal entries of the rotated Sigma_s
    kFullDeterminant,   ///< 4x4 determinant of Sigma_s assembled from both decompositions
};

/// Tr(rho_0^s rho_1^{1-s}) for rho_0 = V(mu, 0, 0) and rho_1 = V(mu, mu-1, mu-1).
double s_overlap_global(double mu, double s, OverlapPath path = OverlapPath::kReduced);

/// Tr(rho_a^s rho_b^{1-s}) for two zero-mean two-mode Gaussian states given
/// by their Williamson decompositions.
double s_overlap_two_mode(const WilliamsonDecomposition& a, const WilliamsonDecomposition& b, double s);

struct SOverlapResult {
    double s_star = 0.5;
    double q_value = 1.0;
    double p_upper = 0.5;
};

/// Quantum Chernoff bound P+ = inf_s Q_s / 2 for the global detector.
SOverlapResult qcb_global(double mu);

struct GlobalBounds {
    double p_upper = 0.5;
    double p_lower = 0.5;
    double bhattacharyya = 1.0;
};

/// Bhattacharyya lower bound (1 - sqrt(1 - B^2)) / 2 with B = Q_{1/2},
/// paired with the Chernoff upper bound.
GlobalBounds bhattacharyya_global(double mu);

}  // namespace gaussdisc

#endif
