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

#ifndef GAUSSDISC_LOCAL_MEASUREMENT_H
#define GAUSSDISC_LOCAL_MEASUREMENT_H

#include <vector>

#include "gaussdisc/gaussian_core.h"

namespace gaussdisc {

/// Single-mode Gaussian POVM whose seed state has CM
/// eta R(theta) diag(lambda, 1/lambda) R(-theta).
struct GaussianPovm {
    double eta = 1.0;     ///< noise factor, >= 1 (eta = 1 is rank one)
    double theta = 0.0;   ///< squeezing angle, radians
    double lambda = 1.0;  ///< squeezing asymmetry, > 0

    static GaussianPovm heterodyne() { return {1.0, 0.0, 1.0}; }

    /// Throws DomainError for eta < 1, lambda <= 0 or non-finite parameters.
    void validate() const;
    Mat2 seed_cm() const;
};

/// State of mode A after measuring mode B of V(mu, g, g).
///
/// Conditioned on the outcome x, mode A has CM v_cond and mean
/// a = outcome_gain * x; over outcomes a is Gaussian with covariance v_mod.
struct ConditionalPreparation {
    Mat2 v_cond = Mat2::Identity();
    Mat2 v_mod = Mat2::Zero();
    Mat2 outcome_gain = Mat2::Zero();
};

/// Conditioning of V(mu, g, g) on a Gaussian measurement of mode B:
/// v_mod = g^2 (mu I + V_sigma)^{-1}, v_cond = mu I - v_mod.
ConditionalPreparation condition_on_povm(double mu, double g, const GaussianPovm& povm);

/// epsilon = 2 (mu - 1) / (mu + 1). Heterodyning rho_1 leaves mode A with CM
/// (1 + epsilon) I and modulation (mu - 1 - epsilon) I.
double heterodyne_epsilon(double mu);

/// Displacement-averaged s-overlap between the thermal state mu I and the
/// state remotely prepared on mode A by measuring mode B of V(mu, g, g).
double s_overlap_local(double mu, double g, double s, const GaussianPovm& povm);

/// Same, for the maximally correlated separable state (g = mu - 1).
double s_overlap_local(double mu, double s, const GaussianPovm& povm);

/// Closed form of the heterodyne s-overlap:
/// 2 G_s(mu) G_{1-s}(1+eps) / [Lambda_s(mu) + Lambda_{1-s}(1+eps) + (mu-1) eps / 2].
double s_overlap_heterodyne(double mu, double s);

struct LocalBounds {
    double p_upper = 0.5;
    double p_lower = 0.5;
    double s_star = 0.5;
};

/// Local Chernoff bound P_loc+ = inf_s Q_s(Het) / 2. Only p_upper and s_star are set.
LocalBounds p_upper_local(double mu);

/// Heterodyne-conditioned fidelity between thermal mu I and the displaced
/// thermal state (1 + eps) I, as a function of the heterodyne outcome x:
/// 2 exp[-eps^2 |x|^2 / (4 (mu + 1 + eps))] / [1 + mu (1 + eps) - 2 (mu - 1) sqrt(2 mu / (mu + 1))].
/// The remote displacement in vacuum-unit quadratures is (eps / sqrt 2) x.
double fidelity_heterodyne(double mu, const Vec2& outcome);

/// fidelity_heterodyne expressed through the physical displacement a.
double fidelity_heterodyne_at_displacement(double mu, const Vec2& displacement);

/// Uhlmann fidelity of two single-mode Gaussian states with CMs v_a and v_b
/// whose means differ by `displacement`.
double gaussian_fidelity(const Mat2& v_a, const Mat2& v_b, const Vec2& displacement);

/// Local lower bound: average over the heterodyne modulation of
/// (1 - sqrt(1 - F)) / 2, reduced to a radial Gauss-Kronrod quadrature.
double p_lower_local(double mu);

/// The same averaged fidelity bound for an arbitrary POVM on mode B of
/// V(mu, g, g); integrates the anisotropic modulation in polar coordinates.
double p_lower_local_povm(double mu, double g, const GaussianPovm& povm);

/// Both local bounds at one mu.
LocalBounds local_bounds(double mu);

/// Outcome of a lambda-scan around the heterodyne point.
struct OptimalityScan {
    double mu = 1.0;
    double g = 0.0;
    double s = 0.5;
    std::vector<double> lambdas;
    std::vector<double> values;
    std::size_t argmin = 0;
    double lambda_at_min = 1.0;
    double derivative_at_one = 0.0;
    bool minimum_at_one = false;
    bool stationary_at_one = false;

    bool passed() const { return minimum_at_one && stationary_at_one; }
    /// Throws ReportFailure unless passed().
    void require() const;
};

inline constexpr int kLambdaGridPoints = 81;
inline constexpr double kLambdaGridMin = 0.1;
inline constexpr double kLambdaGridMax = 10.0;
inline constexpr double kStationarityTolerance = 1e-6;

/// The 81-point log grid on [0.1, 10]; its centre entry is exactly 1.
std::vector<double> lambda_log_grid();

/// Scans Q_s(mu, g, lambda) over the lambda grid with eta = 1, theta = 0 and
/// checks that the minimum is at lambda = 1 with vanishing central-difference
/// derivative there.
OptimalityScan verify_heterodyne_optimality(double mu, double g, double s);

/// Same scan for the averaged fidelity lower bound (no s dependence).
OptimalityScan verify_heterodyne_fidelity_optimality(double mu, double g);

}  // namespace gaussdisc

#endif
