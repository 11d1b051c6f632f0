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

#include "gaussdisc/local_measurement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gaussdisc/chernoff_global.h"
#include "gaussdisc/errors.h"
#include "gaussdisc/scalar_minimize.h"

namespace gaussdisc {

namespace {

constexpr double kQuadratureRelTol = 1e-8;
constexpr double kRadialCutoffSigmas = 12.0;
constexpr int kAngularNodes = 64;
constexpr double kDerivativeStep = 1e-4;

double snap_to_physical(double x) { return (x < 1.0 && x > 1.0 - 1e-9) ? 1.0 : x; }

void require_mu(double mu, const char* what) {
    if (!(mu >= 1.0) || !std::isfinite(mu)) throw DomainError(std::string(what) + " requires mu >= 1");
}

void require_correlation(double mu, double g, const char* what) {
    if (!(std::abs(g) <= mu - 1.0 + 1e-12 * std::max(1.0, mu * mu))) {
        throw DomainError(std::string(what) + " requires |g| <= mu - 1");
    }
}

double helstrom_from_fidelity(double f) { return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - f))); }

// Integrates f over [0, upper] and enforces the relative tolerance.
template <class F>
double radial_integral(F&& f, double upper, const char* what) {
    double error = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, upper, 20, 1e-10, &error);
    // Tail beyond the cutoff is below exp(-72) / 2 for a unit-variance radial weight.
    error += 0.5 * std::exp(-0.5 * kRadialCutoffSigmas * kRadialCutoffSigmas);
    if (!std::isfinite(value) || error > kQuadratureRelTol * std::abs(value)) {
        throw NumericalError(std::string(what) + ": quadrature missed relative tolerance 1e-8");
    }
    return value;
}

}  // namespace

void GaussianPovm::validate() const {
    if (!std::isfinite(eta) || !std::isfinite(theta) || !std::isfinite(lambda)) {
        throw DomainError("GaussianPovm: non-finite parameter");
    }
    if (eta < 1.0) throw DomainError("GaussianPovm: eta must be >= 1");
    if (!(lambda > 0.0)) throw DomainError("GaussianPovm: lambda must be > 0");
}

Mat2 GaussianPovm::seed_cm() const {
    validate();
    // An isotropic seed is rotation invariant; skip R(theta) so that every
    // angle yields the identical matrix.
    if (lambda == 1.0) return eta * Mat2::Identity();
    Mat2 d = Mat2::Zero();
    d(0, 0) = lambda;
    d(1, 1) = 1.0 / lambda;
    return eta * rotation(theta) * d * rotation(-theta);
}

ConditionalPreparation condition_on_povm(double mu, double g, const GaussianPovm& povm) {
    require_mu(mu, "condition_on_povm");
    require_correlation(mu, g, "condition_on_povm");
    const Mat2 inv = (mu * Mat2::Identity() + povm.seed_cm()).inverse();
    ConditionalPreparation prep;
    prep.v_mod = g * g * inv;
    prep.v_mod = 0.5 * (prep.v_mod + prep.v_mod.transpose()).eval();
    prep.v_cond = mu * Mat2::Identity() - prep.v_mod;
    prep.outcome_gain = std::numbers::sqrt2 * g * inv;
    return prep;
}

double heterodyne_epsilon(double mu) {
    require_mu(mu, "heterodyne_epsilon");
    return 2.0 * (mu - 1.0) / (mu + 1.0);
}

double s_overlap_local(double mu, double g, double s, const GaussianPovm& povm) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("s_overlap_local requires 0 < s < 1");
    const auto prep = condition_on_povm(mu, g, povm);
    const double nu = snap_to_physical(std::sqrt(prep.v_cond.determinant()));
    if (!(nu >= 1.0)) throw NumericalError("s_overlap_local: conditional state is unphysical");
    const double pi = 2.0 * g_weight(s, mu) * g_weight(1.0 - s, nu);
    // S S^T = V_{A|B} / nu for the single-mode symplectic decomposition.
    const Mat2 sigma = lambda_weight(s, mu) * Mat2::Identity() + lambda_weight(1.0 - s, nu) * prep.v_cond / nu;
    return pi / std::sqrt((sigma + prep.v_mod).determinant());
}

double s_overlap_local(double mu, double s, const GaussianPovm& povm) {
    require_mu(mu, "s_overlap_local");
    return s_overlap_local(mu, mu - 1.0, s, povm);
}

double s_overlap_heterodyne(double mu, double s) {
    const double eps = heterodyne_epsilon(mu);
    const double nu = 1.0 + eps;
    return 2.0 * g_weight(s, mu) * g_weight(1.0 - s, nu) /
           (lambda_weight(s, mu) + lambda_weight(1.0 - s, nu) + (mu - 1.0) * eps / 2.0);
}

LocalBounds p_upper_local(double mu) {
    require_mu(mu, "p_upper_local");
    const auto best = brent_minimize([mu](double s) { return s_overlap_heterodyne(mu, s); }, kSMin, kSMax,
                                     kSTolerance, kSMaxIterations);
    LocalBounds out;
    out.s_star = best.x;
    out.p_upper = 0.5 * std::min(1.0, best.value);
    out.p_lower = std::nan("");
    return out;
}

double fidelity_heterodyne(double mu, const Vec2& outcome) {
    const double eps = heterodyne_epsilon(mu);
    const double den = 1.0 + mu * (1.0 + eps) - 2.0 * (mu - 1.0) * std::sqrt(2.0 * mu / (mu + 1.0));
    return 2.0 * std::exp(-eps * eps * outcome.squaredNorm() / (4.0 * (mu + 1.0 + eps))) / den;
}

double fidelity_heterodyne_at_displacement(double mu, const Vec2& displacement) {
    const double eps = heterodyne_epsilon(mu);
    if (eps == 0.0) {
        // mu = 1: vacuum against a displaced vacuum.
        return std::exp(-displacement.squaredNorm() / 4.0);
    }
    return fidelity_heterodyne(mu, std::numbers::sqrt2 / eps * displacement);
}

double gaussian_fidelity(const Mat2& v_a, const Mat2& v_b, const Vec2& displacement) {
    const Mat2 sum = v_a + v_b;
    const double big = sum.determinant();
    const double small = std::max(0.0, (v_a.determinant() - 1.0) * (v_b.determinant() - 1.0));
    const double f0 = 2.0 / (std::sqrt(big + small) - std::sqrt(small));
    return f0 * std::exp(-0.5 * displacement.dot(sum.inverse() * displacement));
}

double p_lower_local(double mu) {
    require_mu(mu, "p_lower_local");
    const double eps = heterodyne_epsilon(mu);
    const double var = (mu - 1.0) - eps;
    if (!(var > 0.0)) {
        // No modulation: the displacement distribution is a delta at a = 0.
        return helstrom_from_fidelity(fidelity_heterodyne(mu, Vec2::Zero()));
    }
    const double sigma = std::sqrt(var);
    // Unit-variance radius t = r / sigma has density t exp(-t^2 / 2).
    auto integrand = [&](double t) {
        const double f = fidelity_heterodyne_at_displacement(mu, Vec2(sigma * t, 0.0));
        return t * std::exp(-0.5 * t * t) * helstrom_from_fidelity(f);
    };
    return radial_integral(integrand, kRadialCutoffSigmas, "p_lower_local");
}

double p_lower_local_povm(double mu, double g, const GaussianPovm& povm) {
    const auto prep = condition_on_povm(mu, g, povm);
    const Mat2 v0 = mu * Mat2::Identity();
    if (prep.v_mod.cwiseAbs().maxCoeff() == 0.0) {
        return helstrom_from_fidelity(gaussian_fidelity(v0, prep.v_cond, Vec2::Zero()));
    }
    Eigen::SelfAdjointEigenSolver<Mat2> es(prep.v_mod);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
        throw NumericalError("p_lower_local_povm: modulation covariance is not positive definite");
    }
    const Mat2 root = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal();
    // Fidelity depends on a only through a^T (v0 + v_cond)^{-1} a.
    const double f0 = gaussian_fidelity(v0, prep.v_cond, Vec2::Zero());
    const Mat2 metric = root.transpose() * (v0 + prep.v_cond).inverse() * root;
    auto integrand = [&](double t) {
        double acc = 0.0;
        for (int k = 0; k < kAngularNodes; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / kAngularNodes;
            const Vec2 z(std::cos(phi), std::sin(phi));
            const double f = f0 * std::exp(-0.5 * t * t * z.dot(metric * z));
            acc += helstrom_from_fidelity(f);
        }
        return t * std::exp(-0.5 * t * t) * acc / kAngularNodes;
    };
    return radial_integral(integrand, kRadialCutoffSigmas, "p_lower_local_povm");
}

LocalBounds local_bounds(double mu) {
    auto out = p_upper_local(mu);
    out.p_lower = p_lower_local(mu);
    return out;
}

std::vector<double> lambda_log_grid() {
    std::vector<double> grid(kLambdaGridPoints);
    const double lo = std::log10(kLambdaGridMin);
    const double hi = std::log10(kLambdaGridMax);
    for (int k = 0; k < kLambdaGridPoints; ++k) {
        grid[k] = std::pow(10.0, lo + (hi - lo) * k / (kLambdaGridPoints - 1));
    }
    return grid;
}

namespace {

template <class F>
OptimalityScan scan_lambda(double mu, double g, double s, F&& objective) {
    OptimalityScan scan;
    scan.mu = mu;
    scan.g = g;
    scan.s = s;
    scan.lambdas = lambda_log_grid();
    scan.values.reserve(scan.lambdas.size());
    for (double lam : scan.lambdas) scan.values.push_back(objective(lam));

    const auto centre = static_cast<std::size_t>(kLambdaGridPoints / 2);
    scan.argmin = static_cast<std::size_t>(
        std::distance(scan.values.begin(), std::min_element(scan.values.begin(), scan.values.end())));
    scan.lambda_at_min = scan.lambdas[scan.argmin];
    scan.minimum_at_one = scan.argmin == centre;

    const double h = kDerivativeStep;
    scan.derivative_at_one = (objective(1.0 + h) - objective(1.0 - h)) / (2.0 * h);
    scan.stationary_at_one = std::abs(scan.derivative_at_one) <= kStationarityTolerance;
    return scan;
}

void require_scan_domain(double mu, double g, const char* what) {
    require_mu(mu, what);
    if (!(g > 0.0)) throw DomainError(std::string(what) + " requires g > 0");
    require_correlation(mu, g, what);
}

}  // namespace

OptimalityScan verify_heterodyne_optimality(double mu, double g, double s) {
    require_scan_domain(mu, g, "verify_heterodyne_optimality");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("verify_heterodyne_optimality requires 0 < s < 1");
    return scan_lambda(mu, g, s, [&](double lam) { return s_overlap_local(mu, g, s, GaussianPovm{1.0, 0.0, lam}); });
}

OptimalityScan verify_heterodyne_fidelity_optimality(double mu, double g) {
    require_scan_domain(mu, g, "verify_heterodyne_fidelity_optimality");
    return scan_lambda(mu, g, std::nan(""),
                       [&](double lam) { return p_lower_local_povm(mu, g, GaussianPovm{1.0, 0.0, lam}); });
}

void OptimalityScan::require() const {
    if (passed()) return;
    std::ostringstream msg;
    msg << "heterodyne not optimal at mu=" << mu << " g=" << g << " s=" << s << ": minimum at lambda="
        << lambda_at_min << ", derivative at 1 = " << derivative_at_one;
    throw ReportFailure(msg.str());
}

}  // namespace gaussdisc
