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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "gaussdisc/chernoff_global.h"
#include "gaussdisc/errors.h"

using namespace gaussdisc;

namespace {

GaussianPovm random_povm(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> eta(1.0, 4.0);
    std::uniform_real_distribution<double> theta(0.0, M_PI);
    std::uniform_real_distribution<double> log_lambda(std::log(0.05), std::log(20.0));
    return {eta(rng), theta(rng), std::exp(log_lambda(rng))};
}

}  // namespace

TEST(local_measurement, povm_validation) {
    ASSERT_NO_THROW(GaussianPovm::heterodyne().validate());
    ASSERT_EQ(GaussianPovm::heterodyne().seed_cm(), Mat2::Identity());
    ASSERT_THROW((GaussianPovm{0.9, 0, 1}).validate(), DomainError);
    ASSERT_THROW((GaussianPovm{1, 0, 0}).validate(), DomainError);
    ASSERT_THROW((GaussianPovm{1, std::nan(""), 1}).validate(), DomainError);
    const Mat2 seed = GaussianPovm{2.0, 0.3, 4.0}.seed_cm();
    ASSERT_NEAR(seed.determinant(), 4.0, 1e-12);
}

TEST(local_measurement, epsilon) {
    ASSERT_EQ(heterodyne_epsilon(1.0), 0.0);
    ASSERT_NEAR(heterodyne_epsilon(2.0), 2.0 / 3.0, 1e-15);
    ASSERT_NEAR(heterodyne_epsilon(1e9), 2.0, 1e-8);
    ASSERT_THROW(heterodyne_epsilon(0.5), DomainError);
}

TEST(local_measurement, heterodyne_conditioning) {
    const double mu = 2.0;
    const double eps = heterodyne_epsilon(mu);
    const auto c = condition_on_povm(mu, mu - 1, GaussianPovm::heterodyne());
    ASSERT_TRUE(c.v_cond.isApprox((1 + eps) * Mat2::Identity(), 1e-14));
    ASSERT_TRUE(c.v_mod.isApprox((mu - 1 - eps) * Mat2::Identity(), 1e-14));
    // Outcome x maps to the displacement (eps / sqrt 2) x.
    ASSERT_TRUE(c.outcome_gain.isApprox(eps / std::sqrt(2.0) * Mat2::Identity(), 1e-14));
}

TEST(local_measurement, conditioning_identity_random) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> mu_dist(1.0, 50.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        const double mu = mu_dist(rng);
        const double g = frac(rng) * (mu - 1);
        const auto c = condition_on_povm(mu, g, random_povm(rng));
        ASSERT_LE((c.v_cond + c.v_mod - mu * Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        // The conditional state stays physical.
        ASSERT_GE(c.v_cond.determinant(), 1 - 1e-12);
    }
    ASSERT_THROW(condition_on_povm(2.0, 1.5, GaussianPovm::heterodyne()), DomainError);
}

TEST(local_measurement, heterodyne_overlap_closed_form) {
    ASSERT_NEAR(s_overlap_heterodyne(2.0, 0.5), 0.94717149081265878, 1e-13);
    for (double mu : {1.01, 2.0, 10.0, 500.0}) {
        for (double s : {0.1, 0.5, 0.9}) {
            const double a = s_overlap_heterodyne(mu, s);
            ASSERT_NEAR(s_overlap_local(mu, s, GaussianPovm::heterodyne()), a, 1e-12 * a) << mu << " " << s;
        }
    }
    ASSERT_EQ(s_overlap_heterodyne(1.0, 0.4), 1.0);
}

TEST(local_measurement, local_never_beats_global) {
    for (double mu : {1.01, 1.5, 2.0, 10.0, 500.0}) {
        for (double s : {0.1, 0.5, 0.9}) {
            ASSERT_GE(s_overlap_heterodyne(mu, s), s_overlap_global(mu, s)) << mu << " " << s;
        }
    }
}

TEST(local_measurement, noise_increases_overlap) {
    for (double mu : {1.5, 5.0}) {
        double prev = 0.0;
        for (double eta : {1.0, 1.5, 2.0, 4.0, 10.0}) {
            const double q = s_overlap_local(mu, 0.5, GaussianPovm{eta, 0.0, 1.0});
            ASSERT_GT(q, prev) << mu << " " << eta;
            ASSERT_LE(q, 1.0);
            prev = q;
        }
    }
}

TEST(local_measurement, squeezing_angle_irrelevant) {
    for (double theta : {0.0, 0.4, 1.3, 2.9}) {
        ASSERT_NEAR(s_overlap_local(3.0, 0.4, GaussianPovm{1.2, theta, 3.0}),
                    s_overlap_local(3.0, 0.4, GaussianPovm{1.2, 0.0, 3.0}), 1e-13);
    }
}

TEST(local_measurement, lambda_inversion_symmetry) {
    // lambda and 1/lambda are related by a quarter turn.
    for (double lambda : {0.2, 0.7, 3.0}) {
        ASSERT_NEAR(s_overlap_local(2.0, 1.0, 0.3, GaussianPovm{1, 0, lambda}),
                    s_overlap_local(2.0, 1.0, 0.3, GaussianPovm{1, 0, 1 / lambda}), 1e-13);
    }
}

TEST(local_measurement, uncorrelated_state_gives_one) {
    ASSERT_NEAR(s_overlap_local(3.0, 0.0, 0.5, GaussianPovm::heterodyne()), 1.0, 1e-15);
}

TEST(local_measurement, p_upper_local) {
    const auto b = p_upper_local(2.0);
    ASSERT_NEAR(b.p_upper, 0.47350352245, 1e-9);
    ASSERT_TRUE(std::isnan(b.p_lower));
    ASSERT_GT(b.s_star, 0.0);
    ASSERT_LT(b.s_star, 1.0);
    ASSERT_EQ(p_upper_local(1.0).p_upper, 0.5);
}

TEST(local_measurement, gaussian_fidelity) {
    const Mat2 i = Mat2::Identity();
    ASSERT_NEAR(gaussian_fidelity(i, i, Vec2(0, 0)), 1.0, 1e-15);
    // Coherent states: exp(-|d|^2 / 4) in vacuum-unit quadratures.
    ASSERT_NEAR(gaussian_fidelity(i, i, Vec2(1.0, 2.0)), std::exp(-5.0 / 4), 1e-14);
    ASSERT_NEAR(gaussian_fidelity(3 * i, 3 * i, Vec2(0, 0)), 1.0, 1e-14);
    // Thermal vs vacuum: 1 / (n + 1) with n = (3 - 1) / 2.
    ASSERT_NEAR(gaussian_fidelity(i, 3 * i, Vec2(0, 0)), 0.5, 1e-14);
    ASSERT_NEAR(gaussian_fidelity(2 * i, 5 * i, Vec2(0.3, 0)), gaussian_fidelity(5 * i, 2 * i, Vec2(-0.3, 0)), 1e-14);
}

TEST(local_measurement, fidelity_heterodyne) {
    ASSERT_NEAR(fidelity_heterodyne(2.0, Vec2(0, 0)), 0.98817536679052112, 1e-14);
    ASSERT_NEAR(fidelity_heterodyne(2.0, Vec2(1, 0)), 0.95867981800779308, 1e-14);
    ASSERT_NEAR(fidelity_heterodyne(2.0, Vec2(0, 1)), 0.95867981800779308, 1e-14);
    ASSERT_EQ(fidelity_heterodyne(1.0, Vec2(3, 4)), 1.0);
    for (double mu : {1.3, 2.0, 9.0}) {
        const double eps = heterodyne_epsilon(mu);
        const Vec2 x(0.7, -1.1);
        const Vec2 d = eps / std::sqrt(2.0) * x;
        const double general = gaussian_fidelity(mu * Mat2::Identity(), (1 + eps) * Mat2::Identity(), d);
        ASSERT_NEAR(fidelity_heterodyne(mu, x), general, 1e-13) << mu;
        ASSERT_NEAR(fidelity_heterodyne_at_displacement(mu, d), general, 1e-13) << mu;
    }
}

TEST(local_measurement, p_lower_local_values) {
    ASSERT_NEAR(p_lower_local(2.0), 0.35768293632097041, 1e-9);
    ASSERT_NEAR(p_lower_local(5.0), 0.20259876560368085, 1e-9);
    ASSERT_EQ(p_lower_local(1.0), 0.5);
    ASSERT_NEAR(p_lower_local_povm(2.0, 1.0, GaussianPovm::heterodyne()), p_lower_local(2.0), 1e-8);
    ASSERT_THROW(p_lower_local(0.3), DomainError);
}

TEST(local_measurement, p_lower_local_monte_carlo) {
    // Sample the heterodyne record of mode B directly from the joint CM and
    // condition mode A with the generic Schur complement.
    const double mu = 2.0;
    const Mat2 va = mu * Mat2::Identity();
    const Mat2 vab = (mu - 1) * Mat2::Identity();
    const Mat2 vb_noisy = (mu + 1) * Mat2::Identity();
    const Mat2 gain = vab * vb_noisy.inverse();
    const Mat2 cond = va - gain * vab.transpose();

    std::mt19937_64 rng(2024);
    std::normal_distribution<double> normal(0.0, std::sqrt(mu + 1));
    const int n = 1000000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        const Vec2 y(normal(rng), normal(rng));
        const double f = gaussian_fidelity(va, cond, gain * y);
        const double p = 0.5 * (1 - std::sqrt(std::max(0.0, 1 - f)));
        sum += p;
        sum_sq += p * p;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) / n);
    ASSERT_LE(std::abs(mean - p_lower_local(mu)), 3 * se) << mean << " +- " << se;
}

TEST(local_measurement, local_bounds_ordered) {
    for (double mu = 1.001; mu < 2000; mu *= 1.4) {
        const auto b = local_bounds(mu);
        ASSERT_LE(b.p_lower, b.p_upper) << mu;
        ASSERT_LE(b.p_upper, 0.5) << mu;
    }
}

TEST(local_measurement, lambda_grid) {
    const auto grid = lambda_log_grid();
    ASSERT_EQ(grid.size(), static_cast<std::size_t>(kLambdaGridPoints));
    ASSERT_EQ(grid[kLambdaGridPoints / 2], 1.0);
    ASSERT_NEAR(grid.front(), kLambdaGridMin, 1e-15);
    ASSERT_NEAR(grid.back(), kLambdaGridMax, 1e-13);
}

TEST(local_measurement, heterodyne_optimal_overlap) {
    for (double mu : {1.5, 2.0, 5.0, 20.0}) {
        for (double g : {0.4 * (mu - 1), mu - 1}) {
            for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const auto scan = verify_heterodyne_optimality(mu, g, s);
                ASSERT_TRUE(scan.minimum_at_one) << mu << " " << g << " " << s;
                ASSERT_TRUE(scan.stationary_at_one) << scan.derivative_at_one;
                ASSERT_EQ(scan.lambda_at_min, 1.0);
            }
        }
    }
    ASSERT_NO_THROW(verify_heterodyne_optimality(2.0, 1.0, 0.5).require());
    ASSERT_NO_THROW(verify_heterodyne_optimality(5.0, 4.0, 0.3).require());
    ASSERT_NO_THROW(verify_heterodyne_optimality(3.0, 1.0, 0.7).require());
    ASSERT_THROW(verify_heterodyne_optimality(2.0, 0.0, 0.5), DomainError);
    ASSERT_THROW(verify_heterodyne_optimality(2.0, 1.0, 1.0), DomainError);
}

TEST(local_measurement, failed_scan_reports) {
    OptimalityScan scan = verify_heterodyne_optimality(2.0, 1.0, 0.5);
    scan.minimum_at_one = false;
    ASSERT_THROW(scan.require(), ReportFailure);
}

TEST(local_measurement, heterodyne_optimal_fidelity_bound) {
    for (auto [mu, g] : {std::pair{2.0, 1.0}, {5.0, 4.0}, {20.0, 19.0}, {1.5, 0.2}, {3.0, 1.0}}) {
        const auto scan = verify_heterodyne_fidelity_optimality(mu, g);
        ASSERT_TRUE(scan.passed()) << mu << " " << g << " lambda_min=" << scan.lambda_at_min;
    }
}
