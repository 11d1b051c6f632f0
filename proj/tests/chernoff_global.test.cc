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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "gaussdisc/errors.h"
#include "test_util.test.h"

using namespace gaussdisc;

namespace {

// Tr(rho_a^s rho_b^{1-s}) for thermal states with CMs a I and b I, summed
// directly over the photon-number distributions.
double thermal_overlap(double a, double b, double s) {
    const double t = (a - 1) / (a + 1);
    const double u = (b - 1) / (b + 1);
    return std::pow(1 - t, s) * std::pow(1 - u, 1 - s) / (1 - std::pow(t, s) * std::pow(u, 1 - s));
}

WilliamsonDecomposition diagonal_state(double a, double b) {
    WilliamsonDecomposition w;
    w.nu_minus = a;
    w.nu_plus = b;
    return w;
}

}  // namespace

TEST(chernoff_global, weights) {
    ASSERT_NEAR(g_weight(0.5, 3.0), 2.414213562373095, 1e-14);
    ASSERT_NEAR(g_weight(0.5, 2.0), 1.9318516525781366, 1e-14);
    ASSERT_NEAR(lambda_weight(0.5, 2.0), 3.7320508075688773, 1e-14);
    ASSERT_NEAR(lambda_weight(0.5, 3.0), 5.8284271247461901, 1e-14);
    // Pure state: G_s(1) = 1, Lambda_s(1) = 1 for every s.
    for (double s : {0.1, 0.5, 0.9}) {
        ASSERT_NEAR(g_weight(s, 1.0), 1.0, 1e-15);
        ASSERT_NEAR(lambda_weight(s, 1.0), 1.0, 1e-15);
    }
    ASSERT_THROW(g_weight(0.0, 2.0), DomainError);
    ASSERT_THROW(g_weight(0.5, 0.9), DomainError);
    ASSERT_THROW(lambda_weight(1.0, 2.0), DomainError);
}

TEST(chernoff_global, weights_stable_near_one) {
    // Compare with the direct form in long double.
    const long double d = 1e-12L;
    const long double s = 0.3L;
    const long double hi = std::pow(2 + d, s);
    const long double lo = std::pow(d, s);
    const double x = 1 + 1e-12;
    ASSERT_NEAR(g_weight(0.3, x), static_cast<double>(std::pow(2.0L, s) / (hi - lo)), 1e-6);
    ASSERT_NEAR(lambda_weight(0.3, x), static_cast<double>((hi + lo) / (hi - lo)), 1e-6);
    const double big = 1e6;
    const double expected = (std::pow(big + 1, 0.5) + std::pow(big - 1, 0.5)) / (std::pow(big + 1, 0.5) - std::pow(big - 1, 0.5));
    ASSERT_NEAR(lambda_weight(0.5, big), expected, 1e-9 * expected);
    ASSERT_TRUE(std::isfinite(g_weight(0.5, 1e12)));
}

TEST(chernoff_global, thermal_products_match_photon_sums) {
    for (double a : {1.0, 1.5, 3.0}) {
        for (double b : {1.2, 2.0, 7.0}) {
            for (double s : {0.2, 0.5, 0.8}) {
                const double expected = thermal_overlap(a, b, s) * thermal_overlap(a, b, s);
                ASSERT_NEAR(s_overlap_two_mode(diagonal_state(a, a), diagonal_state(b, b), s), expected, 1e-13);
                const double mixed = thermal_overlap(a, b, s) * thermal_overlap(b, a, s);
                ASSERT_NEAR(s_overlap_two_mode(diagonal_state(a, b), diagonal_state(b, a), s), mixed, 1e-13);
            }
        }
    }
}

TEST(chernoff_global, known_values) {
    ASSERT_NEAR(s_overlap_global(2.0, 0.5), 0.79662553262508833, 1e-13);
    ASSERT_NEAR(s_overlap_global(1.5, 0.5), 0.88055579280481542, 1e-13);
    ASSERT_NEAR(s_overlap_global(2.0, 0.3), 0.86608696741964583, 1e-13);
    ASSERT_NEAR(s_overlap_global(2.0, 0.7), 0.73839924437138387, 1e-13);
    for (double s : {0.01, 0.5, 0.99}) ASSERT_EQ(s_overlap_global(1.0, s), 1.0);
    ASSERT_THROW(s_overlap_global(0.5, 0.5), DomainError);
    ASSERT_THROW(s_overlap_global(2.0, 1.0), DomainError);
}

TEST(chernoff_global, reduced_matches_full_determinant) {
    for (double mu : {1.001, 1.5, 2.0, 10.0, 1000.0}) {
        for (double s : {0.05, 0.3, 0.5, 0.7, 0.95}) {
            const double a = s_overlap_global(mu, s, OverlapPath::kReduced);
            const double b = s_overlap_global(mu, s, OverlapPath::kFullDeterminant);
            ASSERT_NEAR(a, b, 1e-11 * a) << mu << " " << s;
        }
    }
}

TEST(chernoff_global, identical_states_overlap_one) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        const auto w = williamson_numeric(random_cm(rng).cm);
        for (double s : {0.2, 0.5, 0.8}) ASSERT_NEAR(s_overlap_two_mode(w, w, s), 1.0, 1e-9);
    }
}

TEST(chernoff_global, swap_symmetry) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        const auto a = williamson_numeric(random_cm(rng).cm);
        const auto b = williamson_numeric(random_cm(rng).cm);
        for (double s : {0.1, 0.4, 0.75}) {
            ASSERT_NEAR(s_overlap_two_mode(a, b, s), s_overlap_two_mode(b, a, 1 - s), 1e-10);
        }
    }
}

TEST(chernoff_global, log_overlap_convex_in_s) {
    for (double mu : {1.1, 2.0, 50.0}) {
        const double h = 0.01;
        for (double s = 0.02; s < 0.98; s += 0.02) {
            const double second = std::log(s_overlap_global(mu, s - h)) - 2 * std::log(s_overlap_global(mu, s)) +
                                   std::log(s_overlap_global(mu, s + h));
            ASSERT_GE(second, -1e-12) << mu << " " << s;
        }
    }
}

TEST(chernoff_global, infimum_on_boundary) {
    // The overlap decreases all the way to s -> 1, where it tends to 2/(mu+1).
    for (double mu : {1.001, 1.5, 2.0, 10.0, 1000.0}) {
        const auto r = qcb_global(mu);
        ASSERT_GT(r.s_star, 0.999) << mu;
        ASSERT_NEAR(r.q_value, 2.0 / (mu + 1), 1e-5 * (2.0 / (mu + 1))) << mu;
        ASSERT_EQ(r.p_upper, 0.5 * r.q_value);
        ASSERT_LE(r.q_value, s_overlap_global(mu, 0.5));
    }
    ASSERT_EQ(qcb_global(1.0).q_value, 1.0);
    ASSERT_THROW(qcb_global(0.5), DomainError);
}

TEST(chernoff_global, bhattacharyya) {
    const auto b = bhattacharyya_global(2.0);
    ASSERT_NEAR(b.p_lower, 0.1977634367048742, 1e-12);
    ASSERT_NEAR(b.bhattacharyya, 0.79662553262508833, 1e-13);
    ASSERT_NEAR(b.p_upper, 1.0 / 3.0, 1e-6);
    ASSERT_LT(b.p_lower, b.p_upper);
    const auto one = bhattacharyya_global(1.0);
    ASSERT_EQ(one.p_lower, 0.5);
    ASSERT_EQ(one.p_upper, 0.5);
}

TEST(chernoff_global, bounds_ordered_on_grid) {
    for (double mu = 1.0005; mu < 2000; mu *= 1.17) {
        const auto b = bhattacharyya_global(mu);
        ASSERT_LE(b.p_lower, b.p_upper) << mu;
        ASSERT_LE(b.p_upper, 0.5) << mu;
        ASSERT_GE(b.p_lower, 0.0) << mu;
    }
}
