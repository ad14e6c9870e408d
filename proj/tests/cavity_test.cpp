// Copyright 2026 The qubitcorr Authors
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

#include "qubitcorr/cavity.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "gtest/gtest.h"
#include "qubitcorr/error.hpp"

using namespace qubitcorr;

TEST(noise_terms, cancel_for_random_parameters) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> kappa(0.01, 100.0), frac(0.0, 1.0), det(-50.0, 50.0), tau(1e-6, 20.0);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
        ResonatorParams p{kappa(gen), 0.0, det(gen)};
        p.kappa_out = frac(gen) * p.kappa;
        auto [k2, k3] = analytic_noise_terms(p, tau(gen));
        worst = std::max(worst, std::abs(k2 + k3));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(noise_terms, resonant_example_and_decay) {
    ResonatorParams p{1.0, 1.0, 0.0};
    for (double t : {0.1, 1.0, 3.0}) {
        auto [k2, k3] = analytic_noise_terms(p, t);
        EXPECT_NEAR(k2, -std::exp(-t / 2) / 4, 1e-16);
        EXPECT_NEAR(k3, std::exp(-t / 2) / 4, 1e-16);
    }
    auto [f2, f3] = analytic_noise_terms(ResonatorParams{2.0, 1.5, 0.7}, 200.0);
    EXPECT_LT(std::abs(f2), 1e-40);
    EXPECT_LT(std::abs(f3), 1e-40);
    EXPECT_THROW(analytic_noise_terms(p, 0.0), Error);
    EXPECT_THROW(analytic_noise_terms(p, -1.0), Error);
}

TEST(steady_state_fields, examples) {
    auto [a1, a0] = steady_state_fields(2.0, 3.0, 5.0, 4.0, 0.0);
    EXPECT_NEAR(a1.real(), 2.0 * 3.0 / (5.0 * 4.0), 1e-15);
    EXPECT_EQ(a1.imag(), 0.0);
    EXPECT_EQ(a0, -a1);
    auto [b1, b0] = steady_state_fields(2.0, 6.0, 5.0, 4.0, 1.3);
    auto [c1, c0] = steady_state_fields(2.0, 3.0, 5.0, 4.0, 1.3);
    EXPECT_NEAR(std::abs(b1), 2 * std::abs(c1), 1e-15);
    EXPECT_NEAR(std::abs(b0), 2 * std::abs(c0), 1e-15);
    EXPECT_EQ(c0, -c1);
    EXPECT_THROW(steady_state_fields(1, 1, 0.0, 1, 0), Error);
    EXPECT_THROW(steady_state_fields(1, 1, 1, 0.0, 0), Error);
}

TEST(steady_state_fields, dephasing_rate) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(0.1, 5.0), d(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const double chi = u(gen), eps = u(gen), om = u(gen), kap = u(gen), det = d(gen);
        auto [a1, a0] = steady_state_fields(chi, eps, om, kap, det);
        const double g = dephasing_from_fields(kap, a1, a0);
        const double expected = 2 * kap * chi * chi * eps * eps / (om * om * (kap * kap + 4 * det * det));
        EXPECT_NEAR(g, expected, 1e-12 * expected);
    }
}

TEST(resonator, parameter_validation) {
    EXPECT_THROW(validate_resonator({0.0, 0.0, 0.0}), Error);
    EXPECT_THROW(validate_resonator({1.0, 1.5, 0.0}), Error);
    EXPECT_THROW(validate_resonator({1.0, -0.1, 0.0}), Error);
    EXPECT_NO_THROW(validate_resonator({1.0, 0.0, 0.0}));
    EXPECT_NO_THROW(validate_resonator({1.0, 1.0, 3.0}));
    EXPECT_THROW(simulate_output_noise({1.0, 1.0, 0.0}, 0.1, 1.0, 0), Error);
}

TEST(resonator, propagator_preserves_vacuum_covariance) {
    for (ResonatorParams p : {ResonatorParams{1.0, 1.0, 0.0}, ResonatorParams{2.0, 0.7, 1.5}}) {
        auto prop = resonator_propagator(p, 0.01);
        Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
        cov(0, 0) = cov(1, 1) = 0.25;
        Eigen::Matrix3d next = prop.transition * cov * prop.transition.transpose() +
                               prop.noise_factor * prop.noise_factor.transpose();
        EXPECT_NEAR(next(0, 0), 0.25, 1e-12);
        EXPECT_NEAR(next(1, 1), 0.25, 1e-12);
        EXPECT_NEAR(next(0, 1), 0.0, 1e-12);
        // Integrated output over one step carries variance dt / 4.
        EXPECT_NEAR(next(2, 2), 0.25 * 0.01, 1e-12);
    }
}

TEST(resonator, output_noise_is_white) {
    const ResonatorParams p{1.0, 1.0, 0.0};
    const double dt = 0.05;
    auto y = simulate_output_noise(p, dt, 1e5, 3);
    ASSERT_EQ(y.size(), 2000000);
    EXPECT_EQ(y, simulate_output_noise(p, dt, 1e5, 3));
    auto c = lagged_autocorrelation(y, dt, 200);
    EXPECT_LE(std::abs(c.values(0) - 1 / (4 * dt)), 3 * c.standard_error(0));
    Eigen::VectorXd z = c.values.tail(200).cwiseQuotient(c.standard_error.tail(200));
    const double rms = std::sqrt(z.squaredNorm() / 200.0);
    EXPECT_GT(rms, 0.7);
    EXPECT_LT(rms, 1.3);
    EXPECT_LE((z.array().abs() > 3.0).count(), 4);
}

TEST(resonator, decoupled_output_is_plain_vacuum) {
    const double dt = 0.01;
    auto y = simulate_output_noise(ResonatorParams{2.0, 0.0, 0.4}, dt, 2000.0, 4);
    auto c = lagged_autocorrelation(y, dt, 10);
    EXPECT_LE(std::abs(c.values(0) - 1 / (4 * dt)), 3 * c.standard_error(0));
    for (Eigen::Index k = 1; k <= 10; ++k) {
        EXPECT_LE(std::abs(c.values(k)), 4 * c.standard_error(k));
    }
}

TEST(resonator, autocorrelation_argument_checks) {
    Eigen::VectorXd y = Eigen::VectorXd::Ones(50);
    EXPECT_THROW(lagged_autocorrelation(y, 0.1, 10, 100), Error);
    EXPECT_THROW(lagged_autocorrelation(y, 0.1, -1, 10), Error);
    auto c = lagged_autocorrelation(y, 0.1, 5, 10);
    EXPECT_NEAR(c.values(3), 1.0, 1e-15);
    EXPECT_EQ(c.size(), 6);
}
