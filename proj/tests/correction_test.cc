// Copyright 2026 The tfgkp Authors
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

#include "tfgkp/correction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

using namespace tfgkp;

namespace {

double mean_per_cycle(const std::vector<CycleStats> &s) {
    double sum = 0.0;
    for (const auto &c : s) sum += c.per_cycle_error;
    return sum / static_cast<double>(s.size());
}

}  // namespace

TEST(Correction, measure_syndrome_examples) {
    RngStream rng(1, 0);
    const auto ideal = AncillaModel::ideal();
    EXPECT_EQ(measure_syndrome({0.3, -0.2}, ideal, rng), (PhasePoint{0.3, -0.2}));

    const auto s = measure_syndrome({0.95, 0.0}, ideal, rng);
    EXPECT_NEAR(s.tau, 0.95 - kSqrtPi, 1e-15);
    EXPECT_NEAR(s.tau, -0.8225, 1e-4);
    EXPECT_EQ(s.omega, 0.0);

    const auto full = measure_syndrome({kSqrtPi, 0.0}, ideal, rng);
    EXPECT_EQ(full, (PhasePoint{0.0, 0.0}));
}

TEST(Correction, ideal_syndrome_consumes_no_randomness) {
    RngStream a(4, 4), b(4, 4);
    measure_syndrome({0.1, 0.2}, AncillaModel::ideal(), a);
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Correction, noisy_syndrome_adds_measurement_noise) {
    const AncillaModel anc(0.05, 0.1);
    RngStream rng(6, 0);
    const int n = 200000;
    double vt = 0, vo = 0;
    for (int i = 0; i < n; ++i) {
        const auto s = measure_syndrome({0.0, 0.0}, anc, rng);
        vt += s.tau * s.tau;
        vo += s.omega * s.omega;
    }
    EXPECT_NEAR(std::sqrt(vt / n), 0.05, 0.001);
    EXPECT_NEAR(std::sqrt(vo / n), 0.1, 0.002);
}

TEST(Correction, syndrome_is_lattice_periodic) {
    std::mt19937_64 gen(43);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::uniform_int_distribution<int> k(-6, 6);
    RngStream rng(0, 0);
    for (int i = 0; i < 20000; ++i) {
        const PhasePoint d{u(gen), u(gen)};
        const PhasePoint v{k(gen) * kSqrtPi, k(gen) * kSqrtPi};
        const auto a = measure_syndrome(d, AncillaModel::ideal(), rng);
        const auto b = measure_syndrome(d + v, AncillaModel::ideal(), rng);
        // d is well inside the cell, so adding v and reducing recovers d up to
        // the rounding of the addition itself.
        EXPECT_NEAR(a.tau, b.tau, 1e-14);
        EXPECT_NEAR(a.omega, b.omega, 1e-14);
    }
}

TEST(Correction, apply_recovery_examples) {
    const auto exact = apply_recovery({0.3, -0.2}, {0.3, -0.2});
    EXPECT_EQ(exact.residual, (PhasePoint{0, 0}));
    EXPECT_EQ(exact.frame_increment, Pauli::I);

    RngStream rng(0, 0);
    const PhasePoint delta{0.95, 0.0};
    const auto syndrome = measure_syndrome(delta, AncillaModel::ideal(), rng);
    const auto r = apply_recovery(delta, syndrome);
    EXPECT_EQ(r.frame_increment, Pauli::Z);
    EXPECT_NEAR(r.residual.tau, 0.0, 1e-15);
    EXPECT_EQ(r.residual.omega, 0.0);

    const auto y = apply_recovery({-0.95, 0.95}, measure_syndrome({-0.95, 0.95}, AncillaModel::ideal(), rng));
    EXPECT_EQ(y.frame_increment, Pauli::Y);
}

TEST(Correction, apply_recovery_boundaries) {
    EXPECT_THROW(apply_recovery({0, 0}, {kHalfCell, 0}), std::domain_error);
    EXPECT_THROW(apply_recovery({0, 0}, {0, -kHalfCell - 1e-12}), std::domain_error);
    EXPECT_NO_THROW(apply_recovery({0, 0}, {-kHalfCell, 0}));
    // Exactly half a logical period resolves by the half-open convention.
    RngStream rng(0, 0);
    const PhasePoint edge{kHalfCell, 0.0};
    const auto s = measure_syndrome(edge, AncillaModel::ideal(), rng);
    EXPECT_EQ(s.tau, -kHalfCell);
    const auto r = apply_recovery(edge, s);
    EXPECT_EQ(r.frame_increment, Pauli::Z);
    EXPECT_EQ(r.residual.tau, 0.0);
}

TEST(Correction, ideal_single_shot_is_exact_inside_the_cell) {
    RngStream rng(0, 0);
    for (int i = 0; i < 100; ++i) {
        for (int j = 0; j < 100; ++j) {
            const PhasePoint delta{-kHalfCell + (i + 0.5) * kSqrtPi / 100.0, -kHalfCell + (j + 0.5) * kSqrtPi / 100.0};
            const auto r = apply_recovery(delta, measure_syndrome(delta, AncillaModel::ideal(), rng));
            ASSERT_EQ(r.residual, (PhasePoint{0, 0}));
            ASSERT_EQ(r.frame_increment, Pauli::I);
        }
    }
}

TEST(Correction, run_cycles_noiseless) {
    const auto stats = run_cycles(NoiseModel(0, 0), AncillaModel::ideal(), 10, 1000, 3);
    ASSERT_EQ(stats.size(), 10u);
    for (const auto &s : stats) {
        EXPECT_EQ(s.per_cycle_error, 0.0);
        EXPECT_EQ(s.cumulative_error, 0.0);
    }
    EXPECT_EQ(stats.front().cycle, 1);
    EXPECT_EQ(stats.back().cycle, 10);
}

TEST(Correction, run_cycles_validation) {
    EXPECT_THROW(run_cycles(NoiseModel(0.1, 0.1), AncillaModel::ideal(), 0, 10, 1), std::domain_error);
    EXPECT_THROW(run_cycles(NoiseModel(0.1, 0.1), AncillaModel::ideal(), 5, 0, 1), std::domain_error);
    EXPECT_THROW(run_uncorrected(NoiseModel(0.1, 0.1), 0, 10, 1), std::domain_error);
    EXPECT_THROW(run_uncorrected(NoiseModel(0.1, 0.1), 5, 0, 1), std::domain_error);
    EXPECT_THROW(simulate_trajectory(NoiseModel(0.1, 0.1), AncillaModel::ideal(), 0, 1, 0), std::domain_error);
}

TEST(Correction, frame_group_law_on_recorded_trajectories) {
    const NoiseModel channel(0.25 * kSqrtPi, 0.2 * kSqrtPi);
    const auto anc = AncillaModel::matching(channel);
    const int cycles = 12;
    const std::uint64_t trials = 1000;
    std::vector<std::uint64_t> wrong(cycles, 0), changed(cycles, 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto rec = simulate_trajectory(channel, anc, cycles, 77, t);
        Pauli frame = Pauli::I;
        for (int k = 0; k < cycles; ++k) {
            frame = frame * rec[k].frame_increment;
            EXPECT_EQ(rec[k].frame, frame);
            EXPECT_EQ(rec[k].cycle, k + 1);
            for (double v : {rec[k].syndrome.tau, rec[k].syndrome.omega, rec[k].residual_after.tau,
                             rec[k].residual_after.omega}) {
                EXPECT_GE(v, -kHalfCell);
                EXPECT_LT(v, kHalfCell);
            }
            if (rec[k].frame != Pauli::I) ++wrong[k];
            if (rec[k].frame_increment != Pauli::I) ++changed[k];
        }
    }
    const auto stats = run_cycles(channel, anc, cycles, trials, 77, 3);
    for (int k = 0; k < cycles; ++k) {
        EXPECT_EQ(stats[k].cumulative_error, static_cast<double>(wrong[k]) / trials);
        EXPECT_EQ(stats[k].per_cycle_error, static_cast<double>(changed[k]) / trials);
    }
}

TEST(Correction, run_cycles_thread_independent) {
    const NoiseModel channel(0.2 * kSqrtPi, 0.2 * kSqrtPi);
    const auto anc = AncillaModel::matching(channel);
    const auto a = run_cycles(channel, anc, 8, 30001, 5, 1);
    const auto b = run_cycles(channel, anc, 8, 30001, 5, 6);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].per_cycle_error, b[k].per_cycle_error);
        EXPECT_EQ(a[k].cumulative_error, b[k].cumulative_error);
    }
    const auto ua = run_uncorrected(channel, 8, 30001, 5, 1);
    const auto ub = run_uncorrected(channel, 8, 30001, 5, 5);
    for (std::size_t k = 0; k < ua.size(); ++k) EXPECT_EQ(ua[k].cumulative_error, ub[k].cumulative_error);
}

// With an ideal ancilla every cycle restarts from zero displacement, so the
// per-cycle logical error rate is the single-shot parity error rate.
TEST(Correction, ideal_correction_is_stationary) {
    const NoiseModel channel(0.2 * kSqrtPi, 0.2 * kSqrtPi);
    const auto stats = run_cycles(channel, AncillaModel::ideal(), 20, 100000, 11);
    const double mean = mean_per_cycle({stats.begin() + 1, stats.end()});
    for (std::size_t k = 1; k < stats.size(); ++k) {
        EXPECT_LT(stats[k].per_cycle_error, 2.0 * mean);
        EXPECT_GT(stats[k].per_cycle_error, 0.5 * mean);
    }
    // Parity error of one shot: odd nearest multiple along either axis.
    const double p_axis = std::erfc(0.5 * kSqrtPi / (std::sqrt(2.0) * channel.sigma_tau()));
    const double expected = 1.0 - (1.0 - p_axis) * (1.0 - p_axis);
    EXPECT_NEAR(mean, expected, 0.002);
}

TEST(Correction, smaller_channel_gives_smaller_rate) {
    double previous = -1.0;
    for (double w : {0.05, 0.1, 0.15}) {
        const NoiseModel channel(w * kSqrtPi, w * kSqrtPi);
        const auto stats = run_cycles(channel, AncillaModel::matching(channel), 20, 100000, 2);
        const double rate = mean_per_cycle(stats);
        EXPECT_GT(rate, previous) << w;
        previous = rate;
    }
}

TEST(Correction, uncorrected_single_cycle_equals_monte_carlo) {
    for (double w : {0.1, 0.25, 0.4}) {
        const NoiseModel channel(w * kSqrtPi, 0.7 * w * kSqrtPi);
        const auto u = run_uncorrected(channel, 1, 50000, 19);
        const auto mc = p_fail_monte_carlo(channel, 50000, 19);
        EXPECT_EQ(u[0].cumulative_error, mc.estimate);
        EXPECT_EQ(u[0].std_error, mc.std_error);
    }
}

TEST(Correction, uncorrected_follows_diffusive_closed_form) {
    const NoiseModel channel(0.1 * kSqrtPi, 0.1 * kSqrtPi);
    const auto stats = run_uncorrected(channel, 25, 200000, 29);
    for (int n : {4, 9, 16, 25}) {
        const double s = std::sqrt(static_cast<double>(n));
        const double expected = p_fail_analytic(NoiseModel(s * channel.sigma_tau(), s * channel.sigma_omega()));
        const auto &c = stats[static_cast<std::size_t>(n - 1)];
        EXPECT_LE(std::abs(c.cumulative_error - expected), 3.0 * c.std_error) << n;
    }
}
