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

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decoder.hpp"
#include "noise.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "tf_algebra.hpp"

namespace tfgkp {

/// Effective noise on the extracted syndrome. It lumps ancilla finite energy,
/// detector resolution, and any back-action of the interferometric mixing
/// into one Gaussian width per quadrature. (0, 0) is ideal extraction.
class AncillaModel {
   public:
    AncillaModel() = default;
    AncillaModel(double sigma_meas_tau, double sigma_meas_omega) : noise_(sigma_meas_tau, sigma_meas_omega) {}

    static AncillaModel ideal() { return {}; }
    static AncillaModel matching(const NoiseModel &channel) {
        return {channel.sigma_tau(), channel.sigma_omega()};
    }

    double sigma_meas_tau() const { return noise_.sigma_tau(); }
    double sigma_meas_omega() const { return noise_.sigma_omega(); }
    const NoiseModel &noise() const { return noise_; }
    bool ideal_extraction() const { return noise_.noiseless(); }

   private:
    NoiseModel noise_;
};

/// Both quadrature syndromes: the displacement plus measurement noise, taken
/// modulo sqrt(pi) into the half-open half cell. With an ideal ancilla no
/// random numbers are consumed.
inline PhasePoint measure_syndrome(const PhasePoint &delta, const AncillaModel &anc, RngStream &rng) {
    require_finite(delta, "measure_syndrome displacement");
    PhasePoint noisy = delta;
    if (!anc.ideal_extraction()) {
        noisy = noisy + sample_displacement(anc.noise(), rng);
    }
    return {reduce_to_cell(noisy.tau).remainder, reduce_to_cell(noisy.omega).remainder};
}

struct RecoveryResult {
    PhasePoint residual;
    Pauli frame_increment = Pauli::I;
};

/// Applies D(-syndrome). What remains is close to a lattice vector; its parity
/// is recorded as a logical frame update and the in-cell remainder carries on
/// to the next cycle.
inline RecoveryResult apply_recovery(const PhasePoint &delta, const PhasePoint &syndrome) {
    require_finite(delta, "apply_recovery displacement");
    require_finite(syndrome, "apply_recovery syndrome");
    const auto in_cell = [](double v) { return v >= -kHalfCell && v < kHalfCell; };
    if (!in_cell(syndrome.tau) || !in_cell(syndrome.omega)) {
        throw std::domain_error("apply_recovery: syndrome outside [-sqrt(pi)/2, sqrt(pi)/2)");
    }
    const DecodeOutcome d = decode(delta - syndrome);
    return {d.residual, d.logical_class};
}

struct CycleRecord {
    int cycle = 0;
    PhasePoint syndrome;
    PhasePoint residual_after;
    Pauli frame_increment = Pauli::I;
    Pauli frame = Pauli::I;
};

/// One trial of repeated correction: every cycle adds a channel displacement,
/// extracts the syndrome, and recovers. Draws from RngStream(seed, trial).
inline std::vector<CycleRecord> simulate_trajectory(const NoiseModel &channel, const AncillaModel &anc, int n_cycles,
                                                    std::uint64_t seed, std::uint64_t trial) {
    if (n_cycles < 1) {
        throw std::domain_error("simulate_trajectory: n_cycles must be >= 1");
    }
    RngStream rng(seed, trial);
    std::vector<CycleRecord> records;
    records.reserve(static_cast<std::size_t>(n_cycles));
    PhasePoint delta{};
    Pauli frame = Pauli::I;
    for (int k = 1; k <= n_cycles; ++k) {
        delta = delta + sample_displacement(channel, rng);
        const PhasePoint syndrome = measure_syndrome(delta, anc, rng);
        const RecoveryResult rec = apply_recovery(delta, syndrome);
        frame = frame * rec.frame_increment;
        delta = rec.residual;
        records.push_back({k, syndrome, rec.residual, rec.frame_increment, frame});
    }
    return records;
}

struct CycleStats {
    int cycle = 0;
    /// Fraction of trials whose frame changed during this cycle.
    double per_cycle_error = 0.0;
    /// Fraction of trials whose accumulated frame is not I after this cycle.
    double cumulative_error = 0.0;
    /// Binomial standard error of cumulative_error.
    double std_error = 0.0;
};

namespace detail {

inline void require_counts(int n_cycles, std::uint64_t trials, const char *who) {
    if (n_cycles < 1) throw std::domain_error(std::string(who) + ": n_cycles must be >= 1");
    if (trials == 0) throw std::domain_error(std::string(who) + ": trials must be >= 1");
}

inline double binomial_stderr(double p, std::uint64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

// Sums per-worker integer tallies; integer addition keeps the result
// independent of how trials were split.
inline std::vector<std::uint64_t> merge(const std::vector<std::vector<std::uint64_t>> &parts, std::size_t n) {
    std::vector<std::uint64_t> out(n, 0);
    for (const auto &p : parts)
        for (std::size_t i = 0; i < n; ++i) out[i] += p[i];
    return out;
}

}  // namespace detail

/// Monte Carlo over independent trials of repeated correction. Trial t uses
/// stream index t, so any thread count gives the same statistics.
inline std::vector<CycleStats> run_cycles(const NoiseModel &channel, const AncillaModel &anc, int n_cycles,
                                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 1) {
    detail::require_counts(n_cycles, trials, "run_cycles");
    const unsigned workers = threads == 0 ? default_thread_count() : threads;
    const auto cycles = static_cast<std::size_t>(n_cycles);
    std::vector<std::vector<std::uint64_t>> changed(workers), wrong(workers);
    parallel_for_chunks(trials, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        changed[w].assign(cycles, 0);
        wrong[w].assign(cycles, 0);
        for (std::size_t t = begin; t < end; ++t) {
            RngStream rng(seed, t);
            PhasePoint delta{};
            Pauli frame = Pauli::I;
            for (std::size_t k = 0; k < cycles; ++k) {
                delta = delta + sample_displacement(channel, rng);
                const PhasePoint syndrome = measure_syndrome(delta, anc, rng);
                const RecoveryResult rec = apply_recovery(delta, syndrome);
                delta = rec.residual;
                frame = frame * rec.frame_increment;
                if (rec.frame_increment != Pauli::I) ++changed[w][k];
                if (frame != Pauli::I) ++wrong[w][k];
            }
        }
    });
    for (auto &v : changed) v.resize(cycles, 0);
    for (auto &v : wrong) v.resize(cycles, 0);
    const auto changed_total = detail::merge(changed, cycles);
    const auto wrong_total = detail::merge(wrong, cycles);
    std::vector<CycleStats> stats(cycles);
    const double n = static_cast<double>(trials);
    for (std::size_t k = 0; k < cycles; ++k) {
        const double cum = static_cast<double>(wrong_total[k]) / n;
        stats[k] = {static_cast<int>(k + 1), static_cast<double>(changed_total[k]) / n, cum,
                    detail::binomial_stderr(cum, trials)};
    }
    return stats;
}

/// Baseline without correction: displacements accumulate and the half-cell
/// criterion is checked after each cycle. per_cycle_error is the fraction of
/// trials that are inside the half cell before a cycle and outside after it.
inline std::vector<CycleStats> run_uncorrected(const NoiseModel &channel, int n_cycles, std::uint64_t trials,
                                               std::uint64_t seed, unsigned threads = 1) {
    detail::require_counts(n_cycles, trials, "run_uncorrected");
    const unsigned workers = threads == 0 ? default_thread_count() : threads;
    const auto cycles = static_cast<std::size_t>(n_cycles);
    std::vector<std::vector<std::uint64_t>> exits(workers), failed(workers);
    parallel_for_chunks(trials, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        exits[w].assign(cycles, 0);
        failed[w].assign(cycles, 0);
        for (std::size_t t = begin; t < end; ++t) {
            RngStream rng(seed, t);
            PhasePoint delta{};
            bool was_inside = true;
            for (std::size_t k = 0; k < cycles; ++k) {
                delta = delta + sample_displacement(channel, rng);
                const bool inside = inside_half_cell(delta);
                if (!inside) ++failed[w][k];
                if (was_inside && !inside) ++exits[w][k];
                was_inside = inside;
            }
        }
    });
    for (auto &v : exits) v.resize(cycles, 0);
    for (auto &v : failed) v.resize(cycles, 0);
    const auto exit_total = detail::merge(exits, cycles);
    const auto failed_total = detail::merge(failed, cycles);
    std::vector<CycleStats> stats(cycles);
    const double n = static_cast<double>(trials);
    for (std::size_t k = 0; k < cycles; ++k) {
        const double cum = static_cast<double>(failed_total[k]) / n;
        stats[k] = {static_cast<int>(k + 1), static_cast<double>(exit_total[k]) / n, cum,
                    detail::binomial_stderr(cum, trials)};
    }
    return stats;
}

}  // namespace tfgkp
