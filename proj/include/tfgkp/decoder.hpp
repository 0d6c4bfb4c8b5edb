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

#include "noise.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "special_functions.hpp"
#include "tf_algebra.hpp"

namespace tfgkp {

/// Logical Pauli class, phases dropped. Encoded as (x bit, z bit) so that
/// multiplication is XOR.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline constexpr Pauli operator*(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

inline constexpr Pauli pauli_from_parity(bool odd_tau, bool odd_omega) {
    // tau shifts by an odd multiple of sqrt(pi) act as Z, omega shifts as X.
    return static_cast<Pauli>((odd_omega ? 1u : 0u) | (odd_tau ? 2u : 0u));
}

inline const char *to_string(Pauli p) {
    switch (p) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::Z:
            return "Z";
        case Pauli::Y:
            return "Y";
    }
    return "?";
}

/// Nearest multiple k of sqrt(pi) to x, with ties resolved so that
/// x - k sqrt(pi) always lands in [-sqrt(pi)/2, sqrt(pi)/2).
struct CellReduction {
    long long multiple = 0;
    double remainder = 0.0;
};

inline CellReduction reduce_to_cell(double x) {
    double k = std::floor(x / kSqrtPi + 0.5);
    double r = x - k * kSqrtPi;
    // Guard the half-open interval against rounding in the division.
    if (r >= kHalfCell) {
        k += 1.0;
        r = x - k * kSqrtPi;
    } else if (r < -kHalfCell) {
        k -= 1.0;
        r = x - k * kSqrtPi;
    }
    return {static_cast<long long>(k), r};
}

inline bool inside_half_cell(const PhasePoint &p) {
    return std::abs(p.tau) < kHalfCell && std::abs(p.omega) < kHalfCell;
}

struct DecodeOutcome {
    PhasePoint residual;
    Pauli logical_class = Pauli::I;
    /// True iff the decoded displacement had both components strictly inside
    /// the half cell. This is the failure notion the analytic P_fail counts.
    bool half_cell_success = true;
};

/// Nearest-lattice decoding of a displacement error. The residual is the
/// displacement modulo sqrt(pi); logical_class is the parity-based logical
/// error (weaker than the half-cell criterion reported in half_cell_success).
inline DecodeOutcome decode(const PhasePoint &delta) {
    require_finite(delta, "decode displacement");
    const CellReduction t = reduce_to_cell(delta.tau);
    const CellReduction o = reduce_to_cell(delta.omega);
    return {{t.remainder, o.remainder}, pauli_from_parity(t.multiple % 2 != 0, o.multiple % 2 != 0),
            inside_half_cell(delta)};
}

/// 1 - erf(sqrt(pi) / (2 sqrt(2) sigma_tau)) * erf(sqrt(pi) / (2 sqrt(2) sigma_omega)).
///
/// Evaluated as a + b - a*b with a, b the per-axis erfc tails, which keeps
/// relative precision for tiny failure probabilities. A zero width contributes
/// no failure.
inline double p_fail_analytic(const NoiseModel &model) {
    const auto tail = [](double sigma) {
        if (sigma == 0.0) return 0.0;
        return special::erfc(kSqrtPi / (2.0 * std::numbers::sqrt2 * sigma));
    };
    const double a = tail(model.sigma_tau());
    const double b = tail(model.sigma_omega());
    return a + b - a * b;
}

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
};

inline MonteCarloEstimate make_estimate(std::uint64_t failures, std::uint64_t trials) {
    const double p = static_cast<double>(failures) / static_cast<double>(trials);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials, failures};
}

/// Empirical half-cell failure rate. Trial t draws its displacement from
/// RngStream(seed, t), so the estimate does not depend on the thread count.
inline MonteCarloEstimate p_fail_monte_carlo(const NoiseModel &model, std::uint64_t trials, std::uint64_t seed,
                                             unsigned threads = 1) {
    if (trials == 0) {
        throw std::domain_error("p_fail_monte_carlo: trials must be >= 1");
    }
    const unsigned workers = threads == 0 ? default_thread_count() : threads;
    std::vector<std::uint64_t> failures(workers, 0);
    parallel_for_chunks(trials, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        std::uint64_t local = 0;
        for (std::size_t t = begin; t < end; ++t) {
            RngStream rng(seed, t);
            if (!inside_half_cell(sample_displacement(model, rng))) ++local;
        }
        failures[w] = local;
    });
    std::uint64_t total = 0;
    for (auto f : failures) total += f;
    return make_estimate(total, trials);
}

struct FailureMap {
    std::vector<double> sigma_tau_axis;
    std::vector<double> sigma_omega_axis;
    /// Row-major: p_fail[i * sigma_omega_axis.size() + j] is the cell at
    /// (sigma_tau_axis[i], sigma_omega_axis[j]).
    std::vector<double> p_fail;
    /// Monte Carlo standard errors (zeros for the analytic mode).
    std::vector<double> std_error;

    double at(std::size_t i, std::size_t j) const { return p_fail[i * sigma_omega_axis.size() + j]; }
};

struct FailureMapMode {
    enum class Kind { Analytic, MonteCarlo } kind = Kind::Analytic;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    static FailureMapMode analytic() { return {}; }
    static FailureMapMode monte_carlo(std::uint64_t trials, std::uint64_t seed) {
        return {Kind::MonteCarlo, trials, seed};
    }
};

inline void validate_width_axis(const std::vector<double> &axis, const char *name) {
    if (axis.empty()) {
        throw std::domain_error(std::string(name) + " axis is empty");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i]) || axis[i] < 0.0) {
            throw std::domain_error(std::string(name) + " axis values must be finite and >= 0");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw std::domain_error(std::string(name) + " axis must be strictly increasing");
        }
    }
}

/// Stream seed for Monte Carlo cell (row, col) of a failure map.
inline std::uint64_t cell_seed(std::uint64_t seed, std::size_t row, std::size_t col) {
    return derive_seed(derive_seed(seed, row), col);
}

inline FailureMap failure_map(const std::vector<double> &tau_axis, const std::vector<double> &omega_axis,
                              const FailureMapMode &mode, unsigned threads = 1) {
    validate_width_axis(tau_axis, "sigma_tau");
    validate_width_axis(omega_axis, "sigma_omega");
    if (mode.kind == FailureMapMode::Kind::MonteCarlo && mode.trials == 0) {
        throw std::domain_error("failure_map: Monte Carlo mode needs trials >= 1");
    }
    FailureMap map{tau_axis, omega_axis, {}, {}};
    const std::size_t cols = omega_axis.size();
    const std::size_t cells = tau_axis.size() * cols;
    map.p_fail.assign(cells, 0.0);
    map.std_error.assign(cells, 0.0);
    parallel_for_chunks(cells, threads, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t c = begin; c < end; ++c) {
            const std::size_t i = c / cols;
            const std::size_t j = c % cols;
            const NoiseModel model(tau_axis[i], omega_axis[j]);
            if (mode.kind == FailureMapMode::Kind::Analytic) {
                map.p_fail[c] = p_fail_analytic(model);
            } else {
                const auto est = p_fail_monte_carlo(model, mode.trials, cell_seed(mode.seed, i, j), 1);
                map.p_fail[c] = est.estimate;
                map.std_error[c] = est.std_error;
            }
        }
    });
    return map;
}

}  // namespace tfgkp
