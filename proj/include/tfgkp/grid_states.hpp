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

// Finite-energy grid states modeled as a comb of Gaussians.
//
// psi(tau) = exp(i omega0 tau) * sum_k c_k exp(-(tau - mu_k)^2 / (4 s^2))
//
// with mu_k = tau0 + 2 sqrt(pi) k, s = sigma_tau (the standard deviation of
// each peak of |psi|^2) and real envelope weights
// c_k ~ exp(-(2 sqrt(pi) k)^2 sigma_omega^2 / 2), i.e. an amplitude envelope of
// width 1/sigma_omega centered on the grid offset. In the conjugate variable
// the comb then has peaks at multiples of sqrt(pi) of width ~ sigma_omega.
// The approximation degrades once sigma_tau * sigma_omega is not small.
//
// Each pair of peaks (j, k) contributes a Gaussian to the Wigner function at
// the midpoint m = (mu_j + mu_k)/2, modulated by cos(Omega (mu_j - mu_k)):
//
// W(tau, Omega) = sqrt(2/pi) s exp(-2 s^2 (Omega - omega0)^2)
//                 * sum_jk c_j c_k exp(-(tau - m_jk)^2 / (2 s^2)) cos((Omega - omega0) d_jk)

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tf_algebra.hpp"

namespace tfgkp {

inline constexpr double kDefaultGridWidthFactor = 0.2;  // widths default to 0.2 sqrt(pi)
inline constexpr int kDefaultPeaks = 7;
inline constexpr double kEnvelopeTruncation = 1e-12;

struct GridPeak {
    double center = 0.0;
    double weight = 0.0;
};

class GridStateModel {
   public:
    int logical_bit() const { return bit_; }
    double sigma_tau() const { return sigma_tau_; }
    double sigma_omega() const { return sigma_omega_; }
    int n_peaks() const { return n_peaks_; }
    const PhasePoint &offset() const { return offset_; }
    /// Retained peaks after envelope truncation, with normalized weights.
    const std::vector<GridPeak> &peaks() const { return peaks_; }

    friend GridStateModel make_logical(int bit, double sigma_tau, double sigma_omega, int n_peaks);

   private:
    int bit_ = 0;
    double sigma_tau_ = 0.0;
    double sigma_omega_ = 0.0;
    int n_peaks_ = 1;
    PhasePoint offset_{};
    std::vector<GridPeak> peaks_;
};

/// Overlap integral of two unnormalized peaks of width s separated by d:
/// int exp(-(t-a)^2/(4s^2)) exp(-(t-b)^2/(4s^2)) dt.
inline double peak_overlap(double s, double d) {
    return std::sqrt(2.0 * std::numbers::pi) * s * std::exp(-d * d / (8.0 * s * s));
}

/// Envelope weight of the peak k stabilizer periods away from the center.
inline double envelope_weight(int k, double sigma_omega) {
    const double x = kTwoSqrtPi * k;
    return std::exp(-x * x * sigma_omega * sigma_omega / 2.0);
}

/// Builds |0_L> (grid at tau = 0) or |1_L> (grid at tau = sqrt(pi)). Peaks
/// whose envelope weight is below 1e-12 of the central one are dropped.
inline GridStateModel make_logical(int bit, double sigma_tau, double sigma_omega, int n_peaks = kDefaultPeaks) {
    if (bit != 0 && bit != 1) throw std::domain_error("make_logical: bit must be 0 or 1");
    if (!std::isfinite(sigma_tau) || sigma_tau <= 0.0 || !std::isfinite(sigma_omega) || sigma_omega <= 0.0) {
        throw std::domain_error("make_logical: widths must be finite and > 0");
    }
    if (n_peaks < 1 || n_peaks % 2 == 0) throw std::domain_error("make_logical: n_peaks must be odd and >= 1");

    GridStateModel state;
    state.bit_ = bit;
    state.sigma_tau_ = sigma_tau;
    state.sigma_omega_ = sigma_omega;
    state.n_peaks_ = n_peaks;
    state.offset_ = bit == 0 ? PhasePoint{0.0, 0.0} : kLogicalZ;

    const int half = (n_peaks - 1) / 2;
    for (int k = -half; k <= half; ++k) {
        const double w = envelope_weight(k, sigma_omega);
        if (w < kEnvelopeTruncation) continue;
        state.peaks_.push_back({state.offset_.tau + kTwoSqrtPi * k, w});
    }
    double norm2 = 0.0;
    for (const auto &a : state.peaks_)
        for (const auto &b : state.peaks_) norm2 += a.weight * b.weight * peak_overlap(sigma_tau, a.center - b.center);
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &p : state.peaks_) p.weight *= scale;
    return state;
}

inline GridStateModel make_logical(int bit) {
    return make_logical(bit, kDefaultGridWidthFactor * kSqrtPi, kDefaultGridWidthFactor * kSqrtPi, kDefaultPeaks);
}

inline std::complex<double> wavefunction_tau(const GridStateModel &state, double tau) {
    const double s = state.sigma_tau();
    double sum = 0.0;
    for (const auto &p : state.peaks()) {
        const double x = tau - p.center;
        sum += p.weight * std::exp(-x * x / (4.0 * s * s));
    }
    return std::polar(sum, state.offset().omega * tau);
}

/// Wavefunction in the conjugate variable, psi~(Omega) = (2 pi)^(-1/2) int psi(tau) exp(-i Omega tau) dtau.
inline std::complex<double> wavefunction_omega(const GridStateModel &state, double omega) {
    const double s = state.sigma_tau();
    const double w = omega - state.offset().omega;
    const double amp = std::sqrt(2.0) * s * std::exp(-s * s * w * w);
    std::complex<double> sum = 0.0;
    for (const auto &p : state.peaks()) sum += p.weight * std::polar(1.0, -w * p.center);
    return amp * sum;
}

/// Closed-form Wigner function W(tau, Omega) = (1/pi) int psi*(tau+y) psi(tau-y) exp(2 i Omega y) dy.
inline double wigner(const GridStateModel &state, double tau, double omega) {
    const double s = state.sigma_tau();
    const double w = omega - state.offset().omega;
    const auto &peaks = state.peaks();
    double sum = 0.0;
    for (std::size_t j = 0; j < peaks.size(); ++j) {
        for (std::size_t k = j; k < peaks.size(); ++k) {
            const double m = 0.5 * (peaks[j].center + peaks[k].center);
            const double d = peaks[j].center - peaks[k].center;
            const double x = tau - m;
            double term = peaks[j].weight * peaks[k].weight * std::exp(-x * x / (2.0 * s * s));
            if (k != j) term *= 2.0 * std::cos(w * d);
            sum += term;
        }
    }
    return std::sqrt(2.0 / std::numbers::pi) * s * std::exp(-2.0 * s * s * w * w) * sum;
}

enum class Axis { Tau, Omega };

/// Probability densities |psi(tau)|^2 or |psi~(Omega)|^2 on a strictly
/// increasing grid.
inline std::vector<double> marginal(const GridStateModel &state, Axis axis, const std::vector<double> &grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw std::domain_error("marginal: grid must be finite and strictly increasing");
        }
    }
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        out.push_back(std::norm(axis == Axis::Tau ? wavefunction_tau(state, x) : wavefunction_omega(state, x)));
    }
    return out;
}

/// Couplings g_m normalized into the weights u_m = g_m / Lambda of the
/// pump-matched signal supermode, Lambda = sqrt(sum |g_m|^2).
struct SupermodeWeights {
    std::vector<std::complex<double>> weights;
    double lambda = 0.0;
};

inline SupermodeWeights supermode_weights(const std::vector<std::complex<double>> &g) {
    if (g.empty()) throw std::domain_error("supermode_weights: coupling list is empty");
    // Scale first so large or tiny couplings do not overflow the squared sum.
    double scale = 0.0;
    for (const auto &x : g) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw std::domain_error("supermode_weights: couplings must be finite");
        }
        scale = std::max(scale, std::abs(x));
    }
    if (scale == 0.0) throw std::invalid_argument("supermode_weights: all couplings are zero");
    double sum = 0.0;
    for (const auto &x : g) sum += std::norm(x / scale);
    SupermodeWeights out;
    out.lambda = scale * std::sqrt(sum);
    out.weights.reserve(g.size());
    for (const auto &x : g) out.weights.push_back(x / out.lambda);
    return out;
}

}  // namespace tfgkp
