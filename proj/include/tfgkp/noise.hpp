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
#include <stdexcept>

#include "rng.hpp"
#include "tf_algebra.hpp"

namespace tfgkp {

/// Independent zero-mean Gaussian displacement noise along tau and omega
/// (dimensionless standard deviations). (0, 0) is the noiseless channel.
class NoiseModel {
   public:
    NoiseModel() = default;
    NoiseModel(double sigma_tau, double sigma_omega) : sigma_tau_(sigma_tau), sigma_omega_(sigma_omega) {
        if (!std::isfinite(sigma_tau) || !std::isfinite(sigma_omega) || sigma_tau < 0.0 || sigma_omega < 0.0) {
            throw std::domain_error("NoiseModel: widths must be finite and >= 0");
        }
    }

    double sigma_tau() const { return sigma_tau_; }
    double sigma_omega() const { return sigma_omega_; }
    bool noiseless() const { return sigma_tau_ == 0.0 && sigma_omega_ == 0.0; }

    friend bool operator==(const NoiseModel &, const NoiseModel &) = default;

   private:
    double sigma_tau_ = 0.0;
    double sigma_omega_ = 0.0;
};

/// Draws one displacement; tau is drawn before omega.
inline PhasePoint sample_displacement(const NoiseModel &model, RngStream &rng) {
    const double nt = rng.normal();
    const double no = rng.normal();
    return {model.sigma_tau() * nt, model.sigma_omega() * no};
}

/// Laboratory noise budget. Time components in seconds, angular-frequency
/// components in rad/s.
struct LabNoiseBudget {
    double t_jitter = 0.0;
    double t_disp = 0.0;
    double t_tech = 0.0;
    double w_seed = 0.0;
    double w_pump = 0.0;
    double w_tech = 0.0;

    void validate() const {
        for (double v : {t_jitter, t_disp, t_tech, w_seed, w_pump, w_tech}) {
            if (!std::isfinite(v) || v < 0.0) {
                throw std::domain_error("LabNoiseBudget: components must be finite and >= 0");
            }
        }
    }

    double sigma_t() const { return std::sqrt(t_jitter * t_jitter + t_disp * t_disp + t_tech * t_tech); }
    double sigma_w() const { return std::sqrt(w_seed * w_seed + w_pump * w_pump + w_tech * w_tech); }
};

/// Variances add across the budget; sigma_tau = sigma_t / T_r and
/// sigma_omega = T_r * sigma_w.
inline NoiseModel lab_to_dimensionless(const LabNoiseBudget &budget, const CombParams &comb) {
    budget.validate();
    return NoiseModel(budget.sigma_t() / comb.t_rep(), comb.t_rep() * budget.sigma_w());
}

}  // namespace tfgkp
