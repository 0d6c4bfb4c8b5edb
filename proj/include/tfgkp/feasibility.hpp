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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tf_algebra.hpp"

namespace tfgkp {

/// Stabilizer and logical translation lengths in physical units.
struct LatticeScales {
    double dt_stab = 0.0;     // s
    double dt_logical = 0.0;  // s
    double dw_stab = 0.0;     // rad/s
    double dw_logical = 0.0;  // rad/s
};

inline LatticeScales lattice_scales(const CombParams &comb) {
    const double t_rep = comb.t_rep();
    return {kTwoSqrtPi * t_rep, kSqrtPi * t_rep, kTwoSqrtPi / t_rep, kSqrtPi / t_rep};
}

inline constexpr double kDefaultResolutionMargin = 10.0;

struct AxisResolution {
    double resolution = 0.0;
    double ratio = 0.0;  // resolution / (sqrt(pi)/2)
    bool pass = false;
};

struct ResolutionReport {
    double margin = kDefaultResolutionMargin;
    AxisResolution tau;
    AxisResolution omega;
    bool pass() const { return tau.pass && omega.pass; }
};

/// An axis passes when its resolution is below half_cell / margin.
inline ResolutionReport resolution_check(double res_tau, double res_omega, double margin = kDefaultResolutionMargin) {
    if (!std::isfinite(res_tau) || !std::isfinite(res_omega) || res_tau < 0.0 || res_omega < 0.0) {
        throw std::domain_error("resolution_check: resolutions must be finite and >= 0");
    }
    if (!std::isfinite(margin) || margin <= 0.0) {
        throw std::domain_error("resolution_check: margin must be finite and > 0");
    }
    const auto axis = [&](double r) {
        const double ratio = r / kHalfCell;
        return AxisResolution{r, ratio, ratio * margin < 1.0};
    };
    return {margin, axis(res_tau), axis(res_omega)};
}

struct BandwidthReport {
    double f_ctrl = 0.0;
    double f_op = 0.0;
    double margin = 0.0;
    bool pass = false;
};

/// Inclusive: f_ctrl == f_op passes.
inline BandwidthReport bandwidth_check(double f_ctrl, double f_op) {
    if (!std::isfinite(f_ctrl) || !std::isfinite(f_op) || f_ctrl <= 0.0 || f_op <= 0.0) {
        throw std::domain_error("bandwidth_check: frequencies must be finite and > 0");
    }
    return {f_ctrl, f_op, f_ctrl / f_op, f_ctrl >= f_op};
}

enum class ActuatorKind { PZT, AOM, EOM };

inline const char *to_string(ActuatorKind k) {
    switch (k) {
        case ActuatorKind::PZT:
            return "PZT";
        case ActuatorKind::AOM:
            return "AOM";
        case ActuatorKind::EOM:
            return "EOM";
    }
    return "?";
}

/// Low-pass model |T(f)| = (1 + (f/corner)^2)^(-order/2) of an actuation channel.
class ActuatorResponse {
   public:
    ActuatorResponse(ActuatorKind kind, double corner_hz, int order) : kind_(kind), corner_hz_(corner_hz), order_(order) {
        if (!std::isfinite(corner_hz) || corner_hz <= 0.0) {
            throw std::domain_error("ActuatorResponse: corner frequency must be finite and > 0");
        }
        if (order < 1) throw std::domain_error("ActuatorResponse: order must be >= 1");
    }

    /// Representative defaults: PZT 1 kHz second order, AOM 1 MHz and EOM
    /// 100 MHz first order.
    static ActuatorResponse preset(ActuatorKind kind) {
        switch (kind) {
            case ActuatorKind::PZT:
                return {kind, 1e3, 2};
            case ActuatorKind::AOM:
                return {kind, 1e6, 1};
            case ActuatorKind::EOM:
                return {kind, 1e8, 1};
        }
        throw std::domain_error("ActuatorResponse: unknown kind");
    }

    ActuatorKind kind() const { return kind_; }
    double corner_hz() const { return corner_hz_; }
    int order() const { return order_; }

   private:
    ActuatorKind kind_;
    double corner_hz_;
    int order_;
};

inline double actuator_response(const ActuatorResponse &a, double f_hz) {
    if (!std::isfinite(f_hz) || f_hz < 0.0) throw std::domain_error("actuator_response: f must be finite and >= 0");
    const double x = f_hz / a.corner_hz();
    return std::pow(1.0 + x * x, -0.5 * a.order());
}

struct QubitAssignment {
    int qubit = 0;         // 1-based
    int source_pair = 0;   // 1-based; uses units 2k-1 and 2k
    int unit_a = 0;
    int unit_b = 0;
    long long channel = 0;
};

struct MultiplexPlan {
    int n_qubits = 0;
    std::vector<QubitAssignment> assignments;
    int units_used() const { return 2 * n_qubits; }
};

class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Qubit k gets source pair k (units 2k-1, 2k) and the k-th lowest distinct
/// available comb channel.
inline MultiplexPlan multiplex_plan(int n_qubits, std::vector<long long> available_channels) {
    if (n_qubits < 1) throw std::domain_error("multiplex_plan: n_qubits must be >= 1");
    std::sort(available_channels.begin(), available_channels.end());
    available_channels.erase(std::unique(available_channels.begin(), available_channels.end()),
                             available_channels.end());
    if (available_channels.size() < static_cast<std::size_t>(n_qubits)) {
        throw CapacityError("multiplex_plan: " + std::to_string(n_qubits) + " qubits need as many distinct channels, " +
                            std::to_string(available_channels.size()) + " available");
    }
    MultiplexPlan plan{n_qubits, {}};
    for (int k = 1; k <= n_qubits; ++k) {
        plan.assignments.push_back({k, k, 2 * k - 1, 2 * k, available_channels[static_cast<std::size_t>(k - 1)]});
    }
    return plan;
}

}  // namespace tfgkp
