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
#include <numbers>
#include <stdexcept>
#include <string>

namespace tfgkp {

// Lattice constants, derived once from the long double pi.
inline const double kSqrtPi = static_cast<double>(std::sqrt(std::numbers::pi_v<long double>));
inline const double kTwoSqrtPi = static_cast<double>(2.0L * std::sqrt(std::numbers::pi_v<long double>));
inline const double kHalfCell = static_cast<double>(0.5L * std::sqrt(std::numbers::pi_v<long double>));
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double kDefaultClassifyTol = 1e-9;

inline void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

/// A point (tau, omega) of the dimensionless time-frequency phase space.
/// tau is measured in units of the comb repetition period T_r and omega in
/// units of 1/T_r.
struct PhasePoint {
    double tau = 0.0;
    double omega = 0.0;

    friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.tau + b.tau, a.omega + b.omega}; }
    friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.tau - b.tau, a.omega - b.omega}; }
    friend PhasePoint operator-(PhasePoint a) { return {-a.tau, -a.omega}; }
    friend PhasePoint operator*(double s, PhasePoint a) { return {s * a.tau, s * a.omega}; }
    friend bool operator==(const PhasePoint &, const PhasePoint &) = default;

    bool finite() const { return std::isfinite(tau) && std::isfinite(omega); }
};

inline void require_finite(const PhasePoint &p, const char *what) {
    if (!p.finite()) {
        throw std::domain_error(std::string(what) + " must have finite components");
    }
}

/// Reduces an angle into the half-open interval [0, 2pi).
inline double reduce_phase(double phase) {
    double r = std::fmod(phase, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to exactly 2pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

/// Antisymmetric form w(a, b) = a.omega * b.tau - a.tau * b.omega.
///
/// The sign matches D(tau, Omega) = exp[i(Omega tau_hat - tau Omega_hat)] with
/// [tau_hat, Omega_hat] = i, for which
///     D(a) D(b) = exp(i w(a, b) / 2) D(a + b).
inline double symplectic_form(const PhasePoint &a, const PhasePoint &b) {
    require_finite(a, "symplectic_form lhs");
    require_finite(b, "symplectic_form rhs");
    return a.omega * b.tau - a.tau * b.omega;
}

/// Phase of D(a) D(b) = exp(i phi) D(b) D(a), reduced into [0, 2pi).
inline double commutation_phase(const PhasePoint &a, const PhasePoint &b) {
    return reduce_phase(symplectic_form(a, b));
}

/// A Weyl displacement operator exp(i phase) D(vector). The phase is
/// bookkeeping only: its global offset carries no physical meaning, so callers
/// should compare phase differences.
class WeylDisplacement {
   public:
    WeylDisplacement() = default;
    explicit WeylDisplacement(PhasePoint vector, double phase = 0.0) : vector_(vector), phase_(0.0) {
        require_finite(vector, "WeylDisplacement vector");
        require_finite(phase, "WeylDisplacement phase");
        phase_ = reduce_phase(phase);
    }

    static WeylDisplacement identity() { return WeylDisplacement{}; }

    const PhasePoint &vector() const { return vector_; }
    double phase() const { return phase_; }

    WeylDisplacement inverse() const { return WeylDisplacement(-vector_, -phase_); }

   private:
    PhasePoint vector_{};
    double phase_ = 0.0;
};

/// Operator product d1 * d2 (d2 acts first).
inline WeylDisplacement compose(const WeylDisplacement &d1, const WeylDisplacement &d2) {
    const double increment = 0.5 * symplectic_form(d1.vector(), d2.vector());
    return WeylDisplacement(d1.vector() + d2.vector(), d1.phase() + d2.phase() + increment);
}

inline WeylDisplacement operator*(const WeylDisplacement &d1, const WeylDisplacement &d2) { return compose(d1, d2); }

/// Square-lattice geometry: stabilizer translations of 2 sqrt(pi), logical
/// translations of sqrt(pi), decoding half-cell sqrt(pi) / 2.
struct LatticeSpec {
    double stabilizer_period = kTwoSqrtPi;
    double logical_period = kSqrtPi;
    double half_cell = kHalfCell;

    static LatticeSpec square() { return LatticeSpec{}; }
};

inline const PhasePoint kStabilizerTau{0.0, kTwoSqrtPi};    // S_tau = D(0, 2 sqrt(pi))
inline const PhasePoint kStabilizerOmega{kTwoSqrtPi, 0.0};  // S_Omega = D(2 sqrt(pi), 0)
inline const PhasePoint kLogicalZ{kSqrtPi, 0.0};
inline const PhasePoint kLogicalX{0.0, kSqrtPi};

enum class DisplacementClass { Identity, Stabilizer, LogicalX, LogicalZ, LogicalY, Generic };

inline const char *to_string(DisplacementClass c) {
    switch (c) {
        case DisplacementClass::Identity:
            return "Identity";
        case DisplacementClass::Stabilizer:
            return "Stabilizer";
        case DisplacementClass::LogicalX:
            return "LogicalX";
        case DisplacementClass::LogicalZ:
            return "LogicalZ";
        case DisplacementClass::LogicalY:
            return "LogicalY";
        case DisplacementClass::Generic:
            return "Generic";
    }
    return "?";
}

/// Identifies p as a stabilizer, logical Pauli, identity, or off-lattice shift.
/// Each component must lie within tol of an integer multiple of the logical
/// period; the parities of those multiples select the class.
inline DisplacementClass classify_displacement(const PhasePoint &p, const LatticeSpec &lattice = LatticeSpec::square(),
                                               double tol = kDefaultClassifyTol) {
    if (!(tol >= 0.0)) {
        throw std::domain_error("classify_displacement: tol must be >= 0");
    }
    require_finite(p, "classify_displacement point");
    const auto nearest = [&](double x, long long &k) {
        const double q = std::round(x / lattice.logical_period);
        k = static_cast<long long>(q);
        return std::abs(x - q * lattice.logical_period) <= tol;
    };
    long long kt = 0;
    long long ko = 0;
    if (!nearest(p.tau, kt) || !nearest(p.omega, ko)) {
        return DisplacementClass::Generic;
    }
    const bool odd_t = (kt % 2) != 0;
    const bool odd_o = (ko % 2) != 0;
    if (odd_t && odd_o) return DisplacementClass::LogicalY;
    if (odd_t) return DisplacementClass::LogicalZ;
    if (odd_o) return DisplacementClass::LogicalX;
    if (kt == 0 && ko == 0) return DisplacementClass::Identity;
    return DisplacementClass::Stabilizer;
}

/// Optical frequency comb reference. f_ceo is carried for provenance only.
class CombParams {
   public:
    explicit CombParams(double f_rep_hz, double f_ceo_hz = 0.0) : f_rep_(f_rep_hz), f_ceo_(f_ceo_hz) {
        if (!std::isfinite(f_rep_hz) || f_rep_hz <= 0.0) {
            throw std::domain_error("CombParams: f_rep must be finite and > 0");
        }
        if (!std::isfinite(f_ceo_hz)) {
            throw std::domain_error("CombParams: f_ceo must be finite");
        }
    }

    double f_rep() const { return f_rep_; }
    double f_ceo() const { return f_ceo_; }
    double t_rep() const { return 1.0 / f_rep_; }
    double omega_rep() const { return kTwoPi * f_rep_; }

   private:
    double f_rep_;
    double f_ceo_;
};

/// A physical displacement: time shift in seconds, angular-frequency shift in rad/s.
struct PhysicalShift {
    double delta_t = 0.0;
    double delta_omega = 0.0;
};

inline PhysicalShift to_physical(const PhasePoint &p, const CombParams &comb) {
    require_finite(p, "to_physical point");
    return {p.tau / comb.f_rep(), p.omega * comb.f_rep()};
}

inline PhasePoint from_physical(double delta_t, double delta_omega, const CombParams &comb) {
    require_finite(delta_t, "from_physical delta_t");
    require_finite(delta_omega, "from_physical delta_omega");
    return {delta_t * comb.f_rep(), delta_omega / comb.f_rep()};
}

inline PhasePoint from_physical(const PhysicalShift &s, const CombParams &comb) {
    return from_physical(s.delta_t, s.delta_omega, comb);
}

}  // namespace tfgkp
