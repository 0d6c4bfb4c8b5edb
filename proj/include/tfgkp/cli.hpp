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

// Command-line front end. Every command writes its primary output through
// io::write_atomic (or to stdout for JSON commands without --out), so an
// error exit never leaves a partial file behind.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "correction.hpp"
#include "decoder.hpp"
#include "feasibility.hpp"
#include "grid_states.hpp"
#include "io.hpp"
#include "noise.hpp"
#include "tf_algebra.hpp"

namespace tfgkp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

class NumericError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline void check_finite(double v, const char *what) {
    if (!std::isfinite(v)) throw NumericError(std::string("non-finite result: ") + what);
}

/// Destination for a command's primary output: a file when --out was given,
/// otherwise the supplied stream.
inline void emit(const std::string &out_path, const std::string &contents, std::ostream &fallback) {
    if (out_path.empty()) {
        fallback << contents;
    } else {
        io::write_atomic(out_path, contents);
    }
}

inline std::string dump_json(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

inline double width_scale(const std::string &units) {
    if (units == "abs") return 1.0;
    if (units == "sqrtpi") return kSqrtPi;
    throw io::UsageError("--units must be abs or sqrtpi");
}

struct Common {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out;
};

inline void add_common(CLI::App *cmd, Common &c, bool out_required) {
    cmd->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker threads (0 = TFGKP_THREADS or hardware)")->capture_default_str();
    auto *o = cmd->add_option("--out", c.out, "output path");
    if (out_required) o->required();
}

// failure-map ---------------------------------------------------------------

struct FailureMapArgs {
    Common common;
    std::string sigma_tau = "0:0:1";
    std::string sigma_omega = "0:0:1";
    double anisotropy = 0.0;
    std::string mode = "analytic";
    std::string units = "abs";
    std::uint64_t trials = 100000;
};

inline std::string failure_map_csv(const std::vector<NoiseModel> &cells, const std::vector<double> &p) {
    std::string csv = "sigma_tau,sigma_omega,p_fail\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        csv += io::fmt9(cells[i].sigma_tau()) + "," + io::fmt9(cells[i].sigma_omega()) + "," + io::fmt9(p[i]) + "\n";
    }
    return csv;
}

inline int cmd_failure_map(const FailureMapArgs &a, std::ostream &out) {
    const double scale = width_scale(a.units);
    auto omega_axis = io::parse_range(a.sigma_omega, "--sigma-omega");
    for (auto &v : omega_axis) v *= scale;
    const bool mc = a.mode == "mc";
    if (!mc && a.mode != "analytic") throw io::UsageError("--mode must be analytic or mc");
    if (mc && a.trials == 0) throw io::UsageError("--trials must be >= 1");
    const auto mode = mc ? FailureMapMode::monte_carlo(a.trials, a.common.seed) : FailureMapMode::analytic();

    std::vector<NoiseModel> cells;
    std::vector<double> p;
    if (a.anisotropy > 0.0) {
        // Sweep along the line sigma_tau = anisotropy * sigma_omega.
        validate_width_axis(omega_axis, "sigma_omega");
        std::vector<double> tau_axis;
        for (double w : omega_axis) tau_axis.push_back(a.anisotropy * w);
        p.assign(omega_axis.size(), 0.0);
        for (std::size_t i = 0; i < omega_axis.size(); ++i) cells.emplace_back(tau_axis[i], omega_axis[i]);
        parallel_for_chunks(cells.size(), a.common.threads, [&](std::size_t b, std::size_t e, unsigned) {
            for (std::size_t i = b; i < e; ++i) {
                p[i] = mc ? p_fail_monte_carlo(cells[i], a.trials, cell_seed(a.common.seed, i, 0), 1).estimate
                          : p_fail_analytic(cells[i]);
            }
        });
    } else if (a.anisotropy < 0.0 || std::isnan(a.anisotropy)) {
        throw io::UsageError("--anisotropy must be > 0");
    } else {
        auto tau_axis = io::parse_range(a.sigma_tau, "--sigma-tau");
        for (auto &v : tau_axis) v *= scale;
        const FailureMap map = failure_map(tau_axis, omega_axis, mode, a.common.threads);
        for (double t : map.sigma_tau_axis)
            for (double w : map.sigma_omega_axis) cells.emplace_back(t, w);
        p = map.p_fail;
    }
    for (double v : p) check_finite(v, "p_fail");
    io::write_atomic(a.common.out, failure_map_csv(cells, p));
    const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
    out << "cells=" << p.size() << " min=" << io::fmt9(*lo) << " max=" << io::fmt9(*hi) << "\n";
    return kExitOk;
}

// mc-failure ----------------------------------------------------------------

struct McFailureArgs {
    Common common;
    double sigma_tau = 0.0;
    double sigma_omega = 0.0;
    std::string units = "abs";
    std::uint64_t trials = 1000000;
};

inline int cmd_mc_failure(const McFailureArgs &a, std::ostream &out) {
    const double scale = width_scale(a.units);
    if (a.trials == 0) throw io::UsageError("--trials must be >= 1");
    const NoiseModel model(a.sigma_tau * scale, a.sigma_omega * scale);
    const auto est = p_fail_monte_carlo(model, a.trials, a.common.seed, a.common.threads);
    const double analytic = p_fail_analytic(model);
    check_finite(est.estimate, "estimate");
    check_finite(analytic, "analytic");
    nlohmann::ordered_json j;
    j["sigma_tau"] = model.sigma_tau();
    j["sigma_omega"] = model.sigma_omega();
    j["trials"] = a.trials;
    j["seed"] = a.common.seed;
    j["failures"] = est.failures;
    j["estimate"] = est.estimate;
    j["stderr"] = est.std_error;
    j["analytic"] = analytic;
    emit(a.common.out, dump_json(j), out);
    return kExitOk;
}

// wigner --------------------------------------------------------------------

struct WignerArgs {
    std::string out;
    int state = 0;
    double sigma_tau = kDefaultGridWidthFactor * kSqrtPi;
    double sigma_omega = kDefaultGridWidthFactor * kSqrtPi;
    int n_peaks = kDefaultPeaks;
    std::string grid = "-8:8:161,-4:4:81";
};

/// Trapezoidal integral of row-major samples over the tau x omega grid.
inline double grid_integral(const std::vector<double> &taus, const std::vector<double> &omegas,
                            const std::vector<double> &w) {
    const auto weights = [](const std::vector<double> &x) {
        std::vector<double> q(x.size(), 0.0);
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double h = 0.5 * (x[i + 1] - x[i]);
            q[i] += h;
            q[i + 1] += h;
        }
        return q;
    };
    const auto qt = weights(taus);
    const auto qo = weights(omegas);
    double sum = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = 0; j < omegas.size(); ++j) sum += qt[i] * qo[j] * w[i * omegas.size() + j];
    return sum;
}

inline int cmd_wigner(const WignerArgs &a, std::ostream &out) {
    const auto comma = a.grid.find(',');
    if (comma == std::string::npos) throw io::UsageError("--grid: expected tmin:tmax:n,omin:omax:n");
    const auto taus = io::parse_range(a.grid.substr(0, comma), "--grid tau");
    const auto omegas = io::parse_range(a.grid.substr(comma + 1), "--grid omega");
    if (a.state != 0 && a.state != 1) throw io::UsageError("--state must be 0 or 1");
    GridStateModel state = [&] {
        try {
            return make_logical(a.state, a.sigma_tau, a.sigma_omega, a.n_peaks);
        } catch (const std::domain_error &e) {
            throw io::UsageError(e.what());
        }
    }();
    std::vector<double> w(taus.size() * omegas.size());
    std::string csv = "tau,omega,W\n";
    for (std::size_t i = 0; i < taus.size(); ++i) {
        for (std::size_t j = 0; j < omegas.size(); ++j) {
            const double v = wigner(state, taus[i], omegas[j]);
            check_finite(v, "W");
            w[i * omegas.size() + j] = v;
            csv += io::fmt9(taus[i]) + "," + io::fmt9(omegas[j]) + "," + io::fmt9(v) + "\n";
        }
    }
    io::write_atomic(a.out, csv);
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    out << "points=" << w.size() << " min=" << io::fmt9(*lo) << " max=" << io::fmt9(*hi)
        << " integral=" << io::fmt9(grid_integral(taus, omegas, w)) << "\n";
    return kExitOk;
}

// cycles --------------------------------------------------------------------

struct CyclesArgs {
    Common common;
    double sigma_tau = 0.1 * kSqrtPi;
    double sigma_omega = 0.1 * kSqrtPi;
    double anc_sigma_tau = -1.0;  // negative: match the channel
    double anc_sigma_omega = -1.0;
    std::string units = "abs";
    int cycles = 25;
    std::uint64_t trials = 100000;
    bool uncorrected = false;
};

inline int cmd_cycles(const CyclesArgs &a, std::ostream &out) {
    const double scale = width_scale(a.units);
    if (a.cycles < 1) throw io::UsageError("--cycles must be >= 1");
    if (a.trials == 0) throw io::UsageError("--trials must be >= 1");
    const NoiseModel channel(a.sigma_tau * scale, a.sigma_omega * scale);
    const AncillaModel anc(a.anc_sigma_tau < 0.0 ? channel.sigma_tau() : a.anc_sigma_tau * scale,
                           a.anc_sigma_omega < 0.0 ? channel.sigma_omega() : a.anc_sigma_omega * scale);
    const auto corrected = run_cycles(channel, anc, a.cycles, a.trials, a.common.seed, a.common.threads);
    std::vector<CycleStats> baseline;
    if (a.uncorrected) baseline = run_uncorrected(channel, a.cycles, a.trials, a.common.seed, a.common.threads);

    std::string csv = "cycle,per_cycle_error,cumulative_error,stderr";
    if (a.uncorrected) csv += ",uncorrected_per_cycle_error,uncorrected_cumulative_error,uncorrected_stderr";
    csv += "\n";
    for (std::size_t k = 0; k < corrected.size(); ++k) {
        const auto &c = corrected[k];
        csv += std::to_string(c.cycle) + "," + io::fmt9(c.per_cycle_error) + "," + io::fmt9(c.cumulative_error) + "," +
               io::fmt9(c.std_error);
        if (a.uncorrected) {
            const auto &u = baseline[k];
            csv += "," + io::fmt9(u.per_cycle_error) + "," + io::fmt9(u.cumulative_error) + "," + io::fmt9(u.std_error);
        }
        csv += "\n";
    }
    io::write_atomic(a.common.out, csv);
    out << "cycles=" << a.cycles << " trials=" << a.trials
        << " final_cumulative_error=" << io::fmt9(corrected.back().cumulative_error);
    if (a.uncorrected) out << " final_uncorrected=" << io::fmt9(baseline.back().cumulative_error);
    out << "\n";
    return kExitOk;
}

// feasibility ---------------------------------------------------------------

struct FeasibilityArgs {
    std::string out;
    double frep_hz = 0.0;
    double fceo_hz = 0.0;
    std::string budget_path;
    double res_tau = -1.0;
    double res_omega = -1.0;
    double margin = kDefaultResolutionMargin;
    double f_ctrl = 0.0;
    double f_op = 0.0;
    double actuator_freq = -1.0;
};

inline constexpr const char *kBudgetFields[] = {"t_jitter_s",   "t_disp_s",     "t_tech_s", "w_seed_rad_s",
                                                "w_pump_rad_s", "w_tech_rad_s", "f_rep_hz"};

/// Parses a lab budget document. Unknown keys, non-numeric or negative values
/// are schema violations. Returns the budget and the optional f_rep_hz.
inline std::pair<LabNoiseBudget, double> parse_budget(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw io::UsageError(std::string("budget: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw io::UsageError("budget: top level must be an object");
    for (const auto &[key, value] : j.items()) {
        if (std::find(std::begin(kBudgetFields), std::end(kBudgetFields), key) == std::end(kBudgetFields)) {
            throw io::UsageError("budget: unknown field '" + key + "'");
        }
        if (!value.is_number()) throw io::UsageError("budget: field '" + key + "' must be a number");
        const double v = value.get<double>();
        if (!std::isfinite(v) || v < 0.0) throw io::UsageError("budget: field '" + key + "' must be >= 0");
    }
    const auto get = [&](const char *k) { return j.contains(k) ? j[k].get<double>() : 0.0; };
    LabNoiseBudget b{get("t_jitter_s"), get("t_disp_s"), get("t_tech_s"),
                     get("w_seed_rad_s"), get("w_pump_rad_s"), get("w_tech_rad_s")};
    return {b, get("f_rep_hz")};
}

inline nlohmann::ordered_json quantity(double value, const char *unit) {
    return {{"value", value}, {"unit", unit}};
}

inline int cmd_feasibility(const FeasibilityArgs &a, std::ostream &out) {
    nlohmann::ordered_json inputs;
    std::optional<LabNoiseBudget> budget;
    double frep = a.frep_hz;
    if (!a.budget_path.empty()) {
        std::ifstream in(a.budget_path, std::ios::binary);
        if (!in) throw io::UsageError("budget: cannot read " + a.budget_path);
        std::stringstream ss;
        ss << in.rdbuf();
        auto [b, budget_frep] = parse_budget(ss.str());
        budget = b;
        if (frep <= 0.0) frep = budget_frep;
    }
    if (!(frep > 0.0) || !std::isfinite(frep)) throw io::UsageError("--frep-hz (or budget f_rep_hz) must be > 0");
    if (!std::isfinite(a.fceo_hz)) throw io::UsageError("--fceo-hz must be finite");
    const CombParams comb(frep, a.fceo_hz);

    inputs["f_rep_hz"] = frep;
    inputs["f_ceo_hz"] = a.fceo_hz;
    nlohmann::ordered_json report;
    report["inputs"] = inputs;
    report["comb"] = {{"t_rep", quantity(comb.t_rep(), "s")}, {"omega_rep", quantity(comb.omega_rep(), "rad/s")}};
    const LatticeScales s = lattice_scales(comb);
    report["lattice_scales"] = {{"dt_stab", quantity(s.dt_stab, "s")},
                                {"dt_logical", quantity(s.dt_logical, "s")},
                                {"dw_stab", quantity(s.dw_stab, "rad/s")},
                                {"dw_logical", quantity(s.dw_logical, "rad/s")}};

    if (budget) {
        report["inputs"]["budget"] = {{"t_jitter_s", budget->t_jitter},   {"t_disp_s", budget->t_disp},
                                      {"t_tech_s", budget->t_tech},       {"w_seed_rad_s", budget->w_seed},
                                      {"w_pump_rad_s", budget->w_pump},   {"w_tech_rad_s", budget->w_tech}};
        const NoiseModel model = lab_to_dimensionless(*budget, comb);
        const double p = p_fail_analytic(model);
        check_finite(p, "p_fail");
        report["noise"] = {{"sigma_t", quantity(budget->sigma_t(), "s")},
                           {"sigma_w", quantity(budget->sigma_w(), "rad/s")},
                           {"sigma_tau", quantity(model.sigma_tau(), "dimensionless")},
                           {"sigma_omega", quantity(model.sigma_omega(), "dimensionless")},
                           {"p_fail_analytic", quantity(p, "probability")}};
    }
    if (a.res_tau >= 0.0 || a.res_omega >= 0.0) {
        if (a.res_tau < 0.0 || a.res_omega < 0.0) throw io::UsageError("--res-tau and --res-omega go together");
        if (!(a.margin > 0.0)) throw io::UsageError("--margin must be > 0");
        const auto r = resolution_check(a.res_tau, a.res_omega, a.margin);
        report["inputs"]["res_tau"] = a.res_tau;
        report["inputs"]["res_omega"] = a.res_omega;
        report["inputs"]["margin"] = a.margin;
        const auto axis = [](const AxisResolution &x) {
            return nlohmann::ordered_json{{"resolution", quantity(x.resolution, "dimensionless")},
                                          {"ratio_to_half_cell", quantity(x.ratio, "dimensionless")},
                                          {"pass", x.pass}};
        };
        report["resolution"] = {{"tau", axis(r.tau)}, {"omega", axis(r.omega)}, {"pass", r.pass()}};
    }
    if (a.f_ctrl > 0.0 || a.f_op > 0.0) {
        if (!(a.f_ctrl > 0.0) || !(a.f_op > 0.0)) throw io::UsageError("--f-ctrl and --f-op must both be > 0");
        const auto b = bandwidth_check(a.f_ctrl, a.f_op);
        report["inputs"]["f_ctrl_hz"] = a.f_ctrl;
        report["inputs"]["f_op_hz"] = a.f_op;
        report["bandwidth"] = {{"margin", quantity(b.margin, "ratio")}, {"pass", b.pass}};
    }
    if (a.actuator_freq >= 0.0) {
        report["inputs"]["actuator_freq_hz"] = a.actuator_freq;
        nlohmann::ordered_json acts = nlohmann::ordered_json::array();
        for (auto kind : {ActuatorKind::PZT, ActuatorKind::AOM, ActuatorKind::EOM}) {
            const auto act = ActuatorResponse::preset(kind);
            acts.push_back({{"kind", to_string(kind)},
                            {"corner", quantity(act.corner_hz(), "Hz")},
                            {"order", act.order()},
                            {"magnitude", quantity(actuator_response(act, a.actuator_freq), "ratio")}});
        }
        report["actuators"] = acts;
    }
    emit(a.out, dump_json(report), out);
    return kExitOk;
}

// supermode -----------------------------------------------------------------

/// Parses "re", "re+imi", "re-imi" or "imi" (j is accepted for i).
inline std::complex<double> parse_complex(std::string token) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    if (token.empty()) throw io::UsageError("--g: empty coupling");
    const char last = token.back();
    if (last != 'i' && last != 'j') return {io::parse_double(token, "--g"), 0.0};
    token.pop_back();
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = token.size(); k-- > 1;) {
        if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const auto imag_of = [](const std::string &s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return io::parse_double(s, "--g");
    };
    if (split == std::string::npos) return {0.0, imag_of(token)};
    return {io::parse_double(token.substr(0, split), "--g"), imag_of(token.substr(split))};
}

struct SupermodeArgs {
    std::string out;
    std::string g;
};

inline int cmd_supermode(const SupermodeArgs &a, std::ostream &out) {
    std::vector<std::complex<double>> g;
    std::stringstream ss(a.g);
    std::string token;
    while (std::getline(ss, token, ',')) g.push_back(parse_complex(token));
    SupermodeWeights sw;
    try {
        sw = supermode_weights(g);
    } catch (const std::logic_error &e) {
        throw io::UsageError(e.what());
    }
    nlohmann::ordered_json j;
    j["lambda"] = sw.lambda;
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    double norm = 0.0;
    for (const auto &u : sw.weights) {
        weights.push_back({{"re", u.real()}, {"im", u.imag()}});
        norm += std::norm(u);
    }
    j["weights"] = weights;
    j["norm"] = norm;
    check_finite(sw.lambda, "lambda");
    emit(a.out, dump_json(j), out);
    return kExitOk;
}

// entry point ---------------------------------------------------------------

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    CLI::App app{"Time-frequency GKP qubit simulator", "tfgkp"};
    app.require_subcommand(1);

    FailureMapArgs fm;
    auto *c_fm = app.add_subcommand("failure-map", "sweep the logical failure probability over noise widths");
    add_common(c_fm, fm.common, true);
    c_fm->add_option("--sigma-tau", fm.sigma_tau, "a:b:n range of sigma_tau")->capture_default_str();
    c_fm->add_option("--sigma-omega", fm.sigma_omega, "a:b:n range of sigma_omega")->capture_default_str();
    c_fm->add_option("--anisotropy", fm.anisotropy, "sweep the line sigma_tau = R * sigma_omega");
    c_fm->add_option("--mode", fm.mode, "analytic | mc")->capture_default_str();
    c_fm->add_option("--units", fm.units, "abs | sqrtpi (widths in units of sqrt(pi))")->capture_default_str();
    c_fm->add_option("--trials", fm.trials, "Monte Carlo trials per cell")->capture_default_str();

    McFailureArgs mc;
    auto *c_mc = app.add_subcommand("mc-failure", "Monte Carlo estimate of the half-cell failure probability");
    add_common(c_mc, mc.common, false);
    c_mc->add_option("--sigma-tau", mc.sigma_tau)->required();
    c_mc->add_option("--sigma-omega", mc.sigma_omega)->required();
    c_mc->add_option("--units", mc.units, "abs | sqrtpi")->capture_default_str();
    c_mc->add_option("--trials", mc.trials)->capture_default_str();

    WignerArgs wg;
    auto *c_wg = app.add_subcommand("wigner", "tabulate the Wigner function of a logical grid state");
    c_wg->add_option("--out", wg.out)->required();
    c_wg->add_option("--state", wg.state, "logical bit 0 or 1")->capture_default_str();
    c_wg->add_option("--sigma-tau", wg.sigma_tau)->capture_default_str();
    c_wg->add_option("--sigma-omega", wg.sigma_omega)->capture_default_str();
    c_wg->add_option("--n-peaks", wg.n_peaks)->capture_default_str();
    c_wg->add_option("--grid", wg.grid, "tmin:tmax:n,omin:omax:n")->capture_default_str();

    CyclesArgs cy;
    auto *c_cy = app.add_subcommand("cycles", "repeated syndrome extraction and recovery");
    add_common(c_cy, cy.common, true);
    c_cy->add_option("--sigma-tau", cy.sigma_tau)->capture_default_str();
    c_cy->add_option("--sigma-omega", cy.sigma_omega)->capture_default_str();
    c_cy->add_option("--anc-sigma-tau", cy.anc_sigma_tau, "syndrome noise (default: channel width)");
    c_cy->add_option("--anc-sigma-omega", cy.anc_sigma_omega, "syndrome noise (default: channel width)");
    c_cy->add_option("--units", cy.units, "abs | sqrtpi")->capture_default_str();
    c_cy->add_option("--cycles", cy.cycles)->capture_default_str();
    c_cy->add_option("--trials", cy.trials)->capture_default_str();
    c_cy->add_flag("--uncorrected", cy.uncorrected, "also report the uncorrected baseline");

    FeasibilityArgs fe;
    auto *c_fe = app.add_subcommand("feasibility", "physical lattice scales and control margins");
    c_fe->add_option("--out", fe.out);
    c_fe->add_option("--frep-hz", fe.frep_hz);
    c_fe->add_option("--fceo-hz", fe.fceo_hz);
    c_fe->add_option("--budget", fe.budget_path, "lab noise budget JSON");
    c_fe->add_option("--res-tau", fe.res_tau);
    c_fe->add_option("--res-omega", fe.res_omega);
    c_fe->add_option("--margin", fe.margin)->capture_default_str();
    c_fe->add_option("--f-ctrl", fe.f_ctrl);
    c_fe->add_option("--f-op", fe.f_op);
    c_fe->add_option("--actuator-freq", fe.actuator_freq, "evaluate PZT/AOM/EOM responses at this frequency");

    SupermodeArgs sm;
    auto *c_sm = app.add_subcommand("supermode", "normalize couplings into supermode weights");
    c_sm->add_option("--out", sm.out);
    c_sm->add_option("--g", sm.g, "comma-separated couplings, e.g. 3,4 or 1,1i")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "tfgkp: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_fm->parsed()) return cmd_failure_map(fm, out);
        if (c_mc->parsed()) return cmd_mc_failure(mc, out);
        if (c_wg->parsed()) return cmd_wigner(wg, out);
        if (c_cy->parsed()) return cmd_cycles(cy, out);
        if (c_fe->parsed()) return cmd_feasibility(fe, out);
        if (c_sm->parsed()) return cmd_supermode(sm, out);
    } catch (const NumericError &e) {
        err << "tfgkp: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const io::UsageError &e) {
        err << "tfgkp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "tfgkp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "tfgkp: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}

}  // namespace tfgkp::cli
