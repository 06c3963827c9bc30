#pragma once

#include <vector>

#include "nsf/gas.hpp"
#include "nsf/pchip.hpp"

namespace nsf {

// Sampled traveling-wave profile of the viscous 3-shock, phase-normalized so
// that vS(0) = (v_left + v_right)/2. Outside the stored window the profile is
// clamped to its end states.
struct ShockProfile {
    std::vector<double> xi;
    std::vector<double> vS, uS, thetaS;
    std::vector<double> dvS, duS, dthetaS;
    double sigma = 0.0;
    PrimState left, right;
    double delta_S = 0.0;
    GasParams gas;

    Pchip v_interp, theta_interp;

    struct Eval {
        double v, u, theta;
        double dv, du, dtheta;
    };
    Eval eval(double xi_pt) const;
};

struct ContactProfile {
    std::vector<double> eta;
    std::vector<double> Theta, dTheta;
    double p_star = 0.0;
    double u_star = 0.0;
    double a_c = 0.0;  // diffusivity (gamma-1) kappa p* / (R^2 gamma)
    double theta_left = 0.0, theta_right = 0.0;
    double L = 0.0;
    double residual_norm = 0.0;  // converged discrete residual (max norm)

    Pchip theta_interp, dtheta_interp;

    double theta_at(double eta_pt) const;
    double dtheta_at(double eta_pt) const;
    double d2theta_at(double eta_pt) const;  // from the self-similar ODE
    bool degenerate() const { return theta_left == theta_right; }
};

// Smooth approximate 1-rarefaction, parameterized by its edge characteristic
// speeds and the constant entropy / Riemann invariant of the fan.
struct RarefactionWave {
    double w_minus = 0.0;
    double w_star = 0.0;
    double s_bar = 0.0;
    double z_bar = 0.0;
    double K = 0.0;  // adiabatic constant p v^gamma on the fan isentrope
    GasParams gas;
};

struct WaveEval {
    double v, u, theta;
    double dv, du, dtheta;  // x-derivatives
};

// ---- viscous shock ----

ShockProfile solve_shock_profile(const GasParams& gas, const PrimState& left,
                                 const PrimState& plus, double sigma,
                                 double xi_half_width = 0.0,  // 0: auto from tails
                                 int n_samples = 4001);

ShockProfile::Eval shock_profile_eval(const ShockProfile& profile, double xi);

struct ShockLemmaReport {
    double ratio_u = 0.0;            // sup|u'_xi + sigma* v'_xi| / sup|v'_xi|
    double ratio_theta = 0.0;        // sup|theta'_xi + (gamma-1)p*/R v'_xi| / sup|v'_xi|
    double tail_rate_left = 0.0;     // fitted c in exp(-c delta_S |xi|)
    double tail_rate_right = 0.0;
    double second_deriv_ratio = 0.0; // sup|v''| / (delta_S sup|v'|)
};
ShockLemmaReport check_shock_lemma(const ShockProfile& profile, const GasParams& gas);

struct SharpDiffusionRow {
    double delta_S;
    double chord_over_delta;       // chord difference at xi=0, divided by delta_S
    double limit_coefficient;      // sigma* alpha* muRg/(muRg + kappa(g-1)^2), end-state values
    double residual_over_delta2;   // sup |chord diff - leading term| / delta_S^2
};
std::vector<SharpDiffusionRow> check_sharp_diffusion(const GasParams& gas, const PrimState& plus,
                                                     const std::vector<double>& delta_list);

// ---- approximate rarefaction ----

struct BurgersEval {
    double w;
    double w_x;
    double x0;  // foot of the characteristic
};
BurgersEval burgers_eval(double w_minus, double w_star, double t, double x);
// warm-started variant: Newton from x0_guess, falling back to the bracketed solve
BurgersEval burgers_eval(double w_minus, double w_star, double t, double x, double x0_guess);
double burgers_smooth(double w_minus, double w_star, double t, double x);

RarefactionWave make_rarefaction_wave(const GasParams& gas, const PrimState& minus,
                                      const PrimState& star);

WaveEval approx_rarefaction_eval(const RarefactionWave& wave, double t, double x);
// warm-started variant: x0_io carries the characteristic foot between nearby calls
WaveEval approx_rarefaction_eval(const RarefactionWave& wave, double t, double x, double& x0_io);
PrimState approx_rarefaction(const GasParams& gas, const RarefactionWave& wave, double t, double x);
PrimState exact_rarefaction_fan(const GasParams& gas, const RarefactionWave& wave, double t, double x);

// ---- viscous contact ----

ContactProfile solve_contact_profile(const GasParams& gas, double theta_left, double theta_right,
                                     double p_star, double u_star, double L = 20.0, int n = 4001);

WaveEval contact_wave_eval(const GasParams& gas, const ContactProfile& profile, double t, double x);

struct ContactResidual {
    double sup_Q1;
    double sup_Q2;
};
ContactResidual contact_residual(const GasParams& gas, const ContactProfile& profile, double t);

}  // namespace nsf
