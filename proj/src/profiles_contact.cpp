#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsf/profiles.hpp"

namespace nsf {

namespace {

// Discrete residual of  -(eta/2) Theta' = a_c (Theta'/Theta)'  on the interior nodes,
// conservative second-order stencil with arithmetic-mean Theta at half points.
void residual(const std::vector<double>& eta, const std::vector<double>& th, double a_c,
              std::vector<double>& F) {
    const std::size_t n = th.size();
    const double h = eta[1] - eta[0];
    F.assign(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double mp = 0.5 * (th[i] + th[i + 1]);
        const double mm = 0.5 * (th[i] + th[i - 1]);
        const double flux_p = (th[i + 1] - th[i]) / (h * mp);
        const double flux_m = (th[i] - th[i - 1]) / (h * mm);
        F[i] = -(eta[i] / (4.0 * h)) * (th[i + 1] - th[i - 1]) - a_c * (flux_p - flux_m) / h;
    }
}

double max_abs(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

// Newton direction via the tridiagonal Jacobian (Thomas algorithm)
void newton_direction(const std::vector<double>& eta, const std::vector<double>& th, double a_c,
                      const std::vector<double>& F, std::vector<double>& dth) {
    const std::size_t n = th.size();
    const double h = eta[1] - eta[0];
    std::vector<double> lo(n, 0.0), di(n, 1.0), up(n, 0.0), rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double mp = 0.5 * (th[i] + th[i + 1]);
        const double mm = 0.5 * (th[i] + th[i - 1]);
        const double dp = th[i + 1] - th[i];
        const double dm = th[i] - th[i - 1];
        const double dfp_dnext = (1.0 / mp - dp / (2.0 * mp * mp)) / h;
        const double dfp_dself = (-1.0 / mp - dp / (2.0 * mp * mp)) / h;
        const double dfm_dself = (1.0 / mm - dm / (2.0 * mm * mm)) / h;
        const double dfm_dprev = (-1.0 / mm - dm / (2.0 * mm * mm)) / h;
        lo[i] = eta[i] / (4.0 * h) + a_c * dfm_dprev / h;
        di[i] = -a_c * (dfp_dself - dfm_dself) / h;
        up[i] = -(eta[i] / (4.0 * h)) - a_c * dfp_dnext / h;
        rhs[i] = -F[i];
    }
    // boundary rows: identity, zero correction
    dth.assign(n, 0.0);
    std::vector<double> cp(n, 0.0), dp(n, 0.0);
    cp[0] = 0.0;
    dp[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double m = di[i] - lo[i] * cp[i - 1];
        cp[i] = up[i] / m;
        dp[i] = (rhs[i] - lo[i] * dp[i - 1]) / m;
    }
    dth[n - 1] = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) dth[i] = dp[i] - cp[i] * dth[i + 1];
}

ContactProfile solve_on_domain(const GasParams& gas, double theta_left, double theta_right,
                               double p_star, double u_star, double L, int n) {
    ContactProfile prof;
    prof.p_star = p_star;
    prof.u_star = u_star;
    prof.theta_left = theta_left;
    prof.theta_right = theta_right;
    prof.L = L;
    prof.a_c = (gas.gamma - 1.0) * gas.kappa * p_star / (gas.R * gas.R * gas.gamma);

    prof.eta.resize(n);
    const double h = 2.0 * L / (n - 1);
    for (int i = 0; i < n; ++i) prof.eta[i] = -L + h * i;

    prof.Theta.resize(n);
    if (theta_left == theta_right) {
        std::fill(prof.Theta.begin(), prof.Theta.end(), theta_left);
        prof.dTheta.assign(n, 0.0);
        prof.residual_norm = 0.0;
        return prof;
    }

    for (int i = 0; i < n; ++i)
        prof.Theta[i] =
            theta_left + (theta_right - theta_left) * 0.5 * (1.0 + std::tanh(prof.eta[i]));
    prof.Theta.front() = theta_left;
    prof.Theta.back() = theta_right;

    std::vector<double> F, dth, trial;
    residual(prof.eta, prof.Theta, prof.a_c, F);
    double fnorm = max_abs(F);
    int iter = 0;
    while (fnorm > 1e-10) {
        if (++iter > 200)
            throw std::runtime_error("solve_contact_profile: Newton failed to converge");
        newton_direction(prof.eta, prof.Theta, prof.a_c, F, dth);
        double lambda = 1.0;
        bool accepted = false;
        for (int back = 0; back < 40; ++back) {
            trial = prof.Theta;
            bool positive = true;
            for (int i = 0; i < n; ++i) {
                trial[i] += lambda * dth[i];
                if (trial[i] <= 0.0) positive = false;
            }
            if (positive) {
                residual(prof.eta, trial, prof.a_c, F);
                const double fn = max_abs(F);
                if (fn < fnorm || fn < 1e-10) {
                    prof.Theta = trial;
                    fnorm = fn;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!accepted)
            throw std::runtime_error("solve_contact_profile: damped Newton step rejected");
    }
    prof.residual_norm = fnorm;

    // fourth-order centered derivative in the interior, one-sided at the edges
    prof.dTheta.assign(n, 0.0);
    const auto& th = prof.Theta;
    for (int i = 2; i < n - 2; ++i)
        prof.dTheta[i] = (-th[i + 2] + 8.0 * th[i + 1] - 8.0 * th[i - 1] + th[i - 2]) / (12.0 * h);
    prof.dTheta[0] = (th[1] - th[0]) / h;
    prof.dTheta[1] = (th[2] - th[0]) / (2.0 * h);
    prof.dTheta[n - 2] = (th[n - 1] - th[n - 3]) / (2.0 * h);
    prof.dTheta[n - 1] = (th[n - 1] - th[n - 2]) / h;
    return prof;
}

}  // namespace

ContactProfile solve_contact_profile(const GasParams& gas, double theta_left, double theta_right,
                                     double p_star, double u_star, double L, int n) {
    gas.validate();
    if (!(theta_left > 0.0 && theta_right > 0.0 && p_star > 0.0))
        throw std::domain_error("solve_contact_profile: positive theta and pressure required");
    if (n < 16) throw std::invalid_argument("solve_contact_profile: n too small");

    double cur_L = L;
    int cur_n = n;
    for (int attempt = 0; attempt < 5; ++attempt) {
        ContactProfile prof = solve_on_domain(gas, theta_left, theta_right, p_star, u_star, cur_L, cur_n);
        if (std::abs(prof.dTheta.front()) < 1e-12 && std::abs(prof.dTheta.back()) < 1e-12) {
            prof.theta_interp = Pchip(prof.eta, prof.Theta);
            prof.dtheta_interp = Pchip(prof.eta, prof.dTheta);
            return prof;
        }
        // Gaussian tails too fat for this window: enlarge, keep the spacing
        cur_n = static_cast<int>(cur_n * 1.5) | 1;
        cur_L *= 1.5;
    }
    throw std::runtime_error("solve_contact_profile: tail criterion not met after enlargements");
}

double ContactProfile::theta_at(double eta_pt) const {
    if (degenerate() || theta_interp.empty()) return theta_left;
    return theta_interp(eta_pt);
}

double ContactProfile::dtheta_at(double eta_pt) const {
    if (degenerate() || dtheta_interp.empty()) return 0.0;
    if (eta_pt <= eta.front() || eta_pt >= eta.back()) return 0.0;
    return dtheta_interp(eta_pt);
}

double ContactProfile::d2theta_at(double eta_pt) const {
    if (degenerate()) return 0.0;
    const double th = theta_at(eta_pt);
    const double dth = dtheta_at(eta_pt);
    // Theta'' = Theta'^2/Theta - (eta/2) Theta Theta' / a_c, from the self-similar ODE
    return dth * dth / th - (eta_pt / 2.0) * th * dth / a_c;
}

WaveEval contact_wave_eval(const GasParams& gas, const ContactProfile& profile, double t, double x) {
    if (!(t >= 0.0)) throw std::invalid_argument("contact_wave_eval: requires t >= 0");
    const double rt = std::sqrt(1.0 + t);
    const double eta = x / rt;
    const double th = profile.theta_at(eta);
    const double dth = profile.dtheta_at(eta);
    const double d2th = profile.d2theta_at(eta);
    const double c = (gas.gamma - 1.0) * gas.kappa / (gas.R * gas.gamma);

    WaveEval e;
    e.v = gas.R * th / profile.p_star;
    e.theta = th;
    e.u = profile.u_star + c * dth / (th * rt);
    e.dv = gas.R * dth / (profile.p_star * rt);
    e.dtheta = dth / rt;
    e.du = c * (d2th * th - dth * dth) / (th * th) / (1.0 + t);
    return e;
}

ContactResidual contact_residual(const GasParams& gas, const ContactProfile& profile, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("contact_residual: requires t >= 0");
    if (profile.degenerate()) return {0.0, 0.0};

    const double rt = std::sqrt(1.0 + t);
    const double span = profile.L * rt;
    const int n = 2001;
    const double dt = 1e-5;
    const double dx = 1e-4 * rt;

    double sup_q1 = 0.0, sup_q2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -span + 2.0 * span * i / (n - 1);
        const WaveEval e = contact_wave_eval(gas, profile, t, x);
        const WaveEval ep = contact_wave_eval(gas, profile, t + dt, x);
        const WaveEval em = contact_wave_eval(gas, profile, t - std::min(dt, t), x);
        const double denom = dt + std::min(dt, t);
        const double u_t = (ep.u - em.u) / denom;

        // (mu u_x / v)_x by centered differencing of the analytic flux
        const WaveEval exp_ = contact_wave_eval(gas, profile, t, x + dx);
        const WaveEval exm = contact_wave_eval(gas, profile, t, x - dx);
        const double flux_x = (gas.mu * exp_.du / exp_.v - gas.mu * exm.du / exm.v) / (2.0 * dx);

        const double q1 = u_t - flux_x;
        const double q2 = -gas.mu * e.du * e.du / e.v;
        sup_q1 = std::max(sup_q1, std::abs(q1));
        sup_q2 = std::max(sup_q2, std::abs(q2));
    }
    return {sup_q1, sup_q2};
}

}  // namespace nsf
