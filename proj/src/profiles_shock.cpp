#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsf/profiles.hpp"

namespace nsf {

namespace {

struct Vec2 {
    double v, th;
};

// Right-hand side of the profile ODE system, derived from the once-integrated
// traveling-wave relations:
//   mu sigma v'/v     = -[(p - p_+) + sigma^2 (v - v_+)]
//   kappa theta'/(sigma v) = -[R/(g-1)(theta - theta_+) + p_+(v - v_+) - sigma^2 (v - v_+)^2 / 2]
Vec2 shock_rhs(const GasParams& gas, const PrimState& plus, double sigma, double v, double th) {
    const double p = gas.R * th / v;
    const double p_plus = gas.R * plus.theta / plus.v;
    const double dv = v - plus.v;
    const double b1 = (p - p_plus) + sigma * sigma * dv;
    const double b2 = gas.R / (gas.gamma - 1.0) * (th - plus.theta) + p_plus * dv -
                      0.5 * sigma * sigma * dv * dv;
    return {-v * b1 / (gas.mu * sigma), -sigma * v * b2 / gas.kappa};
}

struct Mat2 {
    double a11, a12, a21, a22;
};

Mat2 shock_jacobian(const GasParams& gas, const PrimState& plus, double sigma, double v, double th) {
    const double p = gas.R * th / v;
    const double p_plus = gas.R * plus.theta / plus.v;
    const double dv = v - plus.v;
    const double b1 = (p - p_plus) + sigma * sigma * dv;
    Mat2 j;
    j.a11 = -(b1 + v * (-gas.R * th / (v * v) + sigma * sigma)) / (gas.mu * sigma);
    j.a12 = -gas.R / (gas.mu * sigma);
    const double b2 = gas.R / (gas.gamma - 1.0) * (th - plus.theta) + p_plus * dv -
                      0.5 * sigma * sigma * dv * dv;
    j.a21 = -sigma * (b2 + v * (p_plus - sigma * sigma * dv)) / gas.kappa;
    j.a22 = -sigma * v * gas.R / ((gas.gamma - 1.0) * gas.kappa);
    return j;
}

struct Eigen2 {
    double value;
    Vec2 vector;
};

// eigenpair with the largest eigenvalue of a real 2x2 with real spectrum
Eigen2 principal_eigen(const Mat2& m) {
    const double tr = m.a11 + m.a22;
    const double det = m.a11 * m.a22 - m.a12 * m.a21;
    const double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) throw std::runtime_error("shock profile: complex eigenvalues at fixed point");
    const double lam = 0.5 * (tr + std::sqrt(disc));
    Vec2 ev;
    if (std::abs(m.a12) > std::abs(m.a21)) {
        ev = {m.a12, lam - m.a11};
    } else if (m.a21 != 0.0) {
        ev = {lam - m.a22, m.a21};
    } else {
        ev = (m.a11 >= m.a22) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    const double norm = std::hypot(ev.v, ev.th);
    return {lam, {ev.v / norm, ev.th / norm}};
}

double slow_stable_rate(const Mat2& m) {
    const double tr = m.a11 + m.a22;
    const double det = m.a11 * m.a22 - m.a12 * m.a21;
    const double disc = tr * tr - 4.0 * det;
    if (disc < 0.0) return 0.5 * std::abs(tr);
    const double l1 = 0.5 * (tr + std::sqrt(disc));
    const double l2 = 0.5 * (tr - std::sqrt(disc));
    return std::min(std::abs(l1), std::abs(l2));
}

Vec2 rk4_step(const GasParams& gas, const PrimState& plus, double sigma, const Vec2& y, double h) {
    const Vec2 k1 = shock_rhs(gas, plus, sigma, y.v, y.th);
    const Vec2 k2 = shock_rhs(gas, plus, sigma, y.v + 0.5 * h * k1.v, y.th + 0.5 * h * k1.th);
    const Vec2 k3 = shock_rhs(gas, plus, sigma, y.v + 0.5 * h * k2.v, y.th + 0.5 * h * k2.th);
    const Vec2 k4 = shock_rhs(gas, plus, sigma, y.v + h * k3.v, y.th + h * k3.th);
    return {y.v + h / 6.0 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v),
            y.th + h / 6.0 * (k1.th + 2 * k2.th + 2 * k3.th + k4.th)};
}

}  // namespace

ShockProfile solve_shock_profile(const GasParams& gas, const PrimState& left, const PrimState& plus,
                                 double sigma, double xi_half_width, int n_samples) {
    gas.validate();
    left.validate();
    plus.validate();
    if (n_samples < 16) throw std::invalid_argument("solve_shock_profile: n_samples too small");

    ShockProfile prof;
    prof.sigma = sigma;
    prof.left = left;
    prof.right = plus;
    prof.gas = gas;
    prof.delta_S = std::abs(plus.v - left.v);

    const double half_width = xi_half_width;
    if (prof.delta_S == 0.0) {
        // degenerate: constant state
        const double W = half_width > 0.0 ? half_width : 10.0;
        prof.xi.resize(n_samples);
        for (int i = 0; i < n_samples; ++i)
            prof.xi[i] = -W + 2.0 * W * i / (n_samples - 1);
        prof.vS.assign(n_samples, plus.v);
        prof.uS.assign(n_samples, plus.u);
        prof.thetaS.assign(n_samples, plus.theta);
        prof.dvS.assign(n_samples, 0.0);
        prof.duS.assign(n_samples, 0.0);
        prof.dthetaS.assign(n_samples, 0.0);
        return prof;
    }

    const double delta = prof.delta_S;
    const Mat2 j_left = shock_jacobian(gas, plus, sigma, left.v, left.theta);
    const Eigen2 unstable = principal_eigen(j_left);
    if (!(unstable.value > 0.0))
        throw std::runtime_error("solve_shock_profile: no unstable direction at the left state");
    const Mat2 j_right = shock_jacobian(gas, plus, sigma, plus.v, plus.theta);
    const double approach_rate = slow_stable_rate(j_right);

    // launch a hair off the saddle along the unstable manifold, v-component positive
    Vec2 dir = unstable.vector;
    if (dir.v < 0.0) {
        dir.v = -dir.v;
        dir.th = -dir.th;
    }
    const double eps = 1e-8 * delta;
    Vec2 y{left.v + eps * dir.v, left.theta + eps * dir.th};

    const double stop_tol = 1e-10 * delta;
    const double span_estimate =
        std::log(1e8) / unstable.value + std::log(1e10) / std::max(approach_rate, 1e-12);
    const double xi_budget = 20.0 * span_estimate + 100.0;
    const double h_max = 0.5 / std::max(unstable.value, approach_rate);
    const double rtol = 1e-12;

    std::vector<double> xs{0.0}, vs{y.v}, ths{y.th};
    double xi = 0.0;
    double h = std::min(1e-3 / unstable.value, h_max);

    while (std::max(std::abs(y.v - plus.v), std::abs(y.th - plus.theta)) > stop_tol) {
        if (xi > xi_budget)
            throw std::runtime_error("solve_shock_profile: endpoint not reached within xi budget");
        // step doubling error control
        const Vec2 big = rk4_step(gas, plus, sigma, y, h);
        const Vec2 half = rk4_step(gas, plus, sigma, y, 0.5 * h);
        const Vec2 two = rk4_step(gas, plus, sigma, half, 0.5 * h);
        const double scale = std::max(delta, std::max(std::abs(y.v), std::abs(y.th)));
        const double err =
            std::max(std::abs(two.v - big.v), std::abs(two.th - big.th)) / 15.0 / scale;
        if (err <= rtol) {
            xi += h;
            y = two;
            if (y.v <= vs.back()) {
                // once the gap to the node is below the integrator's error floor the
                // orbit can wiggle at roundoff level; that is convergence, not a defect
                if (std::max(std::abs(y.v - plus.v), std::abs(y.th - plus.theta)) < 1e-6 * delta)
                    break;
                throw std::runtime_error("solve_shock_profile: monotonicity violation in v");
            }
            if (!(y.v > 0.0 && y.th > 0.0))
                throw std::runtime_error("solve_shock_profile: positivity lost along profile");
            xs.push_back(xi);
            vs.push_back(y.v);
            ths.push_back(y.th);
        }
        const double grow = (err > 0.0) ? 0.9 * std::pow(rtol / err, 0.2) : 2.0;
        h = std::min(h * std::clamp(grow, 0.2, 2.0), h_max);
    }

    // phase normalization: xi = 0 at the midpoint volume
    const double v_mid = 0.5 * (left.v + plus.v);
    const Pchip xi_of_v(vs, xs);
    const double xi_mid = xi_of_v(v_mid);
    for (double& x : xs) x -= xi_mid;

    const Pchip v_of_xi(xs, vs);
    const Pchip th_of_xi(xs, ths);

    const double W = half_width > 0.0 ? half_width : std::max(-xs.front(), xs.back());
    prof.xi.resize(n_samples);
    prof.vS.resize(n_samples);
    prof.uS.resize(n_samples);
    prof.thetaS.resize(n_samples);
    prof.dvS.resize(n_samples);
    prof.duS.resize(n_samples);
    prof.dthetaS.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double x = -W + 2.0 * W * i / (n_samples - 1);
        prof.xi[i] = x;
        double v, th;
        if (x <= xs.front()) {
            v = left.v;
            th = left.theta;
        } else if (x >= xs.back()) {
            v = plus.v;
            th = plus.theta;
        } else {
            v = v_of_xi(x);
            th = th_of_xi(x);
        }
        const Vec2 d = shock_rhs(gas, plus, sigma, v, th);
        prof.vS[i] = v;
        prof.thetaS[i] = th;
        prof.uS[i] = left.u - sigma * (v - left.v);
        prof.dvS[i] = d.v;
        prof.dthetaS[i] = d.th;
        prof.duS[i] = -sigma * d.v;
    }
    prof.v_interp = Pchip(prof.xi, prof.vS);
    prof.theta_interp = Pchip(prof.xi, prof.thetaS);
    return prof;
}

ShockProfile::Eval ShockProfile::eval(double xi_pt) const {
    if (delta_S == 0.0) return {right.v, right.u, right.theta, 0.0, 0.0, 0.0};
    double v, th;
    if (xi_pt <= xi.front()) {
        return {left.v, left.u, left.theta, 0.0, 0.0, 0.0};
    } else if (xi_pt >= xi.back()) {
        return {right.v, right.u, right.theta, 0.0, 0.0, 0.0};
    }
    v = v_interp(xi_pt);
    th = theta_interp(xi_pt);
    const Vec2 d = shock_rhs(gas, right, sigma, v, th);
    return {v, left.u - sigma * (v - left.v), th, d.v, -sigma * d.v, d.th};
}

ShockProfile::Eval shock_profile_eval(const ShockProfile& profile, double xi) {
    return profile.eval(xi);
}

ShockLemmaReport check_shock_lemma(const ShockProfile& profile, const GasParams& gas) {
    ShockLemmaReport rep;
    if (profile.delta_S == 0.0) return rep;

    const double p_star = gas.R * profile.left.theta / profile.left.v;
    const double sigma_star = std::sqrt(gas.gamma * p_star / profile.left.v);
    const double theta_coeff = (gas.gamma - 1.0) * p_star / gas.R;

    double sup_dv = 0.0, sup_u = 0.0, sup_th = 0.0, sup_d2v = 0.0;
    const std::size_t n = profile.xi.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double dv = profile.dvS[i];
        sup_dv = std::max(sup_dv, std::abs(dv));
        sup_u = std::max(sup_u, std::abs(profile.duS[i] + sigma_star * dv));
        sup_th = std::max(sup_th, std::abs(profile.dthetaS[i] + theta_coeff * dv));
        const Mat2 j =
            shock_jacobian(gas, profile.right, profile.sigma, profile.vS[i], profile.thetaS[i]);
        const double d2v = j.a11 * profile.dvS[i] + j.a12 * profile.dthetaS[i];
        sup_d2v = std::max(sup_d2v, std::abs(d2v));
    }
    if (sup_dv > 0.0) {
        rep.ratio_u = sup_u / sup_dv;
        rep.ratio_theta = sup_th / sup_dv;
        rep.second_deriv_ratio = sup_d2v / (profile.delta_S * sup_dv);
    }

    // least-squares fit of the exponential tail rate on each side
    auto fit_rate = [&](bool right_side) {
        const double ref_v = right_side ? profile.right.v : profile.left.v;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = profile.xi[i];
            if (right_side ? x <= 0.0 : x >= 0.0) continue;
            const double gap = std::abs(profile.vS[i] - ref_v);
            if (gap < 1e-6 * profile.delta_S || gap > 1e-2 * profile.delta_S) continue;
            const double ax = std::abs(x);
            const double ly = std::log(gap);
            sx += ax;
            sy += ly;
            sxx += ax * ax;
            sxy += ax * ly;
            ++count;
        }
        if (count < 2) return 0.0;
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        return -slope / profile.delta_S;
    };
    rep.tail_rate_right = fit_rate(true);
    rep.tail_rate_left = fit_rate(false);
    return rep;
}

std::vector<SharpDiffusionRow> check_sharp_diffusion(const GasParams& gas, const PrimState& plus,
                                                     const std::vector<double>& delta_list) {
    std::vector<SharpDiffusionRow> rows;
    rows.reserve(delta_list.size());
    for (const double delta : delta_list) {
        const ShockJump jump = shock3_curve(gas, plus, plus.v - delta);
        const ShockProfile prof = solve_shock_profile(gas, jump.left, plus, jump.sigma);

        const double p_star = gas.R * jump.left.theta / jump.left.v;
        const double v_star = jump.left.v;
        const double sigma_star = std::sqrt(gas.gamma * p_star / v_star);
        const double alpha_star =
            gas.gamma * (gas.gamma + 1.0) * p_star / (2.0 * v_star * v_star * sigma_star);
        const double g1 = gas.gamma - 1.0;
        const double visc_frac =
            gas.mu * gas.R * gas.gamma / (gas.mu * gas.R * gas.gamma + gas.kappa * g1 * g1);
        const double leading = sigma_star * alpha_star * visc_frac * (plus.v - v_star);

        const double p_plus = gas.R * plus.theta / plus.v;
        double sup_res = 0.0;
        double chord_mid = 0.0;
        double best_mid = 1e300;
        for (std::size_t i = 0; i < prof.xi.size(); ++i) {
            const double v = prof.vS[i];
            const double p = gas.R * prof.thetaS[i] / v;
            if (std::min(std::abs(v - plus.v), std::abs(v - v_star)) < 1e-3 * delta) continue;
            const double chord1 = (p - p_plus) / (v - plus.v);
            const double chord2 = (p - p_star) / (v - v_star);
            const double diff = chord1 - chord2;
            sup_res = std::max(sup_res, std::abs(diff - leading));
            if (std::abs(prof.xi[i]) < best_mid) {
                best_mid = std::abs(prof.xi[i]);
                chord_mid = diff;
            }
        }
        rows.push_back({delta, chord_mid / delta, sigma_star * alpha_star * visc_frac,
                        sup_res / (delta * delta)});
    }
    return rows;
}

}  // namespace nsf
