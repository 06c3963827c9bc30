#include <algorithm>
#include <cmath>

#include "nsf/kernels.hpp"
#include "nsf/solver.hpp"

namespace nsf {

namespace {
double bump(const Perturbation& p, double amp, double xi) {
    const double z = (xi - p.center) / p.width;
    return amp * std::exp(-z * z);
}
}  // namespace

Field initial_data(const CompositeAnsatz& ansatz, const Grid& grid, const Perturbation& pert) {
    grid.validate();
    Field f(grid.n);
    f.t = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const double xi = grid.point(i);
        const AnsatzEval e = eval_ansatz(ansatz, 0.0, xi, 0.0);
        f.v[i] = e.vbar + bump(pert, pert.A_v, xi);
        f.u[i] = e.ubar + bump(pert, pert.A_u, xi);
        f.theta[i] = e.thetabar + bump(pert, pert.A_theta, xi);
        if (!(f.v[i] > 0.0 && f.theta[i] > 0.0))
            throw std::domain_error("initial_data: perturbation violates positivity");
    }
    return f;
}

double perturbation_h1_norm(const Perturbation& pert, const Grid& grid) {
    std::vector<double> l2(grid.n), h1(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double xi = grid.point(i);
        double sq = 0.0, dsq = 0.0;
        for (double amp : {pert.A_v, pert.A_u, pert.A_theta}) {
            const double b = bump(pert, amp, xi);
            const double db = -2.0 * (xi - pert.center) / (pert.width * pert.width) * b;
            sq += b * b;
            dsq += db * db;
        }
        l2[i] = sq;
        h1[i] = dsq;
    }
    return std::sqrt(kernels::trapezoid(l2, grid.h()) + kernels::trapezoid(h1, grid.h()));
}

Stepper::Stepper(const CompositeAnsatz& ansatz, const Grid& grid, const WeightFn& weight, double M,
                 SolverConfig config)
    : ansatz_(ansatz), grid_(grid), weight_(weight), M_(M), config_(config) {
    grid_.validate();
    config_.validate();
    const_v_ = ansatz.ends.star.v + ansatz.ends.starstar.v;
    const_u_ = ansatz.ends.star.u + ansatz.ends.starstar.u;
    const_th_ = ansatz.ends.star.theta + ansatz.ends.starstar.theta;
}

double Stepper::compute_dt(const Field& field) const {
    const double h = grid_.h();
    const double lam = kernels::max_lambda3(ansatz_.gas, field.v, field.theta);
    const double vmin = kernels::min_value(field.v);
    const double diff_coeff =
        std::max(ansatz_.gas.mu, ansatz_.gas.kappa * (ansatz_.gas.gamma - 1.0) / ansatz_.gas.R);
    const double dt_hyp = config_.cfl_hyp * h / (lam + std::abs(ansatz_.sigma));
    const double dt_diff = config_.cfl_diff * h * h * vmin / diff_coeff;
    return std::min(dt_hyp, dt_diff);
}

std::vector<WaveEval> Stepper::rc_at(double t) const { return eval_rc_row(ansatz_, t, grid_); }

double Stepper::stage_xdot(const Field& f, const std::vector<WaveEval>& rc, double X) const {
    const double delta = ansatz_.shock.delta_S;
    if (delta == 0.0) return 0.0;
    const GasParams& gas = ansatz_.gas;
    const double Rg1 = gas.R / (gas.gamma - 1.0);
    std::vector<double> integrand(grid_.n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_.n; ++i) {
        const ShockProfile::Eval s = ansatz_.shock.eval(grid_.point(i) - X);
        const double vbar = rc[i].v + s.v - const_v_;
        const double ubar = rc[i].u + s.u - const_u_;
        const double thbar = rc[i].theta + s.theta - const_th_;
        const double a = 1.0 + weight_.lambda / delta * (s.v - ansatz_.shock.left.v);
        const double pbar = gas.R * thbar / vbar;
        integrand[i] = a * (s.du * (f.u[i] - ubar) + Rg1 * s.dtheta / thbar * (f.theta[i] - thbar) +
                            pbar * s.dv / vbar * (f.v[i] - vbar));
    }
    return -M_ / delta * kernels::trapezoid(integrand, grid_.h());
}

void Stepper::check_positive(const Field& f, double t) const {
    if (kernels::min_value(f.v) <= 0.0 || kernels::min_value(f.theta) <= 0.0)
        throw PositivityError(t);
}

double Stepper::step(Field& field, ShiftState& shift, double dt_cap) {
    const double dt = std::min(compute_dt(field), dt_cap);
    const int n = grid_.n;
    const GasParams& gas = ansatz_.gas;
    const double sigma = ansatz_.sigma;
    const double t0 = field.t;

    const auto rc_beg = (rc_cache_t_ == t0) ? rc_cache_ : rc_at(t0);
    const auto rc_mid = rc_at(t0 + 0.5 * dt);
    const auto rc_end = rc_at(t0 + dt);
    rc_cache_ = rc_end;
    rc_cache_t_ = t0 + dt;

    Field stage(n);
    std::vector<double> k1v, k1u, k1t, k2v, k2u, k2t, k3v, k3u, k3t, k4v, k4u, k4t;

    // stage 1
    kernels::ns_rhs(gas, sigma, grid_, field.v, field.u, field.theta, k1v, k1u, k1t);
    const double kx1 = stage_xdot(field, rc_beg, shift.X);

    auto advance = [&](const Field& base, double w, const std::vector<double>& dv,
                       const std::vector<double>& du, const std::vector<double>& dth, double t) {
        for (int i = 0; i < n; ++i) {
            stage.v[i] = base.v[i] + w * dv[i];
            stage.u[i] = base.u[i] + w * du[i];
            stage.theta[i] = base.theta[i] + w * dth[i];
        }
        stage.t = t;
        check_positive(stage, t);
    };

    // stage 2
    advance(field, 0.5 * dt, k1v, k1u, k1t, t0 + 0.5 * dt);
    kernels::ns_rhs(gas, sigma, grid_, stage.v, stage.u, stage.theta, k2v, k2u, k2t);
    const double kx2 = stage_xdot(stage, rc_mid, shift.X + 0.5 * dt * kx1);

    // stage 3
    advance(field, 0.5 * dt, k2v, k2u, k2t, t0 + 0.5 * dt);
    kernels::ns_rhs(gas, sigma, grid_, stage.v, stage.u, stage.theta, k3v, k3u, k3t);
    const double kx3 = stage_xdot(stage, rc_mid, shift.X + 0.5 * dt * kx2);

    // stage 4
    advance(field, dt, k3v, k3u, k3t, t0 + dt);
    kernels::ns_rhs(gas, sigma, grid_, stage.v, stage.u, stage.theta, k4v, k4u, k4t);
    const double kx4 = stage_xdot(stage, rc_end, shift.X + dt * kx3);

    for (int i = 0; i < n; ++i) {
        field.v[i] += dt / 6.0 * (k1v[i] + 2 * k2v[i] + 2 * k3v[i] + k4v[i]);
        field.u[i] += dt / 6.0 * (k1u[i] + 2 * k2u[i] + 2 * k3u[i] + k4u[i]);
        field.theta[i] += dt / 6.0 * (k1t[i] + 2 * k2t[i] + 2 * k3t[i] + k4t[i]);
    }
    field.t = t0 + dt;

    // Dirichlet far-field data: ns_rhs returns zero at the end points, so the
    // boundary values are held at their initial data through every stage
    check_positive(field, field.t);

    shift.X += dt / 6.0 * (kx1 + 2 * kx2 + 2 * kx3 + kx4);
    shift.Xdot = kx4;
    return dt;
}

}  // namespace nsf
