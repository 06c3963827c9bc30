#include <algorithm>
#include <chrono>
#include <cmath>

#include "nsf/simulate.hpp"

namespace nsf {

namespace {

// two outermost cells on each side must stay glued to the far-field data
void check_boundary_quiet(const Field& f, const EndStates& ends, double tol) {
    const int n = f.size();
    const PrimState& mi = ends.minus;
    const PrimState& pl = ends.plus;
    for (int i : {0, 1, n - 2, n - 1}) {
        const PrimState& ref = (i < 2) ? mi : pl;
        if (std::abs(f.v[i] - ref.v) > tol || std::abs(f.u[i] - ref.u) > tol ||
            std::abs(f.theta[i] - ref.theta) > tol)
            throw BoundaryError(f.t);
    }
}

}  // namespace

Grid auto_domain(const GasParams& gas, const EndStates& ends, const CompositeAnsatz& ansatz,
                 double T_end, double h, const Perturbation& pert) {
    const double l1 = std::abs(lambda1(gas, ends.minus.v, ends.minus.theta));
    // Gaussian tails below 1e-6 plus viscous broadening of the left-going front
    const bool perturbed = pert.A_v != 0.0 || pert.A_u != 0.0 || pert.A_theta != 0.0;
    const double pert_margin = perturbed ? std::abs(pert.center) + 8.0 * pert.width + 20.0 : 0.0;
    const double xi_min_raw = std::min(-(l1 + std::abs(ends.sigma)) * T_end - 50.0 - pert_margin,
                                       ansatz.shock.xi.front() - 10.0);
    const double xi_max_raw = std::max(50.0, ansatz.shock.xi.back() + 10.0);
    // snap to the spacing so xi = 0 is a grid point
    const long n_left = static_cast<long>(std::ceil(-xi_min_raw / h));
    const long n_right = static_cast<long>(std::ceil(xi_max_raw / h));
    Grid g;
    g.xi_min = -static_cast<double>(n_left) * h;
    g.xi_max = static_cast<double>(n_right) * h;
    g.n = static_cast<int>(n_left + n_right + 1);
    g.validate();
    return g;
}

SimulationResult run_simulation(const SimulationSetup& setup) {
    const auto wall_start = std::chrono::steady_clock::now();
    setup.gas.validate();
    setup.plus.validate();
    setup.strengths.validate();
    setup.solver.validate();
    if (!(setup.h > 0.0)) throw std::invalid_argument("run_simulation: h must be positive");

    SimulationResult res;
    res.ends = build_end_states(setup.gas, setup.plus, setup.strengths);
    res.ansatz = build_composite(setup.gas, res.ends);
    res.grid = auto_domain(setup.gas, res.ends, res.ansatz, setup.solver.T_end, setup.h,
                           setup.solver.perturbation);

    const double delta_S = setup.strengths.delta_S;
    res.lambda = setup.lambda_weight >= 0.0 ? setup.lambda_weight : std::sqrt(delta_S);
    const WeightFn weight = make_weight(res.ansatz.shock, res.lambda);
    res.M = m_constant(setup.gas, res.ends);
    res.M_variant = m_constant_variant(setup.gas, res.ends);
    const double M_used = setup.use_variant_m ? res.M_variant : res.M;

    Field field = initial_data(res.ansatz, res.grid, setup.solver.perturbation);
    res.h1_norm = perturbation_h1_norm(setup.solver.perturbation, res.grid);
    check_boundary_quiet(field, res.ends, 1e-6);

    ShiftState shift;
    Stepper stepper(res.ansatz, res.grid, weight, M_used, setup.solver);

    std::vector<double> snap_times = setup.snapshot_times;
    snap_times.push_back(0.0);
    snap_times.push_back(setup.solver.T_end);
    std::sort(snap_times.begin(), snap_times.end());
    snap_times.erase(std::unique(snap_times.begin(), snap_times.end()), snap_times.end());
    std::size_t next_snap = 0;

    auto record = [&](double t) {
        DiagnosticsRecord rec =
            functionals(setup.gas, field, res.ansatz, weight, shift.X, t, res.grid);
        rec.Xdot = shift_rhs(setup.gas, field, res.ansatz, weight, M_used, shift.X, t, res.grid);
        res.history.push_back(rec);
        res.max_sup_gap = std::max(res.max_sup_gap, rec.sup_gap);
        res.max_abs_xdot = std::max(res.max_abs_xdot, std::abs(rec.Xdot));
        check_boundary_quiet(field, res.ends, 1e-6);
    };
    auto take_snapshot = [&](double t) {
        Snapshot s;
        s.t = t;
        s.X = shift.X;
        s.field = field;
        s.vbar.resize(res.grid.n);
        s.ubar.resize(res.grid.n);
        s.thetabar.resize(res.grid.n);
        for (int i = 0; i < res.grid.n; ++i) {
            const AnsatzEval e = eval_ansatz(res.ansatz, t, res.grid.point(i), shift.X);
            s.vbar[i] = e.vbar;
            s.ubar[i] = e.ubar;
            s.thetabar[i] = e.thetabar;
        }
        res.snapshots.push_back(std::move(s));
    };

    record(0.0);
    while (next_snap < snap_times.size() && snap_times[next_snap] <= 0.0) {
        take_snapshot(0.0);
        ++next_snap;
    }

    const double T = setup.solver.T_end;
    double next_output = setup.solver.output_every;
    while (field.t < T) {
        double target = T;
        if (next_output < target) target = next_output;
        if (next_snap < snap_times.size() && snap_times[next_snap] < target)
            target = snap_times[next_snap];
        // shrinking an explicit step below the CFL ceiling is always safe
        stepper.step(field, shift, target - field.t);
        ++res.step_count;

        const double t = field.t;
        if (t >= next_output - 1e-12) {
            record(t);
            next_output += setup.solver.output_every;
        }
        while (next_snap < snap_times.size() && t >= snap_times[next_snap] - 1e-12) {
            take_snapshot(t);
            ++next_snap;
        }
    }
    if (res.history.empty() || res.history.back().t < T - 1e-12) record(field.t);

    res.final_field = field;
    res.shift = shift;
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    return res;
}

}  // namespace nsf
