#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nsf/diagnostics.hpp"
#include "nsf/kernels.hpp"

namespace nsf {

namespace {
double phi(double z) { return z - 1.0 - std::log(z); }
}  // namespace

double relative_entropy_density(const GasParams& gas, const PrimState& state,
                                const PrimState& ref) {
    const double du = state.u - ref.u;
    return gas.R * phi(state.v / ref.v) + gas.R / (gas.gamma - 1.0) * phi(state.theta / ref.theta) +
           du * du / (2.0 * ref.theta);
}

DiagnosticsRecord functionals(const GasParams& gas, const Field& field,
                              const CompositeAnsatz& ansatz, const WeightFn& weight, double X,
                              double t, const Grid& grid) {
    grid.validate();
    const int n = grid.n;
    const double h = grid.h();

    std::vector<AnsatzEval> bar(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) bar[i] = eval_ansatz(ansatz, t, grid.point(i), X);

    std::vector<double> eta_w(n), eta_p(n), gs(n), gr(n), dd(n), ga(n);
    std::vector<double> sup_local(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double xi = grid.point(i);
        const PrimState st{field.v[i], field.u[i], field.theta[i]};
        const PrimState rf{bar[i].vbar, bar[i].ubar, bar[i].thetabar};
        const double eta = relative_entropy_density(gas, st, rf);
        const double a = weight_a(weight, xi - X);
        eta_p[i] = eta;
        eta_w[i] = a * rf.theta * eta;
        ga[i] = weight_a_prime(weight, xi - X) * rf.theta * eta;

        const double ev = st.v - rf.v;
        const double eu = st.u - rf.u;
        const double et = st.theta - rf.theta;
        gs[i] = std::abs(bar[i].shk.dv) * (ev * ev + eu * eu + et * et);
        gr[i] = std::abs(bar[i].rar.dv) * (ev * ev + et * et);
        sup_local[i] = std::max({std::abs(ev), std::abs(eu), std::abs(et)});

        // perturbation derivatives by centered differences, one-sided at the ends
        const int im = std::max(i - 1, 0);
        const int ip = std::min(i + 1, n - 1);
        const double span = (ip - im) * h;
        const AnsatzEval& bm = bar[im];
        const AnsatzEval& bp = bar[ip];
        const double dxu = ((field.u[ip] - bp.ubar) - (field.u[im] - bm.ubar)) / span;
        const double dxt = ((field.theta[ip] - bp.thetabar) - (field.theta[im] - bm.thetabar)) / span;
        dd[i] = a * (gas.mu / st.v * dxu * dxu +
                     gas.kappa / (st.v * st.theta) * dxt * dxt);
    }

    DiagnosticsRecord rec;
    rec.t = t;
    rec.X = X;
    rec.E_weighted = kernels::trapezoid(eta_w, h);
    rec.E_plain = kernels::trapezoid(eta_p, h);
    rec.G_S = kernels::trapezoid(gs, h);
    rec.G_R = kernels::trapezoid(gr, h);
    rec.D = kernels::trapezoid(dd, h);
    rec.G_aprime = ansatz.sigma * kernels::trapezoid(ga, h);
    rec.sup_gap = *std::max_element(sup_local.begin(), sup_local.end());
    std::vector<double> sq(n);
    for (int i = 0; i < n; ++i) sq[i] = sup_local[i] * sup_local[i];
    rec.l2_gap = std::sqrt(kernels::trapezoid(sq, h));
    return rec;
}

double sup_gap(const Field& field, const CompositeAnsatz& ansatz, double X, double t,
               const Grid& grid) {
    grid.validate();
    double m = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const AnsatzEval e = eval_ansatz(ansatz, t, grid.point(i), X);
        m = std::max({m, std::abs(field.v[i] - e.vbar), std::abs(field.u[i] - e.ubar),
                      std::abs(field.theta[i] - e.thetabar)});
    }
    return m;
}

DecayReport entropy_decay_check(const std::vector<DiagnosticsRecord>& history) {
    if (history.size() < 3)
        throw std::invalid_argument("entropy_decay_check: need at least 3 recorded times");
    DecayReport rep;
    rep.E_initial = history.front().E_weighted;
    rep.E_final = history.back().E_weighted;
    double max_xdot = 0.0;
    for (std::size_t k = 1; k < history.size(); ++k) {
        const double rise = history[k].E_weighted - history[k - 1].E_weighted;
        rep.max_monotonicity_violation = std::max(rep.max_monotonicity_violation, rise);
    }
    for (const auto& r : history) max_xdot = std::max(max_xdot, std::abs(r.Xdot));
    rep.xdot_final_over_max = max_xdot > 0.0 ? std::abs(history.back().Xdot) / max_xdot : 0.0;
    const double T = history.back().t;
    rep.shift_sublinearity = T > 0.0 ? std::abs(history.back().X) / T : 0.0;
    rep.decayed = rep.E_final < rep.E_initial;
    return rep;
}

PoincareResult poincare_check(const std::vector<double>& f) {
    const int n = static_cast<int>(f.size());
    if (n < 1001) throw std::invalid_argument("poincare_check: need at least 1001 samples");
    const double h = 1.0 / (n - 1);
    const double mean = kernels::trapezoid(f, h);

    std::vector<double> lhs_int(n), rhs_int(n);
    for (int i = 0; i < n; ++i) {
        const double d = f[i] - mean;
        lhs_int[i] = d * d;
        const int im = std::max(i - 1, 0);
        const int ip = std::min(i + 1, n - 1);
        const double fp = (f[ip] - f[im]) / ((ip - im) * h);
        const double y = i * h;
        rhs_int[i] = y * (1.0 - y) * fp * fp;
    }
    PoincareResult res;
    res.lhs = kernels::trapezoid(lhs_int, h);
    res.rhs = 0.5 * kernels::trapezoid(rhs_int, h);
    res.ratio = res.rhs > 0.0 ? res.lhs / res.rhs : 0.0;
    return res;
}

}  // namespace nsf
