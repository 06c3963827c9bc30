#include <cmath>

#include "nsf/kernels.hpp"
#include "nsf/shift.hpp"

namespace nsf {

WeightFn make_weight(const ShockProfile& profile, double lambda) {
    return {lambda, &profile, profile.delta_S};
}

double weight_a(const WeightFn& weight, double xi) {
    if (weight.delta_S == 0.0 || weight.profile == nullptr) return 1.0;
    const double v = weight.profile->eval(xi).v;
    return 1.0 + weight.lambda / weight.delta_S * (v - weight.profile->left.v);
}

double weight_a_prime(const WeightFn& weight, double xi) {
    if (weight.delta_S == 0.0 || weight.profile == nullptr) return 0.0;
    return weight.lambda / weight.delta_S * weight.profile->eval(xi).dv;
}

double m_constant(const GasParams& gas, const EndStates& ends) {
    const double p_star = pressure(gas, ends.starstar.v, ends.starstar.theta);
    const double v_star = ends.starstar.v;
    const double sigma_star = ends.sigma_star;
    const double alpha_star =
        gas.gamma * (gas.gamma + 1.0) * p_star / (2.0 * v_star * v_star * sigma_star);
    const double g1 = gas.gamma - 1.0;
    const double bracket = 1.0 + 2.0 * gas.kappa * g1 * g1 / (gas.mu * gas.R * gas.gamma);
    return 3.0 / (2.0 * sigma_star * sigma_star) * alpha_star * bracket;
}

double m_constant_variant(const GasParams& gas, const EndStates& ends) {
    return m_constant(gas, ends) * 2.0 / 3.0;
}

double shift_rhs(const GasParams& gas, const Field& field, const CompositeAnsatz& ansatz,
                 const WeightFn& weight, double M, double X, double t, const Grid& grid) {
    grid.validate();
    const double delta = ansatz.shock.delta_S;
    if (delta == 0.0) return 0.0;

    const int n = grid.n;
    std::vector<double> integrand(n);
    const double Rg1 = gas.R / (gas.gamma - 1.0);
    for (int i = 0; i < n; ++i) {
        const double xi = grid.point(i);
        const AnsatzEval bar = eval_ansatz(ansatz, t, xi, X);
        const ShockProfile::Eval s = ansatz.shock.eval(xi - X);
        const double a = 1.0 + weight.lambda / delta * (s.v - ansatz.shock.left.v);
        const double pbar = gas.R * bar.thetabar / bar.vbar;
        integrand[i] = a * (s.du * (field.u[i] - bar.ubar) +
                            Rg1 * s.dtheta / bar.thetabar * (field.theta[i] - bar.thetabar) +
                            pbar * s.dv / bar.vbar * (field.v[i] - bar.vbar));
    }
    return -M / delta * kernels::trapezoid(integrand, grid.h());
}

}  // namespace nsf
