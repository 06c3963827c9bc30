#include "nsf/gas.hpp"

#include <cmath>

namespace nsf {

namespace {

void require_positive(double v, double theta) {
    if (!(v > 0.0)) throw std::domain_error("specific volume must be positive");
    if (!(theta > 0.0)) throw std::domain_error("temperature must be positive");
}

// antiderivative of lambda1 along the isentrope p v^gamma = K, zero integration constant
double lambda1_antideriv(const GasParams& gas, double K, double v) {
    const double g = gas.gamma;
    return 2.0 * std::sqrt(g * K) / (g - 1.0) * std::pow(v, -(g - 1.0) / 2.0);
}

}  // namespace

double pressure(const GasParams& gas, double v, double theta) {
    require_positive(v, theta);
    return gas.R * theta / v;
}

double internal_energy(const GasParams& gas, double theta) {
    return gas.R / (gas.gamma - 1.0) * theta;
}

double total_energy(const GasParams& gas, const PrimState& s) {
    return internal_energy(gas, s.theta) + 0.5 * s.u * s.u;
}

double entropy_s(const GasParams& gas, double v, double theta) {
    require_positive(v, theta);
    // free additive constant fixed so that s(1,1) = 0
    return gas.R / (gas.gamma - 1.0) * std::log(theta * std::pow(v, gas.gamma - 1.0));
}

double lambda1(const GasParams& gas, double v, double theta) {
    require_positive(v, theta);
    return -std::sqrt(gas.gamma * pressure(gas, v, theta) / v);
}

double lambda3(const GasParams& gas, double v, double theta) {
    return -lambda1(gas, v, theta);
}

double isentrope_K(const GasParams& gas, double s_bar) {
    // s = R/(g-1) ln(theta v^{g-1})  =>  theta v^{g-1} = exp(s (g-1)/R)
    // K = p v^gamma = R theta v^{g-1}
    return gas.R * std::exp(s_bar * (gas.gamma - 1.0) / gas.R);
}

double riemann_invariant_z1(const GasParams& gas, double v, double u, double s_bar) {
    if (!(v > 0.0)) throw std::domain_error("specific volume must be positive");
    const double K = isentrope_K(gas, s_bar);
    // along the 1-curve du/dv = -lambda1, so u + A(v) is conserved (A' = lambda1)
    return u + lambda1_antideriv(gas, K, v);
}

PrimState rarefaction1_curve(const GasParams& gas, const PrimState& right, double v) {
    right.validate();
    if (!(v > 0.0 && v <= right.v))
        throw std::domain_error("rarefaction1_curve: requires 0 < v <= v_right");
    const double g = gas.gamma;
    const double theta = right.theta * std::pow(right.v / v, g - 1.0);
    const double K = pressure(gas, right.v, right.theta) * std::pow(right.v, g);
    const double u = right.u - (lambda1_antideriv(gas, K, v) - lambda1_antideriv(gas, K, right.v));
    return {v, u, theta};
}

PrimState contact2_curve(const GasParams& gas, const PrimState& right, double v) {
    right.validate();
    if (!(v > 0.0)) throw std::domain_error("contact2_curve: v must be positive");
    const double p_R = pressure(gas, right.v, right.theta);
    return {v, right.u, p_R * v / gas.R};
}

ShockJump shock3_curve(const GasParams& gas, const PrimState& right, double v) {
    right.validate();
    if (v >= right.v)
        throw std::domain_error("shock3_curve: no admissible 3-shock for v >= v_right");
    if (!(v > 0.0)) throw std::domain_error("shock3_curve: v must be positive");
    const double g = gas.gamma;
    const double p_R = pressure(gas, right.v, right.theta);
    // Hugoniot relation R/(g-1)(theta_R - theta) + (p_R + p)/2 (v_R - v) = 0 with p = R theta / v
    const double dv = right.v - v;
    const double num = gas.R * right.theta / (g - 1.0) + 0.5 * p_R * dv;
    const double den = gas.R / (g - 1.0) - 0.5 * gas.R * dv / v;
    if (!(den > 0.0)) throw std::domain_error("shock3_curve: jump beyond the Hugoniot asymptote");
    const double theta = num / den;
    const double p = gas.R * theta / v;
    const double sigma = std::sqrt(-(p_R - p) / dv);
    const double u = right.u + sigma * dv;
    return {{v, u, theta}, sigma};
}

std::array<double, 3> rh_residual(const GasParams& gas, const PrimState& left,
                                  const PrimState& right, double sigma) {
    const double p_l = gas.R * left.theta / left.v;
    const double p_r = gas.R * right.theta / right.v;
    const double E_l = total_energy(gas, left);
    const double E_r = total_energy(gas, right);
    return {
        -sigma * (right.v - left.v) - (right.u - left.u),
        -sigma * (right.u - left.u) + (p_r - p_l),
        -sigma * (E_r - E_l) + (p_r * right.u - p_l * left.u),
    };
}

EndStates build_end_states(const GasParams& gas, const PrimState& plus,
                           const WaveStrengths& strengths) {
    gas.validate();
    plus.validate();
    strengths.validate();

    EndStates es;
    es.plus = plus;
    es.strengths = strengths;

    if (strengths.delta_S > 0.0) {
        const auto jump = shock3_curve(gas, plus, plus.v - strengths.delta_S);
        es.starstar = jump.left;
        es.sigma = jump.sigma;
    } else {
        es.starstar = plus;
        es.sigma = lambda3(gas, plus.v, plus.theta);
    }

    const double v_star = strengths.contact_toward_hotter
                              ? es.starstar.v - strengths.delta_C
                              : es.starstar.v + strengths.delta_C;
    if (!(v_star > 0.0)) throw std::domain_error("build_end_states: contact volume nonpositive");
    es.star = contact2_curve(gas, es.starstar, v_star);

    const double v_minus = es.star.v - strengths.delta_R;
    if (!(v_minus > 0.0)) throw std::domain_error("build_end_states: rarefaction volume nonpositive");
    es.minus = rarefaction1_curve(gas, es.star, v_minus);

    es.p_star_cd = pressure(gas, es.star.v, es.star.theta);
    es.sigma_star = std::sqrt(gas.gamma * pressure(gas, es.starstar.v, es.starstar.theta) / es.starstar.v);
    return es;
}

}  // namespace nsf
