#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsf/profiles.hpp"

namespace nsf {

namespace {

double w0(double w_minus, double w_star, double x0) {
    return 0.5 * (w_star + w_minus) + 0.5 * (w_star - w_minus) * std::tanh(x0);
}

double w0_prime(double w_minus, double w_star, double x0) {
    const double c = std::cosh(x0);
    return 0.5 * (w_star - w_minus) / (c * c);
}

WaveEval state_from_speed(const RarefactionWave& wave, double w, double w_x) {
    const GasParams& gas = wave.gas;
    const double g = gas.gamma;
    // invert lambda1 = -sqrt(gamma K) v^{-(g+1)/2} = w on the fan isentrope
    const double v = std::pow(g * wave.K / (w * w), 1.0 / (g + 1.0));
    const double theta = wave.K * std::pow(v, 1.0 - g) / gas.R;
    const double u =
        wave.z_bar - 2.0 * std::sqrt(g * wave.K) / (g - 1.0) * std::pow(v, -(g - 1.0) / 2.0);
    const double du = 2.0 * v / (g + 1.0) * w_x;
    const double dv = v / std::sqrt(gas.R * g * theta) * du;
    const double dtheta = -(g - 1.0) * theta / v * dv;
    return {v, u, theta, dv, du, dtheta};
}

}  // namespace

BurgersEval burgers_eval(double w_minus, double w_star, double t, double x) {
    if (!(w_minus <= w_star)) throw std::invalid_argument("burgers_eval: requires w_minus <= w_star");
    if (!(t >= 0.0)) throw std::invalid_argument("burgers_eval: requires t >= 0");
    if (w_minus == w_star) return {w_star, 0.0, x - w_star * t};

    // x0 + w0(x0) t = x is strictly increasing in x0; bisection then Newton polish
    auto g = [&](double x0) { return x0 + w0(w_minus, w_star, x0) * t - x; };
    double lo = x - std::abs(w_minus) * t - 1.0;
    double hi = x + std::abs(w_star) * t + 1.0;
    while (g(lo) > 0.0) lo -= 1.0 + (hi - lo);
    while (g(hi) < 0.0) hi += 1.0 + (hi - lo);
    for (int i = 0; i < 60 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) <= 0.0 ? lo : hi) = mid;
    }
    double x0 = 0.5 * (lo + hi);
    for (int i = 0; i < 50; ++i) {
        const double r = g(x0);
        if (std::abs(r) < 1e-13) break;
        const double dg = 1.0 + w0_prime(w_minus, w_star, x0) * t;
        double next = x0 - r / dg;
        if (next < lo || next > hi) next = 0.5 * (lo + hi);  // keep inside the bracket
        (g(next) <= 0.0 ? lo : hi) = next;
        x0 = next;
    }
    const double wp = w0_prime(w_minus, w_star, x0);
    return {w0(w_minus, w_star, x0), wp / (1.0 + wp * t), x0};
}

BurgersEval burgers_eval(double w_minus, double w_star, double t, double x, double x0_guess) {
    if (!(w_minus <= w_star)) throw std::invalid_argument("burgers_eval: requires w_minus <= w_star");
    if (!(t >= 0.0)) throw std::invalid_argument("burgers_eval: requires t >= 0");
    if (w_minus == w_star) return {w_star, 0.0, x - w_star * t};

    // g(x0) = x0 + w0(x0) t - x is increasing with g' >= 1, so plain Newton from a
    // nearby guess converges in a couple of iterations
    double x0 = x0_guess;
    for (int i = 0; i < 50; ++i) {
        const double w = w0(w_minus, w_star, x0);
        const double r = x0 + w * t - x;
        if (std::abs(r) < 1e-12 * (1.0 + std::abs(x))) {
            const double wp = w0_prime(w_minus, w_star, x0);
            return {w, wp / (1.0 + wp * t), x0};
        }
        x0 -= r / (1.0 + w0_prime(w_minus, w_star, x0) * t);
    }
    return burgers_eval(w_minus, w_star, t, x);
}

double burgers_smooth(double w_minus, double w_star, double t, double x) {
    return burgers_eval(w_minus, w_star, t, x).w;
}

RarefactionWave make_rarefaction_wave(const GasParams& gas, const PrimState& minus,
                                      const PrimState& star) {
    RarefactionWave wave;
    wave.gas = gas;
    wave.w_minus = lambda1(gas, minus.v, minus.theta);
    wave.w_star = lambda1(gas, star.v, star.theta);
    wave.s_bar = entropy_s(gas, star.v, star.theta);
    wave.z_bar = riemann_invariant_z1(gas, star.v, star.u, wave.s_bar);
    wave.K = pressure(gas, star.v, star.theta) * std::pow(star.v, gas.gamma);
    return wave;
}

WaveEval approx_rarefaction_eval(const RarefactionWave& wave, double t, double x) {
    if (!(t >= 0.0)) throw std::invalid_argument("approx_rarefaction: requires t >= 0");
    const BurgersEval be = burgers_eval(wave.w_minus, wave.w_star, 1.0 + t, x);
    return state_from_speed(wave, be.w, be.w_x);
}

WaveEval approx_rarefaction_eval(const RarefactionWave& wave, double t, double x, double& x0_io) {
    if (!(t >= 0.0)) throw std::invalid_argument("approx_rarefaction: requires t >= 0");
    const BurgersEval be = burgers_eval(wave.w_minus, wave.w_star, 1.0 + t, x, x0_io);
    x0_io = be.x0;
    return state_from_speed(wave, be.w, be.w_x);
}

PrimState approx_rarefaction(const GasParams& /*gas*/, const RarefactionWave& wave, double t,
                             double x) {
    const WaveEval e = approx_rarefaction_eval(wave, t, x);
    return {e.v, e.u, e.theta};
}

PrimState exact_rarefaction_fan(const GasParams& /*gas*/, const RarefactionWave& wave, double t,
                                double x) {
    if (!(t > 0.0)) throw std::domain_error("exact_rarefaction_fan: requires t > 0");
    const double w = std::clamp(x / t, wave.w_minus, wave.w_star);
    const WaveEval e = state_from_speed(wave, w, 0.0);
    return {e.v, e.u, e.theta};
}

}  // namespace nsf
