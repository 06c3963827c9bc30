#pragma once

#include <array>
#include <stdexcept>

namespace nsf {

// Thermodynamic and transport constants of the ideal polytropic gas.
struct GasParams {
    double R = 1.0;           // gas constant
    double gamma = 5.0 / 3.0; // adiabatic exponent
    double mu = 1.0;          // viscosity
    double kappa = 1.0;       // heat conductivity

    void validate() const {
        if (!(R > 0.0)) throw std::domain_error("GasParams: R must be positive");
        if (!(gamma > 1.0)) throw std::domain_error("GasParams: gamma must exceed 1");
        if (!(mu > 0.0)) throw std::domain_error("GasParams: mu must be positive");
        if (!(kappa > 0.0)) throw std::domain_error("GasParams: kappa must be positive");
    }
};

// Pointwise primitive state (specific volume, velocity, temperature).
struct PrimState {
    double v = 1.0;
    double u = 0.0;
    double theta = 1.0;

    void validate() const {
        if (!(v > 0.0)) throw std::domain_error("PrimState: v must be positive");
        if (!(theta > 0.0)) throw std::domain_error("PrimState: theta must be positive");
    }
};

// Volume jumps across the three waves of the generic configuration.
struct WaveStrengths {
    double delta_R = 0.0;
    double delta_C = 0.0;
    double delta_S = 0.0;
    double delta_max = 0.3;
    // orientation of the contact jump: true walks toward larger theta (v_* < v**)
    bool contact_toward_hotter = true;

    void validate() const {
        auto in_range = [this](double d) { return d >= 0.0 && d <= delta_max; };
        if (!in_range(delta_R) || !in_range(delta_C) || !in_range(delta_S))
            throw std::domain_error("WaveStrengths: each strength must lie in [0, delta_max]");
    }
};

// The four Riemann states of the R1 + CD2 + S3 configuration, walked from `plus`.
struct EndStates {
    PrimState minus, star, starstar, plus;
    double sigma = 0.0;      // 3-shock speed
    double sigma_star = 0.0; // sqrt(gamma p* / v*) at the starstar state
    double p_star_cd = 0.0;  // common pressure across the contact
    WaveStrengths strengths;
};

double pressure(const GasParams& gas, double v, double theta);
double internal_energy(const GasParams& gas, double theta);
double total_energy(const GasParams& gas, const PrimState& s);
double entropy_s(const GasParams& gas, double v, double theta);
double lambda1(const GasParams& gas, double v, double theta);
double lambda3(const GasParams& gas, double v, double theta);

// Adiabatic constant K = p v^gamma on the isentrope of entropy s_bar.
double isentrope_K(const GasParams& gas, double s_bar);
double riemann_invariant_z1(const GasParams& gas, double v, double u, double s_bar);

PrimState rarefaction1_curve(const GasParams& gas, const PrimState& right, double v);
PrimState contact2_curve(const GasParams& gas, const PrimState& right, double v);

struct ShockJump {
    PrimState left;
    double sigma = 0.0;
};

ShockJump shock3_curve(const GasParams& gas, const PrimState& right, double v);

// The three left-hand sides of the jump conditions (mass, momentum, energy).
std::array<double, 3> rh_residual(const GasParams& gas, const PrimState& left,
                                  const PrimState& right, double sigma);

EndStates build_end_states(const GasParams& gas, const PrimState& plus,
                           const WaveStrengths& strengths);

}  // namespace nsf
