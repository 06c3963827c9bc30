#pragma once

#include <stdexcept>
#include <vector>

#include "nsf/ansatz.hpp"
#include "nsf/grid.hpp"
#include "nsf/shift.hpp"

namespace nsf {

// Gaussian bump added to each component of the ansatz at t = 0.
struct Perturbation {
    double A_v = 0.0, A_u = 0.0, A_theta = 0.0;
    double center = 0.0;
    double width = 5.0;
};

struct SolverConfig {
    double cfl_hyp = 0.4;
    double cfl_diff = 0.4;
    double T_end = 10.0;
    double output_every = 1.0;
    Perturbation perturbation;

    void validate() const {
        if (!(cfl_hyp > 0.0 && cfl_hyp <= 1.0) || !(cfl_diff > 0.0 && cfl_diff <= 1.0))
            throw std::invalid_argument("SolverConfig: safety factors must lie in (0,1]");
        if (!(T_end > 0.0)) throw std::invalid_argument("SolverConfig: T_end must be positive");
    }
};

struct PositivityError : std::runtime_error {
    PositivityError(double time) : std::runtime_error("positivity lost"), t(time) {}
    double t;
};

Field initial_data(const CompositeAnsatz& ansatz, const Grid& grid, const Perturbation& pert);

// discrete H1 norm of the initial bump alone
double perturbation_h1_norm(const Perturbation& pert, const Grid& grid);

// RK4 stepper advancing the augmented state (v, u, theta, X); the shift
// right-hand side is evaluated at every stage with the stage field.
class Stepper {
public:
    Stepper(const CompositeAnsatz& ansatz, const Grid& grid, const WeightFn& weight, double M,
            SolverConfig config);

    double compute_dt(const Field& field) const;
    // advances by min(compute_dt, dt_cap); returns the dt taken
    double step(Field& field, ShiftState& shift, double dt_cap = 1e300);

    const CompositeAnsatz& ansatz() const { return ansatz_; }
    const Grid& grid() const { return grid_; }

private:
    std::vector<WaveEval> rc_at(double t) const;
    double stage_xdot(const Field& f, const std::vector<WaveEval>& rc, double X) const;
    void check_positive(const Field& f, double t) const;

    const CompositeAnsatz& ansatz_;
    Grid grid_;
    WeightFn weight_;
    double M_;
    SolverConfig config_;
    double const_v_, const_u_, const_th_;

    // the end-of-step cache is reused as the next step's begin-of-step values
    mutable std::vector<WaveEval> rc_cache_;
    mutable double rc_cache_t_ = -1.0;
};

}  // namespace nsf
