#pragma once

#include <stdexcept>
#include <vector>

#include "nsf/ansatz.hpp"
#include "nsf/diagnostics.hpp"
#include "nsf/gas.hpp"
#include "nsf/grid.hpp"
#include "nsf/shift.hpp"
#include "nsf/solver.hpp"

namespace nsf {

struct SimulationSetup {
    GasParams gas;
    PrimState plus{1.0, 0.0, 1.0};
    WaveStrengths strengths;
    double lambda_weight = -1.0;  // negative: default sqrt(delta_S)
    double h = 0.1;
    SolverConfig solver;
    std::vector<double> snapshot_times;  // 0 and T_end are always recorded
    bool use_variant_m = false;
};

struct Snapshot {
    double t = 0.0;
    double X = 0.0;
    Field field;
    std::vector<double> vbar, ubar, thetabar;
};

struct SimulationResult {
    EndStates ends;
    Grid grid;
    CompositeAnsatz ansatz;
    std::vector<DiagnosticsRecord> history;
    std::vector<Snapshot> snapshots;
    Field final_field;
    ShiftState shift;
    double M = 0.0, M_variant = 0.0, lambda = 0.0;
    double h1_norm = 0.0;
    long step_count = 0;
    double wall_seconds = 0.0;
    double max_sup_gap = 0.0, max_abs_xdot = 0.0;
};

struct BoundaryError : std::runtime_error {
    BoundaryError(double time) : std::runtime_error("wave reached the domain boundary"), t(time) {}
    double t;
};

/// Domain sized so that no wave touches the boundary before T_end: the
// rarefaction foot and the left-going perturbation front travel at
// |lambda_1(minus)| + sigma in the shock frame; the shock tail widens both
// margins; Gaussian tails and viscous spreading of the perturbation add to
// the left margin.
Grid auto_domain(const GasParams& gas, const EndStates& ends, const CompositeAnsatz& ansatz,
                 double T_end, double h, const Perturbation& pert = {});

SimulationResult run_simulation(const SimulationSetup& setup);

}  // namespace nsf
