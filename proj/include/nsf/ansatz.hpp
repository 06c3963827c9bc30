#pragma once

#include "nsf/gas.hpp"
#include "nsf/grid.hpp"
#include "nsf/profiles.hpp"

namespace nsf {

// Superposition of the three viscous waves in the shock frame. The rarefaction
// and contact parts ride at xi + sigma t; the shock part is shifted by -X.
struct CompositeAnsatz {
    GasParams gas;
    EndStates ends;
    ShockProfile shock;
    ContactProfile contact;
    RarefactionWave rarefaction;
    double sigma = 0.0;
};

CompositeAnsatz build_composite(const GasParams& gas, const EndStates& ends,
                                int profile_samples = 4001);

struct AnsatzEval {
    double vbar, ubar, thetabar;
    double dvbar, dubar, dthetabar;  // xi-derivatives
    WaveEval rar, con;               // per-wave contributions (diagnostics)
    ShockProfile::Eval shk;
};

// combined rarefaction + contact contribution at shock-frame position xi
WaveEval eval_rc(const CompositeAnsatz& ansatz, double t, double xi);

// whole-grid variant; sweeps left to right so the Burgers characteristic solve
// is warm-started from the previous point (blockwise, thread-count independent)
std::vector<WaveEval> eval_rc_row(const CompositeAnsatz& ansatz, double t, const Grid& grid);

AnsatzEval eval_ansatz(const CompositeAnsatz& ansatz, double t, double xi, double X);

struct AnsatzResidual {
    std::vector<double> Q1, Q2, mass;
    double sup_Q1 = 0.0, sup_Q2 = 0.0, sup_mass = 0.0;
    double l2_Q1 = 0.0, l2_Q2 = 0.0;
};

AnsatzResidual ansatz_residual(const CompositeAnsatz& ansatz, double t, double X, double Xdot,
                               const Grid& grid);

}  // namespace nsf
