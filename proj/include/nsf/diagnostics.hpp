#pragma once

#include <vector>

#include "nsf/ansatz.hpp"
#include "nsf/gas.hpp"
#include "nsf/grid.hpp"
#include "nsf/shift.hpp"

namespace nsf {

// One output-time row of every functional the long-time statement speaks about.
struct DiagnosticsRecord {
    double t = 0.0;
    double X = 0.0;
    double Xdot = 0.0;
    double E_weighted = 0.0;  // \int a theta_bar eta(U|U_bar)
    double E_plain = 0.0;     // \int eta(U|U_bar)
    double G_S = 0.0;
    double G_R = 0.0;
    double D = 0.0;
    double G_aprime = 0.0;
    double sup_gap = 0.0;
    double l2_gap = 0.0;
};

double relative_entropy_density(const GasParams& gas, const PrimState& state, const PrimState& ref);

DiagnosticsRecord functionals(const GasParams& gas, const Field& field,
                              const CompositeAnsatz& ansatz, const WeightFn& weight, double X,
                              double t, const Grid& grid);

double sup_gap(const Field& field, const CompositeAnsatz& ansatz, double X, double t,
               const Grid& grid);

struct DecayReport {
    double E_initial = 0.0;
    double E_final = 0.0;
    double max_monotonicity_violation = 0.0;  // largest single-interval increase of E_weighted
    double xdot_final_over_max = 0.0;
    double shift_sublinearity = 0.0;          // |X(T)| / T
    bool decayed = false;
};
DecayReport entropy_decay_check(const std::vector<DiagnosticsRecord>& history);

struct PoincareResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};
// f sampled uniformly on [0,1]
PoincareResult poincare_check(const std::vector<double>& f);

}  // namespace nsf
