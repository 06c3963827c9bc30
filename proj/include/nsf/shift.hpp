#pragma once

#include <vector>

#include "nsf/ansatz.hpp"
#include "nsf/gas.hpp"
#include "nsf/grid.hpp"

namespace nsf {

// Monotone weight a(xi) = 1 + (lambda/delta_S)(vS(xi) - v_starstar).
struct WeightFn {
    double lambda = 0.0;
    const ShockProfile* profile = nullptr;
    double delta_S = 0.0;
};

WeightFn make_weight(const ShockProfile& profile, double lambda);
double weight_a(const WeightFn& weight, double xi);
double weight_a_prime(const WeightFn& weight, double xi);

// O(1) shift gain; the two published variants differ by a factor 3/2, the
// larger one is what the contraction argument consumes.
double m_constant(const GasParams& gas, const EndStates& ends);
double m_constant_variant(const GasParams& gas, const EndStates& ends);

struct ShiftState {
    double X = 0.0;
    double Xdot = 0.0;
};

double shift_rhs(const GasParams& gas, const Field& field, const CompositeAnsatz& ansatz,
                 const WeightFn& weight, double M, double X, double t, const Grid& grid);

}  // namespace nsf
