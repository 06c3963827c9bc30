#pragma once

#include <vector>

#include "nsf/gas.hpp"
#include "nsf/grid.hpp"

namespace nsf::kernels {

void set_threads(int n);
int max_threads();

// Semidiscrete right-hand side of the shock-frame system: second-order centered
// first derivatives, conservative viscous fluxes at half points. Boundary rows
// are zero; the stepper owns the Dirichlet data.
void ns_rhs(const GasParams& gas, double sigma, const Grid& grid, const std::vector<double>& v,
            const std::vector<double>& u, const std::vector<double>& theta, std::vector<double>& dv,
            std::vector<double>& du, std::vector<double>& dtheta);

double max_lambda3(const GasParams& gas, const std::vector<double>& v,
                   const std::vector<double>& theta);
double min_value(const std::vector<double>& x);

// Trapezoid quadrature with fixed-size blocked accumulation; the result does
// not depend on the number of threads.
double trapezoid(const std::vector<double>& f, double h);

// Serial reference implementations (plain loops), kept for testing and benchmarks.
namespace ref {
void ns_rhs(const GasParams& gas, double sigma, const Grid& grid, const std::vector<double>& v,
            const std::vector<double>& u, const std::vector<double>& theta, std::vector<double>& dv,
            std::vector<double>& du, std::vector<double>& dtheta);
double trapezoid(const std::vector<double>& f, double h);
}  // namespace ref

}  // namespace nsf::kernels
