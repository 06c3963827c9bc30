#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsf/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsf::kernels {

namespace {
constexpr std::size_t kBlock = 2048;

inline void rhs_point(const GasParams& gas, double sigma, double h, const double* v,
                      const double* u, const double* th, int i, double& dv, double& du,
                      double& dth) {
    const double inv2h = 1.0 / (2.0 * h);
    const double v_x = (v[i + 1] - v[i - 1]) * inv2h;
    const double u_x = (u[i + 1] - u[i - 1]) * inv2h;
    const double th_x = (th[i + 1] - th[i - 1]) * inv2h;
    const double p_m = gas.R * th[i - 1] / v[i - 1];
    const double p_0 = gas.R * th[i] / v[i];
    const double p_p = gas.R * th[i + 1] / v[i + 1];
    const double p_x = (p_p - p_m) * inv2h;

    const double v_hp = 0.5 * (v[i] + v[i + 1]);
    const double v_hm = 0.5 * (v[i] + v[i - 1]);
    const double visc_u =
        (gas.mu * (u[i + 1] - u[i]) / (h * v_hp) - gas.mu * (u[i] - u[i - 1]) / (h * v_hm)) / h;
    const double visc_th =
        (gas.kappa * (th[i + 1] - th[i]) / (h * v_hp) - gas.kappa * (th[i] - th[i - 1]) / (h * v_hm)) /
        h;

    dv = sigma * v_x + u_x;
    du = sigma * u_x - p_x + visc_u;
    dth = sigma * th_x +
          (gas.gamma - 1.0) / gas.R * (-p_0 * u_x + visc_th + gas.mu * u_x * u_x / v[i]);
}
}  // namespace

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void ns_rhs(const GasParams& gas, double sigma, const Grid& grid, const std::vector<double>& v,
            const std::vector<double>& u, const std::vector<double>& theta, std::vector<double>& dv,
            std::vector<double>& du, std::vector<double>& dtheta) {
    const int n = grid.n;
    const double h = grid.h();
    dv.assign(n, 0.0);
    du.assign(n, 0.0);
    dtheta.assign(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 1; i < n - 1; ++i)
        rhs_point(gas, sigma, h, v.data(), u.data(), theta.data(), i, dv[i], du[i], dtheta[i]);
}

double max_lambda3(const GasParams& gas, const std::vector<double>& v,
                   const std::vector<double>& theta) {
    const int n = static_cast<int>(v.size());
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (int i = 0; i < n; ++i) {
        const double lam = std::sqrt(gas.gamma * gas.R * theta[i]) / v[i];
        m = std::max(m, lam);
    }
    return m;
}

double min_value(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    double m = x.empty() ? 0.0 : x[0];
#pragma omp parallel for schedule(static) reduction(min : m)
    for (int i = 0; i < n; ++i) m = std::min(m, x[i]);
    return m;
}

double trapezoid(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 2) return 0.0;
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * kBlock;
        const std::size_t hi = std::min(lo + kBlock, n);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += f[i];
        partial[b] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;  // fixed combination order
    return h * (total - 0.5 * (f.front() + f.back()));
}

namespace ref {

void ns_rhs(const GasParams& gas, double sigma, const Grid& grid, const std::vector<double>& v,
            const std::vector<double>& u, const std::vector<double>& theta, std::vector<double>& dv,
            std::vector<double>& du, std::vector<double>& dtheta) {
    const int n = grid.n;
    const double h = grid.h();
    dv.assign(n, 0.0);
    du.assign(n, 0.0);
    dtheta.assign(n, 0.0);
    for (int i = 1; i < n - 1; ++i)
        rhs_point(gas, sigma, h, v.data(), u.data(), theta.data(), i, dv[i], du[i], dtheta[i]);
}

double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : f) s += x;
    return h * (s - 0.5 * (f.front() + f.back()));
}

}  // namespace ref

}  // namespace nsf::kernels
