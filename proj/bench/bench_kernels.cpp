// Timing comparison of the OpenMP kernels against the serial reference.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "nsf/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        body();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    const nsf::GasParams gas;
    const int n = 1 << 20;
    nsf::Grid grid{-100.0, 100.0, n};
    std::vector<double> v(n), u(n), th(n), dv, du, dth;
    for (int i = 0; i < n; ++i) {
        const double x = grid.point(i);
        v[i] = 1.0 + 0.1 * std::sin(0.05 * x);
        u[i] = 0.1 * std::cos(0.04 * x);
        th[i] = 1.0 + 0.05 * std::sin(0.03 * x);
    }

    std::printf("n = %d, threads = %d\n", n, nsf::kernels::max_threads());

    const double t_par = time_best_of(20, [&] {
        nsf::kernels::ns_rhs(gas, 1.0, grid, v, u, th, dv, du, dth);
    });
    const double t_ser = time_best_of(20, [&] {
        nsf::kernels::ref::ns_rhs(gas, 1.0, grid, v, u, th, dv, du, dth);
    });
    std::printf("ns_rhs      parallel %.3f ms   serial %.3f ms   speedup %.2fx\n", t_par * 1e3,
                t_ser * 1e3, t_ser / t_par);

    volatile double sink = 0.0;
    const double q_par = time_best_of(20, [&] { sink = nsf::kernels::trapezoid(v, grid.h()); });
    const double q_ser = time_best_of(20, [&] { sink = nsf::kernels::ref::trapezoid(v, grid.h()); });
    (void)sink;
    std::printf("trapezoid   parallel %.3f ms   serial %.3f ms   speedup %.2fx\n", q_par * 1e3,
                q_ser * 1e3, q_ser / q_par);

    const double diff = std::abs(nsf::kernels::trapezoid(v, grid.h()) -
                                 nsf::kernels::ref::trapezoid(v, grid.h()));
    std::printf("trapezoid parallel-vs-serial |diff| = %.3e\n", diff);
    return 0;
}
