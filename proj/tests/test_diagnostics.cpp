#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nsf/diagnostics.hpp"
#include "nsf/kernels.hpp"

using namespace nsf;

static const GasParams kGas{1.0, 5.0 / 3.0, 1.0, 1.0};

static CompositeAnsatz baseline() {
    WaveStrengths w;
    w.delta_R = w.delta_C = w.delta_S = 0.1;
    return build_composite(kGas, build_end_states(kGas, {1.0, 0.0, 1.0}, w));
}

TEST_CASE("relative entropy pointwise values") {
    const PrimState ref{1.0, 0.0, 1.0};
    CHECK(relative_entropy_density(kGas, ref, ref) == 0.0);
    // v = 2 vbar alone: R Phi(2) = 1 - ln 2
    CHECK(relative_entropy_density(kGas, {2.0, 0.0, 1.0}, ref) ==
          doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-13));
    // velocity gap alone: (0.1)^2 / 2
    CHECK(relative_entropy_density(kGas, {1.0, 0.1, 1.0}, ref) ==
          doctest::Approx(0.005).epsilon(1e-13));
}

TEST_CASE("relative entropy is a nonnegative pseudo-distance") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> pos(0.2, 3.0), vel(-2.0, 2.0);
    for (int k = 0; k < 10000; ++k) {
        const PrimState a{pos(rng), vel(rng), pos(rng)};
        const PrimState b{pos(rng), vel(rng), pos(rng)};
        const double eta = relative_entropy_density(kGas, a, b);
        CHECK(eta >= 0.0);
        if (eta == 0.0) {
            CHECK(a.v == b.v);
            CHECK(a.u == b.u);
            CHECK(a.theta == b.theta);
        }
    }
}

TEST_CASE("functionals vanish when the field equals the ansatz") {
    const CompositeAnsatz a = baseline();
    const Grid grid{-80.0, 60.0, 1401};
    const WeightFn w = make_weight(a.shock, std::sqrt(0.1));
    Field f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const AnsatzEval e = eval_ansatz(a, 2.0, grid.point(i), 0.3);
        f.v[i] = e.vbar;
        f.u[i] = e.ubar;
        f.theta[i] = e.thetabar;
    }
    const DiagnosticsRecord r = functionals(kGas, f, a, w, 0.3, 2.0, grid);
    CHECK(r.E_weighted == 0.0);
    CHECK(r.E_plain == 0.0);
    CHECK(r.G_S == 0.0);
    CHECK(r.G_R == 0.0);
    CHECK(r.D == 0.0);
    CHECK(r.G_aprime == 0.0);
    CHECK(r.sup_gap == 0.0);
    CHECK(sup_gap(f, a, 0.3, 2.0, grid) == 0.0);
}

TEST_CASE("G_S telescopes for a constant volume offset") {
    const CompositeAnsatz a = baseline();
    const Grid grid{-200.0, 180.0, 3801};
    const WeightFn w = make_weight(a.shock, std::sqrt(0.1));
    const double c = 1e-3;
    Field f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const AnsatzEval e = eval_ansatz(a, 0.0, grid.point(i), 0.0);
        f.v[i] = e.vbar + c;
        f.u[i] = e.ubar;
        f.theta[i] = e.thetabar;
    }
    const DiagnosticsRecord r = functionals(kGas, f, a, w, 0.0, 0.0, grid);
    // integral of |v^S_xi| over the line is delta_S
    CHECK(r.G_S == doctest::Approx(c * c * 0.1).epsilon(1e-3));
    CHECK(r.G_R == doctest::Approx(c * c * 0.1).epsilon(1e-3));
}

TEST_CASE("D matches a hand quadrature for a sine window in u") {
    const CompositeAnsatz a = build_composite(kGas, build_end_states(kGas, {1.0, 0.0, 1.0}, {}));
    const Grid grid{-10.0, 10.0, 4001};
    const WeightFn w = make_weight(a.shock, 0.0);  // a = 1 identically
    Field f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double xi = grid.point(i);
        f.v[i] = 1.0;
        f.theta[i] = 1.0;
        f.u[i] = std::sin(xi);
    }
    const DiagnosticsRecord r = functionals(kGas, f, a, w, 0.0, 0.0, grid);
    // integral of mu cos^2 over [-10, 10] is 10 + sin(20)/2 (v = 1)
    CHECK(r.D == doctest::Approx(10.0 + 0.5 * std::sin(20.0)).epsilon(1e-5));
}

TEST_CASE("weighted entropy is sandwiched by the plain one") {
    const CompositeAnsatz a = baseline();
    const Grid grid{-80.0, 60.0, 1401};
    const double lambda = std::sqrt(0.1);
    const WeightFn w = make_weight(a.shock, lambda);
    Field f(grid.n);
    double th_min = 1e300, th_max = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const AnsatzEval e = eval_ansatz(a, 0.0, grid.point(i), 0.0);
        f.v[i] = e.vbar * (1.0 + 0.01 * std::sin(0.3 * grid.point(i)));
        f.u[i] = e.ubar + 0.01;
        f.theta[i] = e.thetabar;
        th_min = std::min(th_min, e.thetabar);
        th_max = std::max(th_max, e.thetabar);
    }
    const DiagnosticsRecord r = functionals(kGas, f, a, w, 0.0, 0.0, grid);
    CHECK(r.E_weighted >= th_min * r.E_plain);
    CHECK(r.E_weighted <= (1.0 + lambda) * th_max * r.E_plain);
    CHECK(r.G_S >= 0.0);
    CHECK(r.G_R >= 0.0);
    CHECK(r.D >= 0.0);
    CHECK(r.G_aprime >= 0.0);
}

TEST_CASE("poincare closed forms") {
    const int n = 4001;
    auto sample = [&](auto&& f) {
        std::vector<double> s(n);
        for (int i = 0; i < n; ++i) s[i] = f(static_cast<double>(i) / (n - 1));
        return s;
    };
    const PoincareResult c = poincare_check(sample([](double) { return 3.7; }));
    CHECK(c.lhs < 1e-12);
    CHECK(c.rhs == 0.0);
    CHECK(c.ratio == 0.0);

    const PoincareResult lin = poincare_check(sample([](double y) { return y; }));
    CHECK(lin.lhs == doctest::Approx(1.0 / 12.0).epsilon(1e-6));
    CHECK(lin.rhs == doctest::Approx(1.0 / 12.0).epsilon(1e-6));

    const PoincareResult quad = poincare_check(sample([](double y) { return y * y; }));
    CHECK(quad.lhs == doctest::Approx(4.0 / 45.0).epsilon(1e-5));
    CHECK(quad.rhs == doctest::Approx(0.1).epsilon(1e-5));
    CHECK(quad.ratio == doctest::Approx(8.0 / 9.0).epsilon(1e-4));

    CHECK_THROWS_AS(poincare_check(std::vector<double>(10, 0.0)), std::invalid_argument);
}

TEST_CASE("poincare holds on random trigonometric polynomials") {
    const int n = 4001;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        double c[8], d[8];
        for (int k = 0; k < 8; ++k) {
            c[k] = coeff(rng);
            d[k] = coeff(rng);
        }
        std::vector<double> s(n);
        for (int i = 0; i < n; ++i) {
            const double y = static_cast<double>(i) / (n - 1);
            double f = 0.0;
            for (int k = 0; k < 8; ++k)
                f += c[k] * std::sin((k + 1) * M_PI * y) + d[k] * std::cos((k + 1) * M_PI * y);
            s[i] = f;
        }
        const PoincareResult r = poincare_check(s);
        CHECK(r.ratio <= 1.0 + 1e-6);
    }
}

TEST_CASE("entropy decay report") {
    std::vector<DiagnosticsRecord> hist(4);
    for (int k = 0; k < 4; ++k) {
        hist[k].t = 10.0 * k;
        hist[k].E_weighted = 1.0 / (1.0 + k);
        hist[k].Xdot = 0.1 / (1.0 + k);
        hist[k].X = 0.5;
    }
    const DecayReport rep = entropy_decay_check(hist);
    CHECK(rep.decayed);
    CHECK(rep.E_initial == 1.0);
    CHECK(rep.E_final == 0.25);
    CHECK(rep.max_monotonicity_violation == 0.0);
    CHECK(rep.xdot_final_over_max == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(rep.shift_sublinearity == doctest::Approx(0.5 / 30.0).epsilon(1e-13));
    CHECK_THROWS_AS(entropy_decay_check({hist[0], hist[1]}), std::invalid_argument);
}
