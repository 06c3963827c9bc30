#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nsf/gas.hpp"

using namespace nsf;

static const GasParams kGas{1.0, 5.0 / 3.0, 1.0, 1.0};

TEST_CASE("thermodynamic basics") {
    CHECK(pressure(kGas, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pressure(kGas, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(internal_energy(kGas, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(total_energy(kGas, {1.0, 2.0, 1.0}) == doctest::Approx(3.5).epsilon(1e-14));
    CHECK_THROWS_AS(pressure(kGas, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(pressure(kGas, 1.0, 0.0), std::domain_error);
}

TEST_CASE("entropy normalization and value") {
    CHECK(entropy_s(kGas, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
    // s(1, e) = R/(gamma-1) = 1.5 for gamma = 5/3
    CHECK(entropy_s(kGas, 1.0, std::exp(1.0)) == doctest::Approx(1.5).epsilon(1e-13));
    // isentrope_K inverts entropy_s: K = R theta v^{gamma-1}
    const double s = entropy_s(kGas, 0.8, 1.2);
    CHECK(isentrope_K(kGas, s) == doctest::Approx(1.2 * std::pow(0.8, 2.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("characteristic speeds") {
    CHECK(lambda3(kGas, 1.0, 1.0) == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-14));
    CHECK(lambda1(kGas, 1.0, 1.0) == doctest::Approx(-std::sqrt(5.0 / 3.0)).epsilon(1e-14));
    CHECK(lambda1(kGas, 1.0, 1.0) == -lambda3(kGas, 1.0, 1.0));
}

TEST_CASE("shock3_curve frozen oracle at v = 0.9") {
    // independent closed-form evaluation of the Hugoniot with right = (1,0,1):
    //   theta = (1.5 + 0.05) / (1.5 - 0.1/1.8), sigma^2 = (p - 1)/0.1
    const ShockJump j = shock3_curve(kGas, {1.0, 0.0, 1.0}, 0.9);
    CHECK(j.left.theta == doctest::Approx(1.0730769230769231).epsilon(1e-12));
    CHECK(j.sigma == doctest::Approx(1.3867504905630728).epsilon(1e-12));
    CHECK(j.left.u == doctest::Approx(0.13867504905630728).epsilon(1e-12));

    const auto res = rh_residual(kGas, j.left, {1.0, 0.0, 1.0}, j.sigma);
    CHECK(std::abs(res[0]) < 1e-13);
    CHECK(std::abs(res[1]) < 1e-13);
    CHECK(std::abs(res[2]) < 1e-13);

    // Lax condition
    CHECK(lambda3(kGas, 1.0, 1.0) < j.sigma);
    CHECK(j.sigma < lambda3(kGas, 0.9, j.left.theta));

    CHECK_THROWS_AS(shock3_curve(kGas, {1.0, 0.0, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(shock3_curve(kGas, {1.0, 0.0, 1.0}, 1.1), std::domain_error);
}

TEST_CASE("rarefaction1_curve frozen oracle at v = 0.9") {
    const PrimState left = rarefaction1_curve(kGas, {1.0, 0.0, 1.0}, 0.9);
    CHECK(left.theta == doctest::Approx(std::pow(0.9, -2.0 / 3.0)).epsilon(1e-13));
    // u = -(F(0.9) - F(1)) with F(v) = 3 sqrt(5/3) v^{-1/3}
    const double F = 3.0 * std::sqrt(5.0 / 3.0);
    CHECK(left.u ==
          doctest::Approx(-(F * std::pow(0.9, -1.0 / 3.0) - F)).epsilon(1e-13));

    // entropy and the 1-Riemann invariant are constant along the curve
    const double s0 = entropy_s(kGas, 1.0, 1.0);
    const double z0 = riemann_invariant_z1(kGas, 1.0, 0.0, s0);
    for (double v : {0.95, 0.9, 0.8, 0.7}) {
        const PrimState p = rarefaction1_curve(kGas, {1.0, 0.0, 1.0}, v);
        CHECK(entropy_s(kGas, p.v, p.theta) == doctest::Approx(s0).epsilon(1e-12));
        CHECK(riemann_invariant_z1(kGas, p.v, p.u, s0) == doctest::Approx(z0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rarefaction1_curve(kGas, {1.0, 0.0, 1.0}, 1.1), std::domain_error);
}

TEST_CASE("contact2_curve keeps pressure and velocity") {
    const PrimState right{0.9, 0.25, 1.073};
    const PrimState left = contact2_curve(kGas, right, 0.8);
    CHECK(left.u == right.u);
    CHECK(pressure(kGas, left.v, left.theta) ==
          doctest::Approx(pressure(kGas, right.v, right.theta)).epsilon(1e-14));
    CHECK(left.v == 0.8);
}

TEST_CASE("build_end_states zero strengths collapses to plus") {
    const EndStates es = build_end_states(kGas, {1.0, 0.0, 1.0}, {});
    for (const PrimState* s : {&es.minus, &es.star, &es.starstar}) {
        CHECK(s->v == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(s->u == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(s->theta == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(es.sigma == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("build_end_states baseline configuration") {
    WaveStrengths w;
    w.delta_R = w.delta_C = w.delta_S = 0.1;
    const EndStates es = build_end_states(kGas, {1.0, 0.0, 1.0}, w);

    CHECK(es.starstar.v == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(es.star.v == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(es.minus.v == doctest::Approx(0.7).epsilon(1e-14));

    // contact: p and u continuous
    CHECK(pressure(kGas, es.star.v, es.star.theta) ==
          doctest::Approx(pressure(kGas, es.starstar.v, es.starstar.theta)).epsilon(1e-13));
    CHECK(es.star.u == es.starstar.u);
    CHECK(es.p_star_cd == doctest::Approx(pressure(kGas, es.star.v, es.star.theta)).epsilon(1e-14));

    // Lax condition for the 3-shock
    CHECK(lambda3(kGas, es.plus.v, es.plus.theta) < es.sigma);
    CHECK(es.sigma < lambda3(kGas, es.starstar.v, es.starstar.theta));
    CHECK(es.sigma_star ==
          doctest::Approx(lambda3(kGas, es.starstar.v, es.starstar.theta)).epsilon(1e-13));

    // 1-characteristic speed increases from minus to star (rarefaction opens)
    CHECK(lambda1(kGas, es.minus.v, es.minus.theta) < lambda1(kGas, es.star.v, es.star.theta));

    CHECK_THROWS_AS(build_end_states(kGas, {1.0, 0.0, 1.0},
                                     WaveStrengths{0.4, 0.0, 0.0, 0.3, true}),
                    std::domain_error);
}

TEST_CASE("contact orientation flag") {
    WaveStrengths w;
    w.delta_C = 0.1;
    w.contact_toward_hotter = true;
    const EndStates hot = build_end_states(kGas, {1.0, 0.0, 1.0}, w);
    CHECK(hot.star.v == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(hot.star.theta < hot.starstar.theta);

    w.contact_toward_hotter = false;
    const EndStates cold = build_end_states(kGas, {1.0, 0.0, 1.0}, w);
    CHECK(cold.star.v == doctest::Approx(1.1).epsilon(1e-14));
    CHECK(cold.star.theta > cold.starstar.theta);
}

TEST_CASE("rh_residual rejects a perturbed speed") {
    const ShockJump j = shock3_curve(kGas, {1.0, 0.0, 1.0}, 0.9);
    const auto res = rh_residual(kGas, j.left, {1.0, 0.0, 1.0}, j.sigma * 1.01);
    CHECK((std::abs(res[0]) + std::abs(res[1]) + std::abs(res[2])) > 1e-4);
}
