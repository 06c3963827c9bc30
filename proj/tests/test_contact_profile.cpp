#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nsf/profiles.hpp"

using namespace nsf;

static const GasParams kGas{1.0, 5.0 / 3.0, 1.0, 1.0};

static ContactProfile baseline_contact() {
    // baseline contact jump: p* = 1.1923..., theta from 0.954 to 1.073
    const ShockJump j = shock3_curve(kGas, {1.0, 0.0, 1.0}, 0.9);
    const PrimState star = contact2_curve(kGas, j.left, 0.8);
    return solve_contact_profile(kGas, star.theta, j.left.theta,
                                 pressure(kGas, star.v, star.theta), star.u);
}

TEST_CASE("BVP converges with quiet tails") {
    const ContactProfile p = baseline_contact();
    CHECK(p.residual_norm < 1e-10);
    CHECK(p.Theta.front() == doctest::Approx(p.theta_left).epsilon(1e-14));
    CHECK(p.Theta.back() == doctest::Approx(p.theta_right).epsilon(1e-14));
    CHECK(std::abs(p.dTheta.front()) < 1e-12);
    CHECK(std::abs(p.dTheta.back()) < 1e-12);
    for (std::size_t i = 1; i < p.Theta.size(); ++i) CHECK(p.Theta[i] >= p.Theta[i - 1] - 1e-12);
}

TEST_CASE("diffusivity constant") {
    const ContactProfile p = baseline_contact();
    const double g1 = kGas.gamma - 1.0;
    CHECK(p.a_c ==
          doctest::Approx(g1 * kGas.kappa * p.p_star / (kGas.R * kGas.R * kGas.gamma))
              .epsilon(1e-14));
}

TEST_CASE("interpolants satisfy the self-similar ODE") {
    const ContactProfile p = baseline_contact();
    // -(eta/2) Theta' = a_c (Theta'/Theta)' checked with the stored derivative data
    for (double eta : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        const double lhs = -(eta / 2.0) * p.dtheta_at(eta);
        const double d = 1e-5;
        const double rp = p.dtheta_at(eta + d) / p.theta_at(eta + d);
        const double rm = p.dtheta_at(eta - d) / p.theta_at(eta - d);
        const double rhs = p.a_c * (rp - rm) / (2.0 * d);
        CHECK(lhs == doctest::Approx(rhs).epsilon(2e-4));
    }
}

TEST_CASE("wave evaluation keeps the pressure exactly constant") {
    const ContactProfile p = baseline_contact();
    for (double x : {-7.0, -1.0, 0.0, 2.0, 9.0}) {
        const WaveEval e = contact_wave_eval(kGas, p, 3.0, x);
        CHECK(kGas.R * e.theta / e.v == doctest::Approx(p.p_star).epsilon(1e-13));
    }
}

TEST_CASE("mass equation holds by construction") {
    const ContactProfile p = baseline_contact();
    // v_t = u_x for the contact wave (the velocity is defined from the flux)
    const double dt = 1e-6;
    for (double x : {-3.0, 0.0, 1.5}) {
        for (double t : {0.0, 4.0}) {
            const double v_t =
                (contact_wave_eval(kGas, p, t + dt, x).v - contact_wave_eval(kGas, p, t, x).v) / dt;
            const double u_x = contact_wave_eval(kGas, p, t + 0.5 * dt, x).du;
            CHECK(v_t == doctest::Approx(u_x).epsilon(1e-3).scale(1e-4));
        }
    }
}

TEST_CASE("far field reaches the end temperatures and u_star") {
    const ContactProfile p = baseline_contact();
    const WaveEval l = contact_wave_eval(kGas, p, 1.0, -1e4);
    const WaveEval r = contact_wave_eval(kGas, p, 1.0, 1e4);
    CHECK(l.theta == doctest::Approx(p.theta_left).epsilon(1e-10));
    CHECK(r.theta == doctest::Approx(p.theta_right).epsilon(1e-10));
    CHECK(l.u == doctest::Approx(p.u_star).epsilon(1e-12));
    CHECK(r.u == doctest::Approx(p.u_star).epsilon(1e-12));
}

TEST_CASE("residuals decay in time") {
    const ContactProfile p = baseline_contact();
    const ContactResidual early = contact_residual(kGas, p, 5.0);
    const ContactResidual late = contact_residual(kGas, p, 50.0);
    CHECK(early.sup_Q1 > 0.0);
    CHECK(late.sup_Q1 < early.sup_Q1);
    CHECK(late.sup_Q2 < early.sup_Q2);
}

TEST_CASE("degenerate jump gives a constant wave") {
    const ContactProfile p = solve_contact_profile(kGas, 1.0, 1.0, 1.0, 0.3);
    CHECK(p.degenerate());
    const WaveEval e = contact_wave_eval(kGas, p, 2.0, 0.7);
    CHECK(e.theta == 1.0);
    CHECK(e.u == 0.3);
    CHECK(e.dv == 0.0);
    const ContactResidual q = contact_residual(kGas, p, 3.0);
    CHECK(q.sup_Q1 == 0.0);
    CHECK(q.sup_Q2 == 0.0);
}

TEST_CASE("invalid input rejected") {
    CHECK_THROWS_AS(solve_contact_profile(kGas, -1.0, 1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(solve_contact_profile(kGas, 1.0, 1.1, 0.0, 0.0), std::domain_error);
}
