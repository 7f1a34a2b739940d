#include "doctest.h"

#include <cmath>

#include "hermitia/classify.hpp"
#include "hermitia/connection.hpp"
#include "hermitia/corpus.hpp"
#include "hermitia/flow.hpp"

using namespace hermitia;

TEST_CASE("scalar ODE for the conformal factor") {
    // h = 1, |theta0|^2 = 1 is stationary
    VaismanScalarTrajectory st = vaisman_f_ode(1.0, 1.0, 1.0, 1e-3);
    CHECK(!st.degenerated);
    for (const auto& s : st.samples) CHECK(s.f == doctest::Approx(1.0));

    // h = 0, |theta0|^2 = 1 gives f(t) = sqrt(1 - 2t), gone at t = 1/2
    VaismanScalarTrajectory dg = vaisman_f_ode(0.0, 1.0, 1.0, 1e-4);
    CHECK(dg.degenerated);
    CHECK(std::abs(dg.hitting_time - 0.5) <= 1e-3);
    for (const auto& s : dg.samples) {
        if (s.t > 0.45) break;
        CHECK(s.f == doctest::Approx(std::sqrt(1.0 - 2.0 * s.t)).epsilon(1e-8));
    }

    // the fixed point f* = 1/h separates growth from degeneration
    VaismanScalarTrajectory up = vaisman_f_ode(2.0, 1.0, 2.0, 1e-3);
    CHECK(!up.degenerated);
    for (std::size_t i = 1; i < up.samples.size(); ++i)
        CHECK(up.samples[i].f > up.samples[i - 1].f);
    CHECK(vaisman_f_ode(0.5, 1.0, 10.0, 1e-3).degenerated);
}

TEST_CASE("fundamental form from the Lee form") {
    {
        Hermitian h = corpus::kodaira_surface();
        CHECK((vaisman_from_lee(h) - h.omega()).max_abs() <= 1e-12);
    }
    {
        Hermitian h = corpus::hopf_surface();
        CHECK((vaisman_from_lee(h) - h.omega()).max_abs() <= 1e-12);
        // theta is scale-free but |theta|^2 picks up 1/c, so the
        // reconstruction reproduces the scaled input exactly
        Hermitian h3 = Hermitian::from_omega(h.sc(), h.J(), 3.0 * h.omega());
        CHECK((vaisman_from_lee(h3) - h3.omega()).max_abs() <= 1e-12);
    }
    CHECK_THROWS_AS(vaisman_from_lee(corpus::flat_torus(2)),
                    std::invalid_argument);
}

TEST_CASE("Chern-Ricci ratio") {
    {
        Hermitian h = corpus::kodaira_surface();
        ChernRicciRatio cr = chern_ricci_ratio(h);
        CHECK(cr.defined);
        CHECK(std::abs(cr.h) <= 1e-12);
        CHECK(cr.residual <= 1e-12);
    }
    CHECK(!chern_ricci_ratio(corpus::flat_torus(2)).defined);
}

TEST_CASE("pluriclosed flow velocity") {
    {
        Hermitian h = corpus::flat_torus(2);
        CHECK(pluriclosed_step(h).max_abs() <= 1e-14);
    }
    {
        // on the Kodaira surface the velocity is dJ theta0, the f-ODE
        // reduction -(h - 1/f) dJ theta0 at f = 1 with h = 0
        Hermitian h = corpus::kodaira_surface();
        VaismanFlowState st = vaisman_state(h);
        CHECK(st.h == doctest::Approx(0.0));
        CHECK(st.theta0_norm_sq == doctest::Approx(1.0));
        Form vel = pluriclosed_step(h);
        CHECK((vel - st.d_j_theta0).max_abs() <= 1e-12);
        // which is -e^{12} in coordinates
        CHECK(std::real(vel.coeff({0, 1})) == doctest::Approx(-1.0));
        // the ansatz reconstruction at f = 1 is omega itself
        CHECK((reconstruct_omega(st, 1.0) - h.omega()).max_abs() <= 1e-12);
    }
    {
        // Bismut-flat metric: zero velocity
        Hermitian h = corpus::calabi_eckmann_su2su2();
        CHECK(pluriclosed_step(h).max_abs() <= 1e-10);
    }
}

TEST_CASE("pluriclosed flow trajectories") {
    {
        FlowTrajectory tr =
            integrate_pluriclosed(corpus::flat_torus(2), 0.1, 1e-3);
        CHECK(!tr.positivity_failed);
        for (const auto& s : tr.samples)
            CHECK((s.omega - tr.samples.front().omega).max_abs() <= 1e-14);
    }
    {
        // stationary Bismut-flat start
        Hermitian h = corpus::calabi_eckmann_su2su2();
        FlowTrajectory tr = integrate_pluriclosed(h, 0.05, 1e-3);
        CHECK(!tr.positivity_failed);
        CHECK((tr.samples.back().omega - h.omega()).max_abs() <= 1e-8);
    }
}

TEST_CASE("Kodaira trajectory follows the conformal ansatz") {
    Hermitian h0 = corpus::kodaira_surface();
    FlowTrajectory tr = integrate_pluriclosed(h0, 1.0, 1e-3);
    // the conformal factor f(t) = sqrt(1 - 2t) degenerates at t = 1/2
    CHECK(tr.positivity_failed);
    double t_end = tr.samples.back().t;
    CHECK(t_end > 0.47);
    CHECK(t_end < 0.53);

    for (std::size_t i = 0; i + 1 < tr.samples.size(); i += 50) {
        const FlowSample& s = tr.samples[i];
        if (s.t > 0.45) break;
        double f = std::sqrt(1.0 - 2.0 * s.t);
        // omega_t = e^{34} + f(t) e^{12}
        CHECK(std::real(s.omega.coeff({0, 1})) ==
              doctest::Approx(f).epsilon(1e-6));
        CHECK(std::real(s.omega.coeff({2, 3})) ==
              doctest::Approx(1.0).epsilon(1e-9));
        CHECK(s.skt_monitor <= 1e-8);

        Hermitian ht(h0.sc(), h0.J(),
                     Eigen::VectorXd({{f, f, 1.0, 1.0}}).asDiagonal());
        ClassificationReport rep = classify(ht);
        CHECK(rep.residual("vaisman") <= 1e-6);

        // rho^B on the ansatz is (h - 1/f) dJ theta0 = (1/f) e^{12}
        Form rho = ricci_forms(ht, bismut(ht)).rho;
        CHECK(std::real(rho.coeff({0, 1})) ==
              doctest::Approx(1.0 / f).epsilon(1e-8));
        CHECK(rho.max_abs() == doctest::Approx(1.0 / f).epsilon(1e-8));
    }
}

TEST_CASE("constant scalar curvature monitor") {
    {
        FlowTrajectory tr =
            integrate_pluriclosed(corpus::flat_torus(2), 0.01, 1e-3);
        auto mon = constant_scalar_monitor(StructureConstants(4, {}),
                                           corpus::flat_torus(2).J(), tr);
        for (const auto& m : mon) {
            CHECK(std::abs(m.s) <= 1e-12);
            CHECK(std::abs(m.b) <= 1e-12);
            CHECK(!m.h_defined);
        }
    }
    {
        Hermitian h0 = corpus::kodaira_surface();
        FlowTrajectory tr = integrate_pluriclosed(h0, 0.4, 2e-3);
        auto mon = constant_scalar_monitor(h0.sc(), h0.J(), tr);
        REQUIRE(mon.size() == tr.samples.size());
        CHECK(mon.front().b == doctest::Approx(-2.0));
        for (std::size_t i = 0; i < mon.size(); i += 20) {
            const auto& m = mon[i];
            CHECK(m.identity_residual <= 1e-6);
            CHECK(m.h_defined);
            // h_t = f(t) h_0 = 0 along the whole run
            CHECK(std::abs(m.h_t) <= 1e-8);
            CHECK(m.f == doctest::Approx(std::sqrt(1.0 - 2.0 * m.t))
                             .epsilon(1e-6));
            // theta_t = theta_0 / f(t)
            Eigen::MatrixXd g = Eigen::VectorXd({{m.f, m.f, 1.0, 1.0}})
                                    .asDiagonal();
            Hermitian ht(h0.sc(), h0.J(), g);
            Form diff = ht.lee_form().theta -
                        (1.0 / m.f) * h0.lee_form().theta;
            CHECK(diff.max_abs() <= 1e-9);
        }
    }
}
