#include "doctest.h"

#include <random>

#include <nlohmann/json.hpp>

#include "test_structures.hpp"

using namespace hermitia;
using namespace testfix;

namespace {

Form random_real_form(int dim, int degree, std::mt19937& rng) {
    Form f(dim, degree);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = u(rng);
    return f;
}

}  // namespace

TEST_CASE("structure residuals") {
    auto ce = calabi_eckmann();
    CHECK(ce.complex_structure_residual() == 0.0);
    CHECK(ce.compatibility_residual() == 0.0);
    CHECK(ce.nijenhuis_residual() < 1e-14);

    CHECK(kodaira().nijenhuis_residual() < 1e-14);
    CHECK(flat_torus(3).nijenhuis_residual() == 0.0);
}

TEST_CASE("non-integrable J has positive Nijenhuis residual") {
    // almost abelian with A = diag-shear not commuting with J1:
    // [e6,e2]=e2 only, J1 rotating (e2,e3); N(e6,e3) = -J[e6,Je3]-... != 0
    StructureConstants sc(6, {{5, 1, 1, 1.0}});
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(6, 6);
    J(5, 0) = 1.0; J(0, 5) = -1.0;   // Je1 = e6
    J(2, 1) = 1.0; J(1, 2) = -1.0;   // J1 e2 = e3
    J(4, 3) = 1.0; J(3, 4) = -1.0;
    Hermitian h(sc, J, Eigen::MatrixXd::Identity(6, 6));
    // hand oracle: N(e6,e3) = [Je6,Je3] - J[Je6,e3] - J[e6,Je3] - [e6,e3]
    //            = [-e1,-e2] - J[-e1,e3] - J[e6,-e2] - 0 = J e2 = e3
    CHECK(h.nijenhuis_residual() == doctest::Approx(1.0));
}

TEST_CASE("fundamental form and frame") {
    auto h = kodaira();
    // omega = e^12 + e^34 for g=Id, Je1=e2, Je3=e4
    Form expected = Form::basis(4, {0, 1}) + Form::basis(4, {2, 3});
    CHECK((h.omega() - expected).max_abs() < 1e-14);
    // volume = omega^2/2 = e^1234
    CHECK((h.volume() - Form::basis(4, {0, 1, 2, 3})).max_abs() < 1e-14);
    // frame orthonormality and J-adaptation
    Eigen::MatrixXd G = h.frame().transpose() * h.g() * h.frame();
    CHECK((G - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    for (int a = 0; a < 2; ++a)
        CHECK((h.J() * h.frame().col(2 * a) - h.frame().col(2 * a + 1))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
}

TEST_CASE("omega against g entrywise") {
    auto h = calabi_eckmann();
    const int d = 6;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<Eigen::VectorXd> args = {Eigen::VectorXd::Unit(d, i),
                                                 Eigen::VectorXd::Unit(d, j)};
            double om = h.omega().eval(args).real();
            double gJ = (h.J() * Eigen::VectorXd::Unit(d, i))
                            .dot(h.g() * Eigen::VectorXd::Unit(d, j));
            CHECK(om == doctest::Approx(gJ));
            // and g(x,y) = omega(x,Jy)
            std::vector<Eigen::VectorXd> args2 = {Eigen::VectorXd::Unit(d, i),
                                                  h.J() * Eigen::VectorXd::Unit(d, j)};
            CHECK(h.omega().eval(args2).real() ==
                  doctest::Approx(h.g()(i, j)));
        }
}

TEST_CASE("bidegree projection") {
    auto h = calabi_eckmann();
    // omega is (1,1)
    CHECK((h.bidegree_project(h.omega(), 1, 1) - h.omega()).max_abs() < 1e-12);
    CHECK(h.bidegree_project(h.omega(), 2, 0).max_abs() < 1e-12);

    // resolution of identity on random 3-forms
    std::mt19937 rng(43);
    Form a = random_real_form(6, 3, rng);
    Form sum(6, 3);
    for (int p = 0; p <= 3; ++p) sum = sum + h.bidegree_project(a, p, 3 - p);
    CHECK((sum - a).max_abs() < 1e-11);

    CHECK_THROWS(h.bidegree_project(a, -1, 4));
    CHECK_THROWS(h.bidegree_project(a, 1, 1));
}

TEST_CASE("complex structure equations of the Calabi-Eckmann threefold") {
    auto h = calabi_eckmann();
    // phi^1 = e^1+ie^2, phi^2 = f^1+if^2, phi^3 = e^3+if^3
    const cplx I(0.0, 1.0);
    Form phi1 = Form::basis(6, {0}) + I * Form::basis(6, {1});
    Form phi2 = Form::basis(6, {3}) + I * Form::basis(6, {4});
    Form phi3 = Form::basis(6, {2}) + I * Form::basis(6, {5});

    // phi^i are (1,0)
    for (const Form* f : {&phi1, &phi2, &phi3})
        CHECK((h.bidegree_project(*f, 1, 0) - *f).max_abs() < 1e-12);

    // d phi^1 = i phi^13 + i phi^1^conj(phi^3)
    Form dphi1 = h.d(phi1);
    Form rhs = I * phi1.wedge(phi3) + I * phi1.wedge(phi3.conjugate());
    CHECK((dphi1 - rhs).max_abs() < 1e-12);

    // d phi^2 = phi^23 - phi^2^conj(phi^3)
    Form dphi2 = h.d(phi2);
    Form rhs2 = phi2.wedge(phi3) - phi2.wedge(phi3.conjugate());
    CHECK((dphi2 - rhs2).max_abs() < 1e-12);

    // d phi^3 = -i phi^1^conj(phi^1) + phi^2^conj(phi^2)
    Form dphi3 = h.d(phi3);
    Form rhs3 = -I * phi1.wedge(phi1.conjugate()) + phi2.wedge(phi2.conjugate());
    CHECK((dphi3 - rhs3).max_abs() < 1e-12);

    // omega = (i/2) sum phi^j ^ conj(phi^j)
    Form om = (I * 0.5) * (phi1.wedge(phi1.conjugate()) +
                           phi2.wedge(phi2.conjugate()) +
                           phi3.wedge(phi3.conjugate()));
    CHECK((om - h.omega()).max_abs() < 1e-12);
}

TEST_CASE("del and delbar") {
    auto h = calabi_eckmann();
    std::mt19937 rng(47);
    for (int k = 1; k <= 3; ++k) {
        Form a = random_real_form(6, k, rng);
        // d = del + delbar
        CHECK((h.d(a) - h.del(a) - h.delbar(a)).max_abs() < 1e-11);
        // del^2 = 0, delbar^2 = 0, del delbar = -delbar del
        CHECK(h.del(h.del(a)).max_abs() < 1e-10);
        CHECK(h.delbar(h.delbar(a)).max_abs() < 1e-10);
        CHECK((h.del(h.delbar(a)) + h.delbar(h.del(a))).max_abs() < 1e-10);
    }
    auto torus = flat_torus(2);
    Form a = random_real_form(4, 2, rng);
    CHECK(torus.del(a).max_abs() == 0.0);
    CHECK(torus.delbar(a).max_abs() == 0.0);
}

TEST_CASE("dc convention consistency") {
    for (const Hermitian& h : {kodaira(), calabi_eckmann()}) {
        Form dcw = h.dc(h.omega());
        // d^c omega(x,y,z) = d omega(Jx,Jy,Jz) for this sign of d^c
        Form alt = h.apply_J_slots(h.d(h.omega()));
        CHECK((dcw - alt).max_abs() < 1e-11);
    }
    // Kaehler: d^c omega = 0
    CHECK(flat_torus(2).dc(flat_torus(2).omega()).max_abs() < 1e-14);
}

TEST_CASE("dd^c omega of the Calabi-Eckmann metric vanishes (SKT)") {
    auto h = calabi_eckmann();
    CHECK(h.d(h.dc(h.omega())).max_abs() < 1e-11);
}

TEST_CASE("hodge star") {
    auto h = calabi_eckmann();
    CHECK((h.hodge_star(Form::basis(6, {})) - h.volume()).max_abs() < 1e-12);
    // star star = (-1)^{k(2n-k)}
    std::mt19937 rng(53);
    for (int k = 1; k <= 5; ++k) {
        Form a = random_real_form(6, k, rng);
        double sign = (k * (6 - k)) % 2 == 0 ? 1.0 : -1.0;
        CHECK((h.hodge_star(h.hodge_star(a)) - sign * a).max_abs() < 1e-11);
    }
}

TEST_CASE("Lee form of the Kodaira surface") {
    auto h = kodaira();
    auto lee = h.lee_form();
    // defining equation residual
    Form resid = h.d(h.omega().wedge_pow(1)) - lee.theta.wedge(h.omega().wedge_pow(1));
    CHECK(h.form_norm(resid) < 1e-12);
    // theta = -e^4, closed
    CHECK((lee.theta + Form::basis(4, {3})).max_abs() < 1e-12);
    CHECK(h.d(lee.theta).max_abs() < 1e-13);
    CHECK(lee.theta_norm_sq == doctest::Approx(1.0));
    // eta = theta^{1,0} and theta = eta + conj(eta)
    CHECK((lee.eta + lee.eta.conjugate() - lee.theta).max_abs() < 1e-12);

    // Kaehler metric: theta = 0
    auto torus = flat_torus(2);
    CHECK(torus.lee_form().theta.max_abs() < 1e-13);

    // dw^{n-1} = theta ^ w^{n-1} re-checked by wedge
    Form lhs = lee.theta.wedge(h.omega());
    CHECK((lhs - h.d(h.omega())).max_abs() < 1e-12);
}

TEST_CASE("T^B = -*theta on the Kodaira surface") {
    auto h = kodaira();
    auto lee = h.lee_form();
    Form tb = h.dc(h.omega());
    CHECK((tb + h.hodge_star(lee.theta)).max_abs() < 1e-11);
}

TEST_CASE("form norms") {
    auto h = kodaira();
    CHECK(h.form_norm(Form::basis(4, {0})) == doctest::Approx(1.0));
    // |omega|^2 = n
    double n2 = h.form_norm(h.omega());
    CHECK(n2 * n2 == doctest::Approx(2.0));
    auto ce = calabi_eckmann();
    double n3 = ce.form_norm(ce.omega());
    CHECK(n3 * n3 == doctest::Approx(3.0));
    // Kodaira: |domega|^2 = |theta|^2
    double dn = h.form_norm(h.d(h.omega()));
    CHECK(dn * dn == doctest::Approx(h.lee_form().theta_norm_sq));
}

TEST_CASE("json round trip") {
    auto h = calabi_eckmann();
    auto back = Hermitian::from_json(h.to_json());
    CHECK((back.J() - h.J()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.g() - h.g()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.omega() - h.omega()).max_abs() == 0.0);
}
