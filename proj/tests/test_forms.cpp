#include "doctest.h"

#include <random>

#include <nlohmann/json.hpp>

#include "test_structures.hpp"

using namespace hermitia;
using namespace testfix;

namespace {

Form random_form(int dim, int degree, std::mt19937& rng) {
    Form f(dim, degree);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < f.coeffs().size(); ++i) f.coeffs()[i] = cplx(u(rng), u(rng));
    return f;
}

}  // namespace

TEST_CASE("wedge basics") {
    Form e1 = Form::basis(4, {0});
    Form e2 = Form::basis(4, {1});
    Form w = e1.wedge(e2);
    CHECK(w.coeff({0, 1}) == cplx(1.0));
    CHECK(e2.wedge(e1).coeff({0, 1}) == cplx(-1.0));

    // odd-degree self-wedge vanishes
    std::mt19937 rng(7);
    Form a = random_form(6, 3, rng);
    CHECK(a.wedge(a).max_abs() < 1e-14);
}

TEST_CASE("graded commutativity on random forms") {
    std::mt19937 rng(11);
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            Form a = random_form(6, k, rng);
            Form b = random_form(6, l, rng);
            double sign = (k * l) % 2 == 0 ? 1.0 : -1.0;
            CHECK((a.wedge(b) - sign * b.wedge(a)).max_abs() < 1e-13);
        }
}

TEST_CASE("wedge beyond top degree is zero") {
    std::mt19937 rng(3);
    Form a = random_form(4, 3, rng);
    Form b = random_form(4, 2, rng);
    CHECK(a.wedge(b).coeffs().size() == 0);
}

TEST_CASE("CE differential structure equations") {
    auto sc = su2su2();
    // de^1 = -2 e^23
    Form de1 = ce_differential(sc, Form::basis(6, {0}));
    CHECK(de1.coeff({1, 2}) == cplx(-2.0));
    CHECK((de1 - Form::basis(6, {1, 2}, -2.0)).max_abs() < 1e-15);
    // df^2 = 2 f^13
    Form df2 = ce_differential(sc, Form::basis(6, {4}));
    CHECK((df2 - Form::basis(6, {3, 5}, 2.0)).max_abs() < 1e-15);

    auto ab = abelian(6);
    std::mt19937 rng(5);
    CHECK(ce_differential(ab, random_form(6, 2, rng)).max_abs() == 0.0);
}

TEST_CASE("d squared vanishes") {
    std::mt19937 rng(13);
    for (const auto& sc : {su2su2(), kodaira_algebra().dim() == 4 ? kodaira_algebra() : kodaira_algebra()}) {
        for (int k = 1; k < sc.dim(); ++k) {
            Form a = random_form(sc.dim(), k, rng);
            CHECK(ce_differential(sc, ce_differential(sc, a)).max_abs() < 1e-12);
        }
    }
}

TEST_CASE("Leibniz rule") {
    auto sc = su2su2();
    std::mt19937 rng(17);
    for (int k = 1; k <= 3; ++k) {
        Form a = random_form(6, k, rng);
        Form b = random_form(6, 2, rng);
        Form lhs = ce_differential(sc, a.wedge(b));
        double sign = k % 2 == 0 ? 1.0 : -1.0;
        Form rhs = ce_differential(sc, a).wedge(b) + sign * a.wedge(ce_differential(sc, b));
        CHECK((lhs - rhs).max_abs() < 1e-12);
    }
}

TEST_CASE("contraction") {
    Form e12 = Form::basis(4, {0, 1});
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(4, 0);
    Eigen::VectorXd e2 = Eigen::VectorXd::Unit(4, 1);
    CHECK((e12.contract(e1) - Form::basis(4, {1})).max_abs() == 0.0);
    CHECK((e12.contract(e2) + Form::basis(4, {0})).max_abs() == 0.0);
    CHECK_THROWS(Form(4, 0).contract(e1));

    // antiderivation property
    std::mt19937 rng(23);
    Form a = random_form(6, 2, rng);
    Form b = random_form(6, 3, rng);
    Eigen::VectorXd x = Eigen::VectorXd::Random(6);
    Form lhs = a.wedge(b).contract(x);
    Form rhs = a.contract(x).wedge(b) + a.wedge(b.contract(x));
    CHECK((lhs - rhs).max_abs() < 1e-12);
}

TEST_CASE("evaluation matches coefficients") {
    std::mt19937 rng(29);
    Form a = random_form(6, 3, rng);
    CHECK(a.eval({Eigen::VectorXd::Unit(6, 0), Eigen::VectorXd::Unit(6, 2),
                  Eigen::VectorXd::Unit(6, 4)}) == a.coeff({0, 2, 4}));
    // antisymmetry of evaluation
    Eigen::VectorXd x = Eigen::VectorXd::Random(6), y = Eigen::VectorXd::Random(6),
                    z = Eigen::VectorXd::Random(6);
    CHECK(std::abs(a.eval({x, y, z}) + a.eval({y, x, z})) < 1e-12);
}

TEST_CASE("lefschetz operator") {
    std::mt19937 rng(31);
    Form omega = random_form(6, 2, rng);
    Form a = random_form(6, 1, rng);
    CHECK((lefschetz(omega, a, 0) - a).max_abs() == 0.0);
    Form top = random_form(6, 6, rng);
    CHECK(lefschetz(omega, top, 1).coeffs().size() == 0);
}

TEST_CASE("coframe substitution round trip") {
    std::mt19937 rng(37);
    Form a = random_form(6, 3, rng);
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Random(6, 6);
    Form b = a.substitute_coframe(L).substitute_coframe(L.inverse());
    CHECK((a - b).max_abs() < 1e-10);
    // substitution is an algebra map: (a^b) o L = (a o L)^(b o L)
    Form c = random_form(6, 2, rng);
    Form lhs = a.wedge(c).substitute_coframe(L);
    Form rhs = a.substitute_coframe(L).wedge(c.substitute_coframe(L));
    CHECK((lhs - rhs).max_abs() < 1e-10);
}

TEST_CASE("json round trip") {
    std::mt19937 rng(41);
    Form a = random_form(6, 2, rng);
    Form b = Form::from_json(a.to_json());
    CHECK((a - b).max_abs() < 1e-15);
}
