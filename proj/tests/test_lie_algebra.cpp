#include "doctest.h"

#include <nlohmann/json.hpp>

#include "test_structures.hpp"

using namespace hermitia;
using namespace testfix;

TEST_CASE("antisymmetry is completed automatically") {
    auto sc = su2su2();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Eigen::VectorXd a = sc.bracket_basis(i, j);
            Eigen::VectorXd b = sc.bracket_basis(j, i);
            CHECK((a + b).cwiseAbs().maxCoeff() == 0.0);
        }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS(StructureConstants(3, {}));                      // odd dim
    CHECK_THROWS(StructureConstants(1, {}));
    CHECK_THROWS(StructureConstants(4, {{0, 1, 7, 1.0}}));        // out of range
    CHECK_THROWS(StructureConstants(4, {{0, 1, 2, 1.0}, {1, 0, 2, -1.0}}));
}

TEST_CASE("jacobi residual") {
    CHECK(su2su2().jacobi_residual() == doctest::Approx(0.0));
    CHECK(abelian(4).jacobi_residual() == 0.0);
    CHECK(kodaira_algebra().jacobi_residual() == 0.0);

    // [e1,e2]=e3, [e1,e3]=e1 fails Jacobi: hand expansion of the (1,2,3)
    // triple gives [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]
    //   = [e3,e3] + 0 + [-e1,e2] = -e3, residual 1.
    StructureConstants bad(4, {{0, 1, 2, 1.0}, {0, 2, 0, 1.0}});
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(4, 0);
    Eigen::VectorXd e2 = Eigen::VectorXd::Unit(4, 1);
    Eigen::VectorXd e3 = Eigen::VectorXd::Unit(4, 2);
    Eigen::VectorXd hand = bad.bracket(bad.bracket(e1, e2), e3) +
                           bad.bracket(bad.bracket(e2, e3), e1) +
                           bad.bracket(bad.bracket(e3, e1), e2);
    double expected = hand.cwiseAbs().maxCoeff();
    CHECK(expected > 0.0);
    CHECK(bad.jacobi_residual() == doctest::Approx(expected));
}

TEST_CASE("ad matrices") {
    auto sc = su2su2();
    Eigen::MatrixXd ad1 = sc.ad_basis(0);
    // e1 maps e2 -> 2e3, e3 -> -2e2
    CHECK(ad1(2, 1) == doctest::Approx(2.0));
    CHECK(ad1(1, 2) == doctest::Approx(-2.0));

    auto ab = abelian(6);
    Eigen::VectorXd x = Eigen::VectorXd::Random(6);
    CHECK(ab.ad(x).cwiseAbs().maxCoeff() == 0.0);

    // almost abelian 6-dim example: ad e6 has v=e2, a=0, A = rotation in (e4,e5)
    StructureConstants aa(6, {{5, 0, 1, 1.0}, {5, 3, 4, 1.0}, {5, 4, 3, -1.0}});
    Eigen::MatrixXd ad6 = aa.ad_basis(5);
    CHECK(ad6(1, 0) == doctest::Approx(1.0));   // [e6,e1] = e2
    CHECK(ad6(4, 3) == doctest::Approx(1.0));   // [e6,e4] = e5
    CHECK(ad6(3, 4) == doctest::Approx(-1.0));  // [e6,e5] = -e4
    CHECK(ad6.col(5).cwiseAbs().maxCoeff() == 0.0);

    // linearity of ad in x
    Eigen::VectorXd y = Eigen::VectorXd::Random(6);
    Eigen::VectorXd z = Eigen::VectorXd::Random(6);
    Eigen::MatrixXd lhs = aa.ad(2.0 * y - 3.0 * z);
    Eigen::MatrixXd rhs = 2.0 * aa.ad(y) - 3.0 * aa.ad(z);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("unimodularity") {
    StructureConstants aa(6, {{5, 0, 1, 1.0}, {5, 3, 4, 1.0}, {5, 4, 3, -1.0}});
    CHECK(aa.is_unimodular().first);
    CHECK(abelian(4).is_unimodular().first);

    // a=1, A=0: trace(ad e_4) = 1
    StructureConstants nonuni(4, {{3, 0, 0, 1.0}});
    auto [ok, res] = nonuni.is_unimodular();
    CHECK_FALSE(ok);
    CHECK(res == doctest::Approx(1.0));
}

TEST_CASE("json round trip") {
    auto sc = su2su2();
    auto j = sc.to_json();
    auto back = StructureConstants::from_json(j);
    CHECK(back.dim() == 6);
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 6; ++i)
            for (int l = 0; l < 6; ++l) CHECK(back.c(k, i, l) == sc.c(k, i, l));
}
