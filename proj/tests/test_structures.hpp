#pragma once

// Shared fixtures built directly from bracket lists, independent of the
// corpus module, so the low-level tests do not depend on it.

#include <Eigen/Dense>

#include "hermitia/hermitian.hpp"
#include "hermitia/lie_algebra.hpp"

namespace testfix {

using hermitia::BracketEntry;
using hermitia::Hermitian;
using hermitia::StructureConstants;

// su(2) + su(2): [e1,e2]=2e3, [e1,e3]=-2e2, [e2,e3]=2e1 and the f-mirror.
inline StructureConstants su2su2() {
    std::vector<BracketEntry> b = {
        {0, 1, 2, 2.0},  {0, 2, 1, -2.0}, {1, 2, 0, 2.0},
        {3, 4, 5, 2.0},  {3, 5, 4, -2.0}, {4, 5, 3, 2.0},
    };
    return StructureConstants(6, b);
}

inline StructureConstants abelian(int dim) {
    return StructureConstants(dim, {});
}

// 4-dim nilpotent algebra of the primary Kodaira surface: [e1,e2]=e3.
inline StructureConstants kodaira_algebra() {
    return StructureConstants(4, {{0, 1, 2, 1.0}});
}

// Calabi-Eckmann complex structure on su(2)+su(2):
// Je1=e2, Jf1=f2, Je3=f3 (indices 0..5 = e1,e2,e3,f1,f2,f3).
inline Eigen::MatrixXd calabi_eckmann_J() {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(6, 6);
    J(1, 0) = 1.0; J(0, 1) = -1.0;   // Je1=e2
    J(4, 3) = 1.0; J(3, 4) = -1.0;   // Jf1=f2
    J(5, 2) = 1.0; J(2, 5) = -1.0;   // Je3=f3
    return J;
}

inline Hermitian calabi_eckmann() {
    return Hermitian(su2su2(), calabi_eckmann_J(),
                     Eigen::MatrixXd::Identity(6, 6));
}

inline Hermitian kodaira() {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(4, 4);
    J(1, 0) = 1.0; J(0, 1) = -1.0;
    J(3, 2) = 1.0; J(2, 3) = -1.0;
    return Hermitian(kodaira_algebra(), J, Eigen::MatrixXd::Identity(4, 4));
}

inline Hermitian flat_torus(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        J(2 * a + 1, 2 * a) = 1.0;
        J(2 * a, 2 * a + 1) = -1.0;
    }
    return Hermitian(abelian(2 * n), J, Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

}  // namespace testfix
