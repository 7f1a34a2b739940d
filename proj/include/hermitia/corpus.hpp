#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hermitia/almost_abelian.hpp"
#include "hermitia/hermitian.hpp"

namespace hermitia::corpus {

// Calabi-Eckmann threefold on su(2)+su(2) with the deformed complex
// structure phi^3_t = phi^3 - t conj(phi^3) and the metric
// omega_t = (i/2) sum phi^a_t ^ conj(phi^a_t).  Requires |t| < 1.
Hermitian calabi_eckmann_su2su2(std::complex<double> t = 0.0);

// 8-dim 2-step nilpotent algebra with d phi^3 = l1 phi^{1 1bar} + i a phi^{2 2bar},
// d phi^4 = l2 phi^{2 2bar}; metric omega = (i/2) sum phi^j ^ conj(phi^j).
// Requires l1, l2 > 0.
Hermitian nilpotent_8d(double l1, double l2, double a);

// [e6,e1] = e2, [e6,e4] = e5, [e6,e5] = -e4 (a = 0, v = e2, A = rotation)
AlmostAbelianSpec almost_abelian_6d();

Hermitian kodaira_surface();   // [e1,e2] = e3, Je1 = e2, Je3 = e4
Hermitian hopf_surface();      // su(2) + R, Je1 = e2, Je3 = e4 central
Hermitian flat_torus(int n);

struct Entry {
    std::string name;
    std::function<Hermitian()> builder;
    // expected classifier verdicts at tol = 1e-9, by report key
    std::vector<std::pair<std::string, bool>> expected;
};

const std::vector<Entry>& entries();

// "corpus:" URIs: optional scheme prefix, name, optional ?k=v&... query
// with numeric values, e.g. "corpus:nilpotent_8d?l1=1&l2=1&a=0",
// "corpus:calabi_eckmann?t_re=0.5&t_im=0", "corpus:flat_torus_2".
Hermitian build_uri(const std::string& uri);

}  // namespace hermitia::corpus
