#include "hermitia/corpus.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hermitia::corpus {

namespace {

StructureConstants su2su2() {
    std::vector<BracketEntry> b = {
        {0, 1, 2, 2.0}, {0, 2, 1, -2.0}, {1, 2, 0, 2.0},
        {3, 4, 5, 2.0}, {3, 5, 4, -2.0}, {4, 5, 3, 2.0},
    };
    return StructureConstants(6, b);
}

Eigen::MatrixXd standard_J(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        J(2 * a + 1, 2 * a) = 1.0;
        J(2 * a, 2 * a + 1) = -1.0;
    }
    return J;
}

Form one_form(int dim, const Eigen::RowVectorXcd& row) {
    Form f(dim, 1);
    for (int j = 0; j < dim; ++j) f.set_coeff({j}, row[j]);
    return f;
}

// self-test of the real/complex conversion: each row of Phi must be a
// (1,0)-form of the built structure
void check_coframe(const Hermitian& h, const Eigen::MatrixXcd& Phi) {
    for (int a = 0; a < Phi.rows(); ++a) {
        Form phi = one_form(h.dim(), Phi.row(a));
        if ((h.bidegree_project(phi, 1, 0) - phi).max_abs() > 1e-10)
            throw std::logic_error("coframe conversion self-test failed");
    }
}

}  // namespace

Hermitian calabi_eckmann_su2su2(std::complex<double> t) {
    if (std::abs(t) >= 1.0)
        throw std::invalid_argument("deformation parameter must satisfy |t| < 1");
    const cplx I(0.0, 1.0);
    // basis e1,e2,e3,f1,f2,f3; phi^1 = e^1+ie^2, phi^2 = f^1+if^2,
    // phi^3_t = (e^3+if^3) - t(e^3-if^3)
    Eigen::MatrixXcd Phi = Eigen::MatrixXcd::Zero(3, 6);
    Phi(0, 0) = 1.0; Phi(0, 1) = I;
    Phi(1, 3) = 1.0; Phi(1, 4) = I;
    Phi(2, 2) = 1.0 - t; Phi(2, 5) = I * (1.0 + t);

    Eigen::MatrixXcd M(6, 6);
    M.topRows(3) = Phi;
    M.bottomRows(3) = Phi.conjugate();
    Eigen::VectorXcd diag(6);
    diag << I, I, I, -I, -I, -I;
    Eigen::MatrixXcd Jc = M.inverse() * diag.asDiagonal() * M;
    if (Jc.imag().cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("complex structure is not real");
    Eigen::MatrixXd J = Jc.real();

    Form omega(6, 2);
    for (int a = 0; a < 3; ++a) {
        Form phi = one_form(6, Phi.row(a));
        omega = omega + (I * 0.5) * phi.wedge(phi.conjugate());
    }
    Hermitian h = Hermitian::from_omega(su2su2(), J, omega);
    check_coframe(h, Phi);
    return h;
}

Hermitian nilpotent_8d(double l1, double l2, double a) {
    if (l1 <= 0.0 || l2 <= 0.0)
        throw std::invalid_argument("l1 and l2 must be positive");
    // phi^j = e^{2j-1} + i e^{2j}; the structure equations
    //   d phi^3 = l1 phi^{1 1bar} + i a phi^{2 2bar},  d phi^4 = l2 phi^{2 2bar}
    // give de^5 = 2a e^{34}, de^6 = -2 l1 e^{12}, de^8 = -2 l2 e^{34}
    std::vector<BracketEntry> b;
    if (a != 0.0) b.push_back({2, 3, 4, -2.0 * a});
    b.push_back({0, 1, 5, 2.0 * l1});
    b.push_back({2, 3, 7, 2.0 * l2});
    StructureConstants sc(8, b);
    Hermitian h(sc, standard_J(4), Eigen::MatrixXd::Identity(8, 8));

    // round-trip self-test against the complex structure equations
    const cplx I(0.0, 1.0);
    Eigen::MatrixXcd Phi = Eigen::MatrixXcd::Zero(4, 8);
    for (int j = 0; j < 4; ++j) {
        Phi(j, 2 * j) = 1.0;
        Phi(j, 2 * j + 1) = I;
    }
    check_coframe(h, Phi);
    Form phi1 = one_form(8, Phi.row(0));
    Form phi2 = one_form(8, Phi.row(1));
    Form dphi3 = h.d(one_form(8, Phi.row(2)));
    Form dphi4 = h.d(one_form(8, Phi.row(3)));
    Form want3 = cplx(l1) * phi1.wedge(phi1.conjugate()) +
                 I * a * phi2.wedge(phi2.conjugate());
    Form want4 = cplx(l2) * phi2.wedge(phi2.conjugate());
    if ((dphi3 - want3).max_abs() > 1e-12 || (dphi4 - want4).max_abs() > 1e-12)
        throw std::logic_error("structure equation self-test failed");
    return h;
}

AlmostAbelianSpec almost_abelian_6d() {
    AlmostAbelianSpec spec;
    spec.a = 0.0;
    spec.v = Eigen::VectorXd::Zero(4);
    spec.v[0] = 1.0;  // v = e2
    spec.A = Eigen::MatrixXd::Zero(4, 4);
    spec.A(3, 2) = 1.0;   // [e6,e4] = e5
    spec.A(2, 3) = -1.0;  // [e6,e5] = -e4
    spec.J1 = AlmostAbelianSpec::standard_J1(4);
    return spec;
}

Hermitian kodaira_surface() {
    StructureConstants sc(4, {{0, 1, 2, 1.0}});
    return Hermitian(sc, standard_J(2), Eigen::MatrixXd::Identity(4, 4));
}

Hermitian hopf_surface() {
    std::vector<BracketEntry> b = {
        {0, 1, 2, 2.0}, {0, 2, 1, -2.0}, {1, 2, 0, 2.0},
    };
    StructureConstants sc(4, b);
    return Hermitian(sc, standard_J(2), Eigen::MatrixXd::Identity(4, 4));
}

Hermitian flat_torus(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return Hermitian(StructureConstants(2 * n, {}), standard_J(n),
                     Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"flat_torus_2",
         [] { return flat_torus(2); },
         {{"kahler", true}, {"skt", true}, {"gauduchon", true},
          {"astheno", true}, {"lck", true}, {"vaisman", true},
          {"kahler_like", true}, {"symmetry13", true}, {"bismut_flat", true},
          {"parallel_torsion_B", true}, {"parallel_torsion_LC", true}}},
        {"kodaira",
         [] { return kodaira_surface(); },
         {{"kahler", false}, {"skt", true}, {"gauduchon", true},
          {"astheno", true}, {"lck", true}, {"vaisman", true},
          {"lee_potential", true}, {"kahler_like", true},
          {"symmetry13", false}, {"bismut_flat", false},
          {"parallel_torsion_B", true}, {"parallel_torsion_LC", true}}},
        {"hopf",
         [] { return hopf_surface(); },
         {{"kahler", false}, {"skt", true}, {"gauduchon", true},
          {"astheno", true}, {"lck", true}, {"vaisman", true},
          {"lee_potential", true}, {"kahler_like", true},
          {"symmetry13", true}, {"bismut_flat", true},
          {"parallel_torsion_B", true}, {"parallel_torsion_LC", true}}},
        {"calabi_eckmann",
         [] { return calabi_eckmann_su2su2(); },
         {{"kahler", false}, {"skt", true}, {"gauduchon", true},
          {"astheno", true}, {"lee_potential", true}, {"kahler_like", true},
          {"symmetry13", true}, {"bismut_flat", true},
          {"parallel_torsion_B", true}, {"parallel_torsion_LC", true}}},
        {"nilpotent_8d",
         [] { return nilpotent_8d(1.0, 1.0, 0.0); },
         {{"kahler", false}, {"skt", true}, {"gauduchon", true},
          {"astheno", false}, {"lck", false}, {"vaisman", false},
          {"lee_potential", false}}},
        {"aa6d",
         [] { return build(almost_abelian_6d()); },
         {{"kahler", false}, {"skt", true}, {"kahler_like", true},
          {"symmetry13", false}, {"bismut_flat", false},
          {"parallel_torsion_B", true}}},
    };
    return table;
}

Hermitian build_uri(const std::string& uri) {
    std::string s = uri;
    if (s.rfind("corpus:", 0) == 0) s = s.substr(7);
    std::string name = s;
    std::map<std::string, double> params;
    if (auto q = s.find('?'); q != std::string::npos) {
        name = s.substr(0, q);
        std::string rest = s.substr(q + 1);
        while (!rest.empty()) {
            auto amp = rest.find('&');
            std::string kv = rest.substr(0, amp);
            rest = amp == std::string::npos ? "" : rest.substr(amp + 1);
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad query parameter: " + kv);
            params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
    }
    if (name.rfind("flat_torus_", 0) == 0)
        return flat_torus(std::stoi(name.substr(11)));
    if (name == "kodaira") return kodaira_surface();
    if (name == "hopf") return hopf_surface();
    if (name == "aa6d") return build(almost_abelian_6d());
    if (name == "calabi_eckmann") {
        double re = params.count("t") ? params["t"] : 0.0;
        if (params.count("t_re")) re = params["t_re"];
        double im = params.count("t_im") ? params["t_im"] : 0.0;
        return calabi_eckmann_su2su2({re, im});
    }
    if (name == "nilpotent_8d") {
        double l1 = params.count("l1") ? params["l1"] : 1.0;
        double l2 = params.count("l2") ? params["l2"] : 1.0;
        double a = params.count("a") ? params["a"] : 0.0;
        return nilpotent_8d(l1, l2, a);
    }
    throw std::invalid_argument("unknown corpus entry: " + name);
}

}  // namespace hermitia::corpus
