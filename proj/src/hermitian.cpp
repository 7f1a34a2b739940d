#include "hermitia/hermitian.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermitia {

Hermitian::Hermitian(StructureConstants sc, Eigen::MatrixXd J, Eigen::MatrixXd g)
    : sc_(std::move(sc)), J_(std::move(J)), g_(std::move(g)) {
    const int d = sc_.dim();
    if (J_.rows() != d || J_.cols() != d || g_.rows() != d || g_.cols() != d)
        throw std::invalid_argument("J and g must be dim x dim");
    Eigen::LLT<Eigen::MatrixXd> llt(g_);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("g must be symmetric positive definite");
    build_caches();
}

Hermitian Hermitian::from_omega(const StructureConstants& sc,
                                const Eigen::MatrixXd& J, const Form& omega) {
    const int d = sc.dim();
    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // g(x,y) = omega(x, Jy)
            std::vector<Eigen::VectorXd> args = {Eigen::VectorXd::Unit(d, i),
                                                 J.col(j)};
            g(i, j) = omega.eval(args).real();
        }
    g = 0.5 * (g + g.transpose().eval());
    return Hermitian(sc, J, g);
}

void Hermitian::build_caches() {
    const int d = sc_.dim();
    const int n = d / 2;

    // J-adapted Gram-Schmidt: pairs (u, Ju) in input basis order
    frame_ = Eigen::MatrixXd::Zero(d, d);
    int built = 0;
    auto project_out = [&](Eigen::VectorXd v) {
        for (int m = 0; m < built; ++m) {
            Eigen::VectorXd u = frame_.col(m);
            v -= (u.dot(g_ * v)) * u;
        }
        return v;
    };
    for (int i = 0; i < d && built < d; ++i) {
        Eigen::VectorXd v = project_out(Eigen::VectorXd::Unit(d, i));
        double norm2 = v.dot(g_ * v);
        if (norm2 < 1e-20) continue;
        Eigen::VectorXd u = v / std::sqrt(norm2);
        // second pass for numerical orthogonality
        u = project_out(u);
        u /= std::sqrt(u.dot(g_ * u));
        frame_.col(built++) = u;
        Eigen::VectorXd w = project_out(J_ * u);
        w /= std::sqrt(w.dot(g_ * w));
        frame_.col(built++) = w;
    }
    if (built != d) throw std::runtime_error("frame construction failed");
    frame_inv_ = frame_.inverse();

    // fundamental form omega(x,y) = g(Jx,y)
    Eigen::MatrixXd om = J_.transpose() * g_;
    omega_ = Form(d, 2);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (om(i, j) != 0.0) omega_.set_coeff({i, j}, om(i, j));

    double nfact = 1.0;
    for (int i = 2; i <= n; ++i) nfact *= i;
    volume_ = omega_.wedge_pow(n) * cplx(1.0 / nfact);

    // complex coframe f = (phi^1..phi^n, conj(phi^1)..conj(phi^n)),
    // phi^a = u^{2a} + i u^{2a+1} (0-based)
    const cplx I(0.0, 1.0);
    Eigen::MatrixXcd u2c = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd c2u = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < n; ++a) {
        u2c(2 * a, a) = 0.5;
        u2c(2 * a, n + a) = 0.5;
        u2c(2 * a + 1, a) = -0.5 * I;
        u2c(2 * a + 1, n + a) = 0.5 * I;
        c2u(a, 2 * a) = 1.0;
        c2u(a, 2 * a + 1) = I;
        c2u(n + a, 2 * a) = 1.0;
        c2u(n + a, 2 * a + 1) = -I;
    }
    e_to_c_ = frame_.cast<cplx>() * u2c;
    c_to_e_ = c2u * frame_inv_.cast<cplx>();
}

double Hermitian::complex_structure_residual() const {
    const int d = sc_.dim();
    return (J_ * J_ + Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

double Hermitian::compatibility_residual() const {
    return (J_.transpose() * g_ * J_ - g_).cwiseAbs().maxCoeff();
}

double Hermitian::nijenhuis_residual() const {
    const int d = sc_.dim();
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(d, i);
            Eigen::VectorXd y = Eigen::VectorXd::Unit(d, j);
            Eigen::VectorXd nij = sc_.bracket(J_ * x, J_ * y) -
                                  J_ * sc_.bracket(J_ * x, y) -
                                  J_ * sc_.bracket(x, J_ * y) - sc_.bracket(x, y);
            worst = std::max(worst, nij.cwiseAbs().maxCoeff());
        }
    return worst;
}

Form Hermitian::to_orthonormal_coframe(const Form& a) const {
    return a.substitute_coframe(frame_.cast<cplx>());
}

Form Hermitian::from_orthonormal_coframe(const Form& a) const {
    return a.substitute_coframe(frame_inv_.cast<cplx>());
}

Form Hermitian::to_complex_coframe(const Form& a) const {
    return a.substitute_coframe(e_to_c_);
}

Form Hermitian::from_complex_coframe(const Form& a) const {
    return a.substitute_coframe(c_to_e_);
}

Form Hermitian::bidegree_project(const Form& a, int p, int q) const {
    if (p < 0 || q < 0) throw std::invalid_argument("negative bidegree");
    if (p + q != a.degree())
        throw std::invalid_argument("p+q must equal the degree of the form");
    const int n = this->n();
    Form c = to_complex_coframe(a);
    const MultiIndexTable& t = c.table();
    for (int r = 0; r < t.size(); ++r) {
        int holo = 0;
        for (int v : t.tuple(r))
            if (v < n) ++holo;
        if (holo != p) c.coeffs()[r] = 0.0;
    }
    return from_complex_coframe(c);
}

Form Hermitian::del(const Form& a) const {
    Form out(dim(), a.degree() + 1);
    for (int p = 0; p <= a.degree(); ++p) {
        int q = a.degree() - p;
        Form comp = bidegree_project(a, p, q);
        if (comp.max_abs() == 0.0) continue;
        out = out + bidegree_project(d(comp), p + 1, q);
    }
    return out;
}

Form Hermitian::delbar(const Form& a) const {
    Form out(dim(), a.degree() + 1);
    for (int p = 0; p <= a.degree(); ++p) {
        int q = a.degree() - p;
        Form comp = bidegree_project(a, p, q);
        if (comp.max_abs() == 0.0) continue;
        out = out + bidegree_project(d(comp), p, q + 1);
    }
    return out;
}

// d^c = i(del - delbar).  The sign is pinned by the requirement that
// d^c omega equals the Bismut torsion 3-form for the positive fundamental
// form omega = (i/2) sum phi^a ^ conj(phi^a); see the connection tests.
Form Hermitian::dc(const Form& a) const {
    return cplx(0.0, 1.0) * (del(a) - delbar(a));
}

Form Hermitian::hodge_star(const Form& a) const {
    const int d = dim();
    Form o = to_orthonormal_coframe(a);
    Form star(d, d - a.degree());
    const MultiIndexTable& ti = o.table();
    const MultiIndexTable& ts = star.table();
    std::vector<int> comp;
    for (int r = 0; r < ti.size(); ++r) {
        if (o.coeffs()[r] == 0.0) continue;
        int sign = complement_sign(ti.tuple(r), d, comp);
        star.coeffs()[ts.rank(comp)] += static_cast<double>(sign) * o.coeffs()[r];
    }
    return from_orthonormal_coframe(star);
}

Form Hermitian::apply_J_one_form(const Form& a) const {
    if (a.degree() != 1) throw std::invalid_argument("expected a 1-form");
    Eigen::VectorXcd coeffs = -J_.transpose().cast<cplx>() * a.coeffs();
    return Form(dim(), 1, coeffs);
}

Form Hermitian::apply_J_slots(const Form& a) const {
    return a.substitute_coframe(J_.cast<cplx>());
}

LeeData Hermitian::lee_form() const {
    const int d = dim();
    const int n = this->n();
    if (n < 2) throw std::invalid_argument("Lee form needs complex dimension >= 2");
    Form om_pow = omega_.wedge_pow(n - 1);
    Form rhs = ce_differential(sc_, om_pow);
    // solve theta ^ omega^{n-1} = d(omega^{n-1}) for the 2n coefficients
    Eigen::MatrixXd A(static_cast<int>(MultiIndexTable::binomial(d, d - 1)), d);
    for (int j = 0; j < d; ++j) {
        Form col = Form::basis(d, {j}).wedge(om_pow);
        A.col(j) = col.coeffs().real();
    }
    Eigen::VectorXd b = rhs.coeffs().real();
    Eigen::VectorXd theta_coeffs = A.colPivHouseholderQr().solve(b);
    if ((A * theta_coeffs - b).norm() > 1e-8 * std::max(1.0, b.norm()))
        throw std::runtime_error("Lee form system is singular");
    Form theta(d, 1, theta_coeffs.cast<cplx>());
    LeeData out{theta, bidegree_project(theta, 1, 0), 0.0};
    double nrm = form_norm(theta);
    out.theta_norm_sq = nrm * nrm;
    return out;
}

double Hermitian::form_norm(const Form& a) const {
    return to_orthonormal_coframe(a).coeff_norm();
}

Eigen::VectorXd Hermitian::sharp(const Form& one_form) const {
    if (one_form.degree() != 1) throw std::invalid_argument("expected a 1-form");
    Eigen::VectorXd v = one_form.coeffs().real();
    return g_.ldlt().solve(v);
}

nlohmann::json Hermitian::to_json() const {
    nlohmann::json jj, gg;
    for (int i = 0; i < dim(); ++i) {
        nlohmann::json rowJ = nlohmann::json::array(), rowG = nlohmann::json::array();
        for (int j = 0; j < dim(); ++j) {
            rowJ.push_back(J_(i, j));
            rowG.push_back(g_(i, j));
        }
        jj.push_back(rowJ);
        gg.push_back(rowG);
    }
    return {{"algebra", sc_.to_json()}, {"J", jj}, {"g", gg}};
}

Hermitian Hermitian::from_json(const nlohmann::json& j) {
    StructureConstants sc = StructureConstants::from_json(j.at("algebra"));
    const int d = sc.dim();
    Eigen::MatrixXd J(d, d), g(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            J(r, c) = j.at("J").at(r).at(c).get<double>();
            g(r, c) = j.at("g").at(r).at(c).get<double>();
        }
    return Hermitian(std::move(sc), std::move(J), std::move(g));
}

}  // namespace hermitia
