#include "hermitia/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace hermitia {

namespace {

std::vector<double> solve_gamma(const Hermitian& h,
                                const std::vector<double>& rhs_half) {
    // rhs_half[(l*d + i)*d + j] = g(nabla_{e_i} e_j, e_l)
    const int d = h.dim();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(h.g());
    std::vector<double> gamma(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXd rhs(d);
            for (int l = 0; l < d; ++l) rhs[l] = rhs_half[(l * d + i) * d + j];
            Eigen::VectorXd nab = ldlt.solve(rhs);
            for (int k = 0; k < d; ++k) gamma[(k * d + i) * d + j] = nab[k];
        }
    return gamma;
}

}  // namespace

Connection::Connection(ConnectionKind kind, int dim, std::vector<double> gamma)
    : kind_(kind), dim_(dim), gamma_(std::move(gamma)) {
    if (gamma_.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw std::invalid_argument("Christoffel array size mismatch");
}

Eigen::VectorXd Connection::nabla_basis(int i, int j) const {
    Eigen::VectorXd out(dim_);
    for (int k = 0; k < dim_; ++k) out[k] = gamma(k, i, j);
    return out;
}

Eigen::VectorXd Connection::nabla(const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0.0) continue;
            out += x[i] * y[j] * nabla_basis(i, j);
        }
    }
    return out;
}

Connection levi_civita(const Hermitian& h) {
    const int d = h.dim();
    const auto& sc = h.sc();
    const auto& g = h.g();
    std::vector<double> rhs(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                // Koszul for left-invariant fields
                double v = sc.bracket_basis(i, j).dot(g.col(l)) -
                           sc.bracket_basis(j, l).dot(g.col(i)) +
                           sc.bracket_basis(l, i).dot(g.col(j));
                rhs[(l * d + i) * d + j] = 0.5 * v;
            }
    return Connection(ConnectionKind::LeviCivita, d, solve_gamma(h, rhs));
}

Connection bismut(const Hermitian& h, double integrability_tol) {
    if (h.nijenhuis_residual() > integrability_tol)
        throw std::invalid_argument("Bismut connection requires an integrable J");
    const int d = h.dim();
    Connection lc = levi_civita(h);
    // g(nabla^B_x y, z) = g(nabla^{LC}_x y, z) + (d^c omega)(x, y, z) / 2
    Form t = h.dc(h.omega());
    std::vector<double> rhs(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXd lcij = h.g() * lc.nabla_basis(i, j);
            for (int l = 0; l < d; ++l) {
                double tv = t.eval({Eigen::VectorXd::Unit(d, i),
                                    Eigen::VectorXd::Unit(d, j),
                                    Eigen::VectorXd::Unit(d, l)})
                                .real();
                rhs[(l * d + i) * d + j] = lcij[l] + 0.5 * tv;
            }
        }
    return Connection(ConnectionKind::Bismut, d, solve_gamma(h, rhs));
}

Connection chern(const Hermitian& h, double integrability_tol) {
    if (h.nijenhuis_residual() > integrability_tol)
        throw std::invalid_argument("Chern connection requires an integrable J");
    const int d = h.dim();
    Connection lc = levi_civita(h);
    Form domega = h.d(h.omega());
    std::vector<double> rhs(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXd lcij = h.g() * lc.nabla_basis(i, j);
            for (int l = 0; l < d; ++l) {
                double tw = domega
                                .eval({h.J() * Eigen::VectorXd::Unit(d, i),
                                       Eigen::VectorXd::Unit(d, j),
                                       Eigen::VectorXd::Unit(d, l)})
                                .real();
                rhs[(l * d + i) * d + j] = lcij[l] - 0.5 * tw;
            }
        }
    return Connection(ConnectionKind::Chern, d, solve_gamma(h, rhs));
}

std::vector<double> torsion_tensor(const Hermitian& h, const Connection& c) {
    const int d = h.dim();
    std::vector<double> t(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXd tij =
                c.nabla_basis(i, j) - c.nabla_basis(j, i) - h.sc().bracket_basis(i, j);
            for (int k = 0; k < d; ++k) t[(k * d + i) * d + j] = tij[k];
        }
    return t;
}

Form torsion_3form(const Hermitian& h, const Connection& c) {
    if (c.kind() != ConnectionKind::Bismut)
        throw std::invalid_argument("only the Bismut torsion is a 3-form");
    const int d = h.dim();
    auto t = torsion_tensor(h, c);
    // T3(i,j,l) = g(T(e_i,e_j), e_l)
    auto t3 = [&](int i, int j, int l) {
        double v = 0.0;
        for (int k = 0; k < d; ++k) v += t[(k * d + i) * d + j] * h.g()(k, l);
        return v;
    };
    // total skewness gate (a failure signals a convention bug)
    double skew_res = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                skew_res = std::max(skew_res, std::abs(t3(i, j, l) + t3(i, l, j)));
                skew_res = std::max(skew_res, std::abs(t3(i, j, l) + t3(j, i, l)));
            }
    if (skew_res > 1e-8)
        throw std::runtime_error("Bismut torsion is not totally skew");
    Form out(d, 3);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int l = j + 1; l < d; ++l) {
                double v = t3(i, j, l);
                if (v != 0.0) out.set_coeff({i, j, l}, v);
            }
    return out;
}

std::vector<Form> nabla_form(const Hermitian& h, const Connection& c, const Form& a) {
    const int d = h.dim();
    const int k = a.degree();
    std::vector<Form> out;
    out.reserve(d);
    for (int dir = 0; dir < d; ++dir) {
        Form da(d, k);
        if (k == 0) {
            out.push_back(da);
            continue;
        }
        const MultiIndexTable& t = da.table();
        for (int r = 0; r < t.size(); ++r) {
            const auto& idx = t.tuple(r);
            cplx val = 0.0;
            std::vector<Eigen::VectorXd> args(k);
            for (int s = 0; s < k; ++s)
                args[s] = Eigen::VectorXd::Unit(d, idx[s]);
            for (int s = 0; s < k; ++s) {
                Eigen::VectorXd saved = args[s];
                args[s] = c.nabla_basis(dir, idx[s]);
                val -= a.eval(args);
                args[s] = saved;
            }
            da.coeffs()[r] = val;
        }
        out.push_back(std::move(da));
    }
    return out;
}

double nabla_form_norm(const Hermitian& h, const Connection& c, const Form& a) {
    auto derivs = nabla_form(h, c, a);
    double worst = 0.0;
    for (int m = 0; m < h.dim(); ++m) {
        Eigen::VectorXd u = h.frame().col(m);
        Form du(h.dim(), a.degree());
        for (int j = 0; j < h.dim(); ++j)
            if (u[j] != 0.0) du = du + cplx(u[j]) * derivs[j];
        worst = std::max(worst, h.form_norm(du));
    }
    return worst;
}

CurvatureTensor::CurvatureTensor(int dim, std::vector<double> r)
    : dim_(dim), r_(std::move(r)) {
    if (r_.size() != static_cast<std::size_t>(dim) * dim * dim * dim)
        throw std::invalid_argument("curvature array size mismatch");
}

double CurvatureTensor::eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const Eigen::VectorXd& z, const Eigen::VectorXd& w) const {
    double total = 0.0;
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0.0) continue;
            for (int k = 0; k < dim_; ++k) {
                if (z[k] == 0.0) continue;
                for (int l = 0; l < dim_; ++l)
                    total += x[i] * y[j] * z[k] * w[l] * (*this)(i, j, k, l);
            }
        }
    }
    return total;
}

double CurvatureTensor::max_abs() const {
    double m = 0.0;
    for (double v : r_) m = std::max(m, std::abs(v));
    return m;
}

double CurvatureTensor::antisymmetry_residual() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    m = std::max(m, std::abs((*this)(i, j, k, l) + (*this)(j, i, k, l)));
                    m = std::max(m, std::abs((*this)(i, j, k, l) + (*this)(i, j, l, k)));
                }
    return m;
}

double CurvatureTensor::first_bianchi_residual() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l)
                    m = std::max(m, std::abs((*this)(i, j, k, l) + (*this)(j, k, i, l) +
                                             (*this)(k, i, j, l)));
    return m;
}

double CurvatureTensor::j_invariance_residual(const Eigen::MatrixXd& J) const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    double rj = 0.0;
                    for (int a = 0; a < dim_; ++a) {
                        if (J(a, i) == 0.0) continue;
                        for (int b = 0; b < dim_; ++b)
                            rj += J(a, i) * J(b, j) * (*this)(a, b, k, l);
                    }
                    m = std::max(m, std::abs((*this)(i, j, k, l) - rj));
                }
    return m;
}

double CurvatureTensor::symmetry13_residual() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l)
                    m = std::max(m, std::abs((*this)(i, j, k, l) - (*this)(k, j, i, l)));
    return m;
}

CurvatureTensor curvature(const Hermitian& h, const Connection& c) {
    const int d = h.dim();
    std::vector<double> r(static_cast<std::size_t>(d) * d * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Eigen::VectorXd bij = h.sc().bracket_basis(i, j);
            for (int k = 0; k < d; ++k) {
                Eigen::VectorXd v = c.nabla(Eigen::VectorXd::Unit(d, i),
                                            c.nabla_basis(j, k)) -
                                    c.nabla(Eigen::VectorXd::Unit(d, j),
                                            c.nabla_basis(i, k)) -
                                    c.nabla(bij, Eigen::VectorXd::Unit(d, k));
                Eigen::VectorXd gv = h.g() * v;
                for (int l = 0; l < d; ++l)
                    r[((i * d + j) * d + k) * d + l] = gv[l];
            }
        }
    return CurvatureTensor(d, std::move(r));
}

RicciData ricci_forms(const Hermitian& h, const Connection& c) {
    if (c.kind() == ConnectionKind::LeviCivita)
        throw std::invalid_argument("ricci_forms expects a Hermitian connection");
    return ricci_forms(h, curvature(h, c));
}

RicciData ricci_forms(const Hermitian& h, const CurvatureTensor& r) {
    const int d = h.dim();
    Form rho(d, 2);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            double v = 0.0;
            for (int m = 0; m < d; ++m) {
                Eigen::VectorXd u = h.frame().col(m);
                v += 0.5 * r.eval(Eigen::VectorXd::Unit(d, i),
                                  Eigen::VectorXd::Unit(d, j), u, h.J() * u);
            }
            if (v != 0.0) rho.set_coeff({i, j}, v);
        }
    double b = 0.0;
    for (int m = 0; m < d; ++m) {
        Eigen::VectorXd u = h.frame().col(m);
        b += rho.eval({h.J() * u, u}).real();
    }
    return {rho, b};
}

TorsionIdentityResiduals torsion_identities(const Hermitian& h) {
    const int d = h.dim();
    Connection b = bismut(h);
    Form t3 = torsion_3form(h, b);
    Form dt = h.d(t3);
    auto nt = nabla_form(h, b, t3);
    auto tvec = torsion_tensor(h, b);
    CurvatureTensor r = curvature(h, b);

    auto tv = [&](int i, int j) {
        Eigen::VectorXd v(d);
        for (int k = 0; k < d; ++k) v[k] = tvec[(k * d + i) * d + j];
        return v;
    };
    auto unit = [&](int i) { return Eigen::VectorXd::Unit(d, i); };
    auto gTT = [&](int i, int j, int k, int l) {
        return tv(i, j).dot(h.g() * tv(k, l));
    };
    auto ntv = [&](int dir, int i, int j, int k) {
        return nt[dir].eval({unit(i), unit(j), unit(k)}).real();
    };

    TorsionIdentityResiduals out{0.0, 0.0};
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z)
                for (int u = 0; u < d; ++u) {
                    double dtv = dt.eval({unit(x), unit(y), unit(z), unit(u)}).real();
                    double cyc_nt = ntv(x, y, z, u) + ntv(y, z, x, u) + ntv(z, x, y, u);
                    double cyc_tt = gTT(x, y, z, u) + gTT(y, z, x, u) + gTT(z, x, y, u);
                    double lhs20 = dtv;
                    double rhs20 = cyc_nt + 2.0 * cyc_tt - ntv(u, x, y, z);
                    out.dT_identity = std::max(out.dT_identity, std::abs(lhs20 - rhs20));

                    double sigmaR = r(x, y, z, u) + r(y, z, x, u) + r(z, x, y, u);
                    double rhs21 = dtv + ntv(u, x, y, z) - cyc_tt;
                    out.bianchi_identity =
                        std::max(out.bianchi_identity, std::abs(sigmaR - rhs21));
                }
    return out;
}

}  // namespace hermitia
