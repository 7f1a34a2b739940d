#include "hermitia/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hermitia/connection.hpp"
#include "hermitia/multi_index.hpp"
#include "hermitia/rational_lp.hpp"

namespace hermitia {

namespace {

Form wedge_power(const Form& omega, int p) {
    if (p == 0) {
        Form one(omega.dim(), 0);
        one.set_coeff({}, 1.0);
        return one;
    }
    return omega.wedge_pow(p);
}

}  // namespace

double skt_residual(const Hermitian& h) {
    return h.form_norm(h.d(h.dc(h.omega())));
}

GauduchonResiduals gauduchon_residuals(const Hermitian& h) {
    const int n = h.n();
    GauduchonResiduals out;
    const Form& w = h.omega();
    Form wn1 = wedge_power(w, n - 1);
    out.gauduchon = h.form_norm(h.d(h.dc(wn1)));
    for (int k = 1; k <= n - 1; ++k) {
        Form ddb = h.del(h.delbar(wedge_power(w, k)));
        out.kth.push_back(h.form_norm(ddb.wedge(wedge_power(w, n - k - 1))));
    }
    out.astheno =
        n >= 3 ? h.form_norm(h.del(h.delbar(wedge_power(w, n - 2)))) : 0.0;
    return out;
}

LckVaismanResiduals lck_vaisman_residuals(const Hermitian& h) {
    LckVaismanResiduals out{0.0, 0.0, 0.0, 0.0};
    const int n = h.n();
    if (n < 2) return out;
    LeeData lee = h.lee_form();
    out.theta_norm = std::sqrt(std::max(0.0, lee.theta_norm_sq));
    out.dtheta = h.form_norm(h.d(lee.theta));
    Form defect =
        h.d(h.omega()) - (1.0 / (n - 1)) * lee.theta.wedge(h.omega());
    out.lck = h.form_norm(defect) + out.dtheta;
    out.vaisman = out.lck + nabla_form_norm(h, levi_civita(h), lee.theta);
    return out;
}

LeePotentialResult lee_potential_check(const Hermitian& h, double tol) {
    LeeData lee = h.lee_form();
    LeePotentialResult out{0.0, 0.0, false};
    Form dom = h.del(h.omega());
    if (std::sqrt(std::max(0.0, lee.theta_norm_sq)) <= tol) {
        out.eta_zero = true;
        out.residual = h.form_norm(dom);
        return out;
    }
    Form w = lee.eta.wedge(h.del(lee.eta.conjugate()));
    Eigen::VectorXcd wc = h.to_orthonormal_coframe(w).coeffs();
    Eigen::VectorXcd oc = h.to_orthonormal_coframe(dom).coeffs();
    double wn2 = wc.squaredNorm();
    cplx c = wn2 > 1e-20 ? wc.dot(oc) / wn2 : cplx(0.0);
    out.c = c;
    out.residual = h.form_norm(dom - c * w) + h.form_norm(h.del(lee.eta));
    return out;
}

KahlerLikeResiduals kahler_like_residuals(const Hermitian& h) {
    CurvatureTensor r = curvature(h, bismut(h));
    return {r.first_bianchi_residual(), r.j_invariance_residual(h.J())};
}

double symmetry13_residual(const Hermitian& h) {
    return curvature(h, bismut(h)).symmetry13_residual();
}

std::vector<TheoremCheck> theorem_checks(const Hermitian& h, double tol) {
    Connection b = bismut(h);
    CurvatureTensor r = curvature(h, b);
    double skt = skt_residual(h);
    double bianchi = r.first_bianchi_residual();
    double j_inv = r.j_invariance_residual(h.J());
    Form tb = torsion_3form(h, b);
    double par_b = nabla_form_norm(h, b, tb);
    double par_lc = nabla_form_norm(h, levi_civita(h), tb);
    RicciData ricci = ricci_forms(h, r);
    double d_rho11 =
        h.form_norm(h.d(h.bidegree_project(ricci.rho, 1, 1)));

    auto gate = [&](std::string name, bool applicable, double hyp,
                    double concl) {
        TheoremCheck c;
        c.name = std::move(name);
        c.applicable = applicable;
        c.hypothesis = hyp;
        c.conclusion = concl;
        c.falsified = applicable && hyp <= tol && concl > 10.0 * tol;
        return c;
    };

    std::vector<TheoremCheck> out;
    out.push_back(gate("parallel_torsion_from_skt_bianchi", true,
                       std::max(skt, bianchi), par_b));
    out.push_back(gate("skt_from_parallel_torsion_bianchi", true,
                       std::max(par_b, bianchi), skt));
    out.push_back(gate("lc_parallel_torsion_from_skt_bianchi", true,
                       std::max(skt, bianchi), par_lc));
    out.push_back(gate("d_rho_11_from_j_invariance", true, j_inv, d_rho11));

    bool surface = h.n() == 2;
    double vaisman = 0.0, dtheta = 0.0, ddc_theta = 0.0;
    if (surface) {
        LckVaismanResiduals lv = lck_vaisman_residuals(h);
        vaisman = lv.vaisman;
        dtheta = lv.dtheta;
        ddc_theta = h.form_norm(h.d(h.dc(h.lee_form().theta)));
    }
    out.push_back(gate("vaisman_implies_skt_bianchi", surface, vaisman,
                       std::max(skt, bianchi)));
    out.push_back(gate("skt_bianchi_implies_vaisman", surface,
                       std::max(skt, bianchi), vaisman));
    out.push_back(gate("lck_from_j_invariance", surface, j_inv,
                       std::max(dtheta, ddc_theta)));
    return out;
}

ClassificationReport classify(const Hermitian& h, double tol) {
    ClassificationReport rep;
    rep.tol = tol;
    rep.n = h.n();

    Connection b = bismut(h);
    CurvatureTensor r = curvature(h, b);
    Form tb = torsion_3form(h, b);
    GauduchonResiduals gd = gauduchon_residuals(h);
    LckVaismanResiduals lv = lck_vaisman_residuals(h);
    LeePotentialResult lp = lee_potential_check(h, tol);
    double bianchi = r.first_bianchi_residual();
    double j_inv = r.j_invariance_residual(h.J());

    rep.residuals.emplace_back("kahler", h.form_norm(h.d(h.omega())));
    rep.residuals.emplace_back("skt", skt_residual(h));
    rep.residuals.emplace_back("gauduchon", gd.gauduchon);
    for (std::size_t k = 0; k < gd.kth.size(); ++k)
        rep.residuals.emplace_back(
            "kth_gauduchon_" + std::to_string(k + 1), gd.kth[k]);
    rep.residuals.emplace_back("astheno", gd.astheno);
    rep.residuals.emplace_back("lck", lv.lck);
    rep.residuals.emplace_back("vaisman", lv.vaisman);
    rep.residuals.emplace_back("lee_potential", lp.residual);
    rep.residuals.emplace_back("bianchi", bianchi);
    rep.residuals.emplace_back("j_invariance", j_inv);
    rep.residuals.emplace_back("kahler_like", std::max(bianchi, j_inv));
    rep.residuals.emplace_back("symmetry13", r.symmetry13_residual());
    rep.residuals.emplace_back("parallel_torsion_B",
                               nabla_form_norm(h, b, tb));
    rep.residuals.emplace_back("parallel_torsion_LC",
                               nabla_form_norm(h, levi_civita(h), tb));
    rep.residuals.emplace_back("bismut_flat", r.max_abs());
    rep.lee_potential_c = lp.c;
    rep.eta_zero = lp.eta_zero;
    rep.theorems = theorem_checks(h, tol);
    return rep;
}

double ClassificationReport::residual(const std::string& key) const {
    for (const auto& [k, v] : residuals)
        if (k == key) return v;
    throw std::out_of_range("no residual named " + key);
}

bool ClassificationReport::verdict(const std::string& key) const {
    bool ok = residual(key) <= tol;
    if (key == "lee_potential") ok = ok && !eta_zero;
    return ok;
}

bool ClassificationReport::any_falsified() const {
    return std::any_of(theorems.begin(), theorems.end(),
                       [](const TheoremCheck& t) { return t.falsified; });
}

nlohmann::json ClassificationReport::to_json() const {
    nlohmann::json res = nlohmann::json::object();
    nlohmann::json ver = nlohmann::json::object();
    for (const auto& [k, v] : residuals) {
        res[k] = v;
        ver[k] = verdict(k);
    }
    nlohmann::json thms = nlohmann::json::array();
    for (const TheoremCheck& t : theorems)
        thms.push_back({{"name", t.name},
                        {"applicable", t.applicable},
                        {"hypothesis", t.hypothesis},
                        {"conclusion", t.conclusion},
                        {"falsified", t.falsified}});
    return {{"tol", tol},
            {"n", n},
            {"residuals", res},
            {"verdicts", ver},
            {"lee_potential_c",
             {lee_potential_c.real(), lee_potential_c.imag()}},
            {"eta_zero", eta_zero},
            {"theorems", thms},
            {"falsified", any_falsified()}};
}

double nijenhuis_residual(const StructureConstants& sc,
                          const Eigen::MatrixXd& J) {
    const int d = sc.dim();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXd ei = Eigen::VectorXd::Unit(d, i);
        for (int j = i + 1; j < d; ++j) {
            Eigen::VectorXd ej = Eigen::VectorXd::Unit(d, j);
            Eigen::VectorXd nij = sc.bracket(J * ei, J * ej) -
                                  J * sc.bracket(J * ei, ej) -
                                  J * sc.bracket(ei, J * ej) -
                                  sc.bracket(ei, ej);
            worst = std::max(worst, nij.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

namespace {

rational snap(double x, const char* what) {
    auto r = to_rational(x, 1 << 24, 1e-9);
    if (!r)
        throw std::runtime_error(std::string("cannot rationalize ") + what +
                                 " entry " + std::to_string(x));
    return *r;
}

// reduce a list of rational vectors to an independent echelon basis
std::vector<std::vector<rational>> independent_basis(
    std::vector<std::vector<rational>> vecs) {
    std::vector<std::vector<rational>> basis;
    std::vector<int> pivots;
    for (auto& v : vecs) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            rational f = v[pivots[b]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= f * basis[b][j];
        }
        int p = -1;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { p = static_cast<int>(j); break; }
        if (p < 0) continue;
        rational pv = v[p];
        for (auto& x : v) x /= pv;
        basis.push_back(v);
        pivots.push_back(p);
    }
    return basis;
}

// scale to coprime integer entries
void clear_denominators(std::vector<rational>& v) {
    using boost::multiprecision::cpp_int;
    cpp_int l = 1;
    for (const auto& x : v)
        l = boost::multiprecision::lcm(l, denominator(x));
    cpp_int g = 0;
    for (auto& x : v) {
        x *= l;
        g = boost::multiprecision::gcd(g, numerator(x));
    }
    if (g > 1)
        for (auto& x : v) x /= g;
}

// basis of {x : Ex = 0} via rational row reduction
std::vector<std::vector<rational>> nullspace(
    std::vector<std::vector<rational>> E, int ncols) {
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < ncols && row < static_cast<int>(E.size()); ++col) {
        int pr = -1;
        for (int i = row; i < static_cast<int>(E.size()); ++i)
            if (E[i][col] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(E[row], E[pr]);
        rational pv = E[row][col];
        for (auto& x : E[row]) x /= pv;
        for (int i = 0; i < static_cast<int>(E.size()); ++i) {
            if (i == row || E[i][col] == 0) continue;
            rational f = E[i][col];
            for (int j = 0; j < ncols; ++j) E[i][j] -= f * E[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<rational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<rational> v(ncols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -E[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Form to_form(const std::vector<rational>& coeffs, int dim, int degree) {
    Eigen::VectorXcd c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[static_cast<int>(i)] = static_cast<double>(coeffs[i]);
    return Form(dim, degree, c);
}

}  // namespace

SKTFeasibility skt_feasibility(const StructureConstants& sc,
                               const Eigen::MatrixXd& J) {
    const int d = sc.dim();
    if (nijenhuis_residual(sc, J) > 1e-8)
        throw std::invalid_argument("complex structure is not integrable");

    Eigen::MatrixXcd Jc = J.cast<cplx>();
    MultiIndexTable t2(d, 2);
    const int n2 = t2.size();

    std::vector<std::vector<rational>> Jq(d, std::vector<rational>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) Jq[i][j] = snap(J(i, j), "J");

    // projector onto J-invariant real 2-forms: columns of (I + W)/2 where
    // (W a)(x, y) = a(Jx, Jy)
    std::vector<std::vector<rational>> cols;
    for (int r = 0; r < n2; ++r) {
        const auto& ij = t2.tuple(r);
        std::vector<rational> col(n2, 0);
        for (int q = 0; q < n2; ++q) {
            const auto& kl = t2.tuple(q);
            col[q] = Jq[ij[0]][kl[0]] * Jq[ij[1]][kl[1]] -
                     Jq[ij[0]][kl[1]] * Jq[ij[1]][kl[0]];
        }
        col[r] += 1;
        for (auto& x : col) x /= 2;
        cols.push_back(std::move(col));
    }
    std::vector<std::vector<rational>> beta = independent_basis(std::move(cols));
    const int R = static_cast<int>(beta.size());
    if (R != (d / 2) * (d / 2))
        throw std::runtime_error("unexpected dimension of (1,1)-form space");
    for (auto& b : beta) clear_denominators(b);

    // exact equality rows: coefficients of d((d beta)(J.,J.,J.)) must vanish.
    // On real (1,1)-forms that 4-form is exactly d d^c beta.
    MultiIndexTable t4(d, 4);
    std::vector<std::vector<rational>> eq(t4.size(),
                                          std::vector<rational>(R, 0));
    for (int r = 0; r < R; ++r) {
        Form bf = to_form(beta[r], d, 2);
        Form ddc = ce_differential(
            sc, ce_differential(sc, bf).substitute_coframe(Jc));
        for (int q = 0; q < t4.size(); ++q) {
            cplx v = ddc.coeffs()[q];
            if (std::abs(v.imag()) > 1e-9)
                throw std::runtime_error("dd^c of a real form came out complex");
            eq[q][r] = snap(v.real(), "dd^c");
        }
    }

    SKTFeasibility out{false, Form(d, 2), ""};

    // dd^c-closed subspace of the invariant (1,1)-forms
    std::vector<std::vector<rational>> kernel = nullspace(eq, R);
    const int K = static_cast<int>(kernel.size());
    if (K == 0) {
        out.certificate =
            "no invariant SKT metric: dd^c(omega) = 0 forces omega = 0 on "
            "the invariant (1,1)-forms";
        return out;
    }
    std::vector<Form> kappa;
    for (auto& kv : kernel) {
        clear_denominators(kv);
        Form f(d, 2);
        for (int r = 0; r < R; ++r)
            f = f + static_cast<double>(kv[r]) * to_form(beta[r], d, 2);
        kappa.push_back(f);
    }

    // metric matrices g(x, y) = omega(x, Jy) of the kernel basis
    std::vector<Eigen::MatrixXd> gk;
    for (int k = 0; k < K; ++k) {
        Eigen::MatrixXd g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                g(i, j) = kappa[k]
                              .eval({Eigen::VectorXd::Unit(d, i),
                                     J * Eigen::VectorXd::Unit(d, j)})
                              .real();
        gk.push_back(0.5 * (g + g.transpose()));
    }

    // feasible side: projected subgradient ascent on the smallest eigenvalue
    // over kernel coordinates; the witness is dd^c-closed exactly because the
    // kernel basis is
    Eigen::VectorXd x(K);
    for (int k = 0; k < K; ++k) x[k] = gk[k].trace();
    if (x.norm() < 1e-12) x.setOnes();
    x /= x.norm();
    std::vector<Eigen::VectorXd> bad_directions;
    double best = -1.0;
    Eigen::VectorXd best_x = x;
    for (int it = 0; it < 4000; ++it) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
        for (int k = 0; k < K; ++k) g += x[k] * gk[k];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
        double mn = es.eigenvalues()[0] / std::max(1.0, g.norm());
        if (mn > best) {
            best = mn;
            best_x = x;
        }
        if (it % 400 == 0) bad_directions.push_back(es.eigenvectors().col(0));
        Eigen::VectorXd u = es.eigenvectors().col(0);
        Eigen::VectorXd grad(K);
        for (int k = 0; k < K; ++k) grad[k] = u.dot(gk[k] * u);
        x += 0.05 * grad / std::max(1e-12, grad.norm());
        x /= x.norm();
    }
    if (best > 1e-6) {
        Form omega(d, 2);
        for (int k = 0; k < K; ++k) omega = omega + best_x[k] * kappa[k];
        out.feasible = true;
        out.witness = omega;
        return out;
    }

    // infeasible side: exact dual certificate.  Weights lambda >= 0 summing
    // to 1 with sum_s lambda_s omega(v_s, J v_s) = 0 on the whole kernel rule
    // out positive solutions, with no floating-point tolerance.
    std::vector<Eigen::VectorXd> samples;
    for (int i = 0; i < d; ++i) samples.push_back(Eigen::VectorXd::Unit(d, i));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            samples.push_back(Eigen::VectorXd::Unit(d, i) +
                              Eigen::VectorXd::Unit(d, j));
            samples.push_back(Eigen::VectorXd::Unit(d, i) -
                              Eigen::VectorXd::Unit(d, j));
        }
    for (const Eigen::VectorXd& u : bad_directions)
        for (double scale : {8.0, 64.0, 512.0}) {
            Eigen::VectorXd w = (scale * u).array().round();
            if (w.cwiseAbs().maxCoeff() > 0.0) samples.push_back(w);
        }

    const int S = static_cast<int>(samples.size());
    std::vector<std::vector<rational>> A(K + 1, std::vector<rational>(S, 0));
    std::vector<rational> rhs(K + 1, 0);
    for (int s = 0; s < S; ++s) {
        Eigen::VectorXd jv = J * samples[s];
        for (int k = 0; k < K; ++k)
            A[k][s] = snap(kappa[k].eval({samples[s], jv}).real(),
                           "omega(v,Jv)");
        A[K][s] = 1;
    }
    rhs[K] = 1;
    if (lp_feasible_point(A, rhs)) {
        std::ostringstream cert;
        cert << "no invariant SKT metric: an exact nonnegative combination "
             << "of " << S << " sampled directions annihilates omega(v, Jv) "
             << "on the whole " << K << "-dimensional dd^c-closed subspace "
             << "of invariant (1,1)-forms, ruling out positive solutions";
        out.certificate = cert.str();
        return out;
    }
    throw std::runtime_error(
        "SKT feasibility undecided: no positive witness and no exact dual "
        "certificate");
}

}  // namespace hermitia
