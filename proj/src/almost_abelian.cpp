#include "hermitia/almost_abelian.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "hermitia/connection.hpp"

namespace hermitia {

Eigen::MatrixXd AlmostAbelianSpec::standard_J1(int m) {
    if (m % 2 != 0) throw std::invalid_argument("ideal dimension must be even");
    Eigen::MatrixXd J1 = Eigen::MatrixXd::Zero(m, m);
    for (int a = 0; a < m / 2; ++a) {
        J1(2 * a + 1, 2 * a) = 1.0;
        J1(2 * a, 2 * a + 1) = -1.0;
    }
    return J1;
}

double AlmostAbelianSpec::integrability_residual() const {
    if (A.rows() == 0) return 0.0;
    return (A * J1 - J1 * A).cwiseAbs().maxCoeff();
}

StructureConstants aa_brackets(const AlmostAbelianSpec& spec) {
    const int m = spec.ideal_dim();
    const int d = spec.dim();
    std::vector<BracketEntry> b;
    if (spec.a != 0.0) b.push_back({d - 1, 0, 0, spec.a});
    for (int i = 0; i < m; ++i)
        if (spec.v[i] != 0.0) b.push_back({d - 1, 0, 1 + i, spec.v[i]});
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            if (spec.A(i, j) != 0.0) b.push_back({d - 1, 1 + j, 1 + i, spec.A(i, j)});
    return StructureConstants(d, b);
}

Hermitian build(const AlmostAbelianSpec& spec, double tol) {
    if (spec.integrability_residual() > tol)
        throw std::invalid_argument("A does not commute with J1");
    const int m = spec.ideal_dim();
    const int d = spec.dim();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(d, d);
    J(d - 1, 0) = 1.0;  // J e_1 = e_{2n}
    J(0, d - 1) = -1.0;
    J.block(1, 1, m, m) = spec.J1;
    return Hermitian(aa_brackets(spec), J, Eigen::MatrixXd::Identity(d, d));
}

double skt_criterion(const AlmostAbelianSpec& spec) {
    Eigen::MatrixXd M = spec.a * spec.A + spec.A * spec.A +
                        spec.A.transpose() * spec.A;
    return (0.5 * (M + M.transpose())).norm();
}

double kahler_like_criterion(const AlmostAbelianSpec& spec, double tol) {
    if ((spec.A + spec.A.transpose()).cwiseAbs().maxCoeff() > tol) {
        Hermitian h = build(spec, tol);
        CurvatureTensor r = curvature(h, bismut(h));
        return std::max(r.first_bianchi_residual(),
                        r.j_invariance_residual(h.J()));
    }
    // g(v, A e_j) = (A^t v)_j
    Eigen::VectorXd w = spec.A.transpose() * spec.v;
    return w.size() == 0 ? 0.0 : w.cwiseAbs().maxCoeff();
}

double kahler_criterion(const AlmostAbelianSpec& spec) {
    return spec.v.norm() + (spec.A + spec.A.transpose()).norm();
}

FlowParams flow_params(const AlmostAbelianSpec& spec,
                       std::optional<int> k_override) {
    const int m = spec.ideal_dim();
    Eigen::MatrixXd sym = spec.A + spec.A.transpose();
    int k;
    if (k_override) {
        k = *k_override;
        if (k < 0 || 2 * k > m) throw std::invalid_argument("bad k override");
    } else {
        double scale = spec.A.norm();
        double thresh = 1e-8 * (scale > 0.0 ? scale : 1.0);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sym);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i) {
            double s = svd.singularValues()[i];
            if (s > 0.1 * thresh && s < 10.0 * thresh)
                throw std::runtime_error(
                    "rank of A+A^t is numerically ambiguous; pass k explicitly");
            if (s >= 10.0 * thresh) ++rank;
        }
        if (rank % 2 != 0)
            throw std::runtime_error("A+A^t has odd rank; pass k explicitly");
        k = rank / 2;
    }
    FlowParams p;
    p.k = k;
    p.c = (k / 4.0 - 0.5) * spec.a * spec.a - 0.5 * spec.v.squaredNorm();
    p.S = (k / 4.0 - 0.5) * spec.a * spec.a *
              Eigen::MatrixXd::Identity(m, m) -
          0.5 * spec.A * spec.A.transpose() + 0.25 * spec.a * sym;
    return p;
}

AlmostAbelianSpec flow_rhs(const AlmostAbelianSpec& spec,
                           std::optional<int> k_override) {
    FlowParams p = flow_params(spec, k_override);
    AlmostAbelianSpec out = spec;
    out.a = p.c * spec.a;
    out.v = p.c * spec.v + p.S * spec.v - 0.5 * spec.v.squaredNorm() * spec.v;
    out.A = p.c * spec.A;
    return out;
}

namespace {

AlmostAbelianSpec axpy(const AlmostAbelianSpec& x, double s,
                       const AlmostAbelianSpec& y) {
    AlmostAbelianSpec out = x;
    out.a += s * y.a;
    out.v += s * y.v;
    out.A += s * y.A;
    return out;
}

double kl_monitor(const AlmostAbelianSpec& s) {
    Eigen::VectorXd w = s.A.transpose() * s.v;
    return w.size() == 0 ? 0.0 : w.cwiseAbs().maxCoeff();
}

}  // namespace

AAFlowTrajectory integrate_flow(const AlmostAbelianSpec& spec, double t_max,
                                double dt, std::optional<int> k_override) {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    AAFlowTrajectory traj;
    AlmostAbelianSpec s = spec;
    int steps = static_cast<int>(std::llround(t_max / dt));
    for (int n = 0; n <= steps; ++n) {
        AAFlowSample sample;
        sample.t = n * dt;
        sample.a = s.a;
        sample.v = s.v;
        sample.A = s.A;
        sample.kahler_like_monitor = kl_monitor(s);
        sample.skt_monitor = skt_criterion(s);
        sample.so_drift = (s.A + s.A.transpose()).norm();
        sample.ddt_identity = 0.0;
        if (!sample.v.allFinite() || !sample.A.allFinite() ||
            !std::isfinite(sample.a)) {
            traj.blew_up = true;
            traj.samples.push_back(sample);
            break;
        }
        traj.samples.push_back(sample);
        if (n == steps) break;
        AlmostAbelianSpec k1 = flow_rhs(s, k_override);
        AlmostAbelianSpec k2 = flow_rhs(axpy(s, 0.5 * dt, k1), k_override);
        AlmostAbelianSpec k3 = flow_rhs(axpy(s, 0.5 * dt, k2), k_override);
        AlmostAbelianSpec k4 = flow_rhs(axpy(s, dt, k3), k_override);
        s.a += dt / 6.0 * (k1.a + 2.0 * k2.a + 2.0 * k3.a + k4.a);
        s.v += dt / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
        s.A += dt / 6.0 * (k1.A + 2.0 * k2.A + 2.0 * k3.A + k4.A);
    }
    // central-difference check of d/dt g(v,Ay) = g(v, A(3c Id + A^2/2)y)
    const int m = spec.ideal_dim();
    for (std::size_t n = 1; n + 1 < traj.samples.size(); ++n) {
        const AAFlowSample& prev = traj.samples[n - 1];
        const AAFlowSample& cur = traj.samples[n];
        const AAFlowSample& next = traj.samples[n + 1];
        AlmostAbelianSpec cs = spec;
        cs.a = cur.a;
        cs.v = cur.v;
        cs.A = cur.A;
        double c = flow_params(cs, k_override).c;
        Eigen::VectorXd lhs =
            ((next.A.transpose() * next.v) - (prev.A.transpose() * prev.v)) /
            (2.0 * dt);
        Eigen::MatrixXd rhs_op =
            cur.A * (3.0 * c * Eigen::MatrixXd::Identity(m, m) +
                     0.5 * cur.A * cur.A);
        Eigen::VectorXd rhs = rhs_op.transpose() * cur.v;
        traj.samples[n].ddt_identity =
            m == 0 ? 0.0 : (lhs - rhs).cwiseAbs().maxCoeff();
    }
    return traj;
}

LatticeCandidate lattice_candidate(const AlmostAbelianSpec& spec, double t0,
                                   double tol) {
    const int m = spec.ideal_dim();
    const int d = spec.dim();
    Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(d, d);
    ad(0, 0) = spec.a;
    ad.block(1, 0, m, 1) = spec.v;
    ad.block(1, 1, m, m) = spec.A;
    LatticeCandidate out;
    out.phi = (t0 * ad).exp();
    // Faddeev-LeVerrier: coefficients of the monic characteristic polynomial
    Eigen::VectorXd c(d + 1);
    c[0] = 1.0;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i <= d; ++i) {
        M = out.phi * M + c[i - 1] * Eigen::MatrixXd::Identity(d, d);
        c[i] = -(out.phi * M).trace() / i;
    }
    out.charpoly = c;
    out.integral = true;
    for (int i = 0; i <= d; ++i)
        if (std::abs(c[i] - std::round(c[i])) > tol) out.integral = false;
    return out;
}

}  // namespace hermitia
