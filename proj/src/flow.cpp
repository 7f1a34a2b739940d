#include "hermitia/flow.hpp"

#include <cmath>
#include <stdexcept>

#include "hermitia/classify.hpp"
#include "hermitia/connection.hpp"

namespace hermitia {

namespace {

Eigen::VectorXd coeff_vector(const Hermitian& h, const Form& a) {
    return h.to_orthonormal_coframe(a).coeffs().real();
}

// g(x,y) = omega(x, Jy) as a matrix in the defining basis
Eigen::MatrixXd metric_from_omega(const Form& omega, const Eigen::MatrixXd& J) {
    const int d = static_cast<int>(J.rows());
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            double c = std::real(omega.coeff({i, j}));
            W(i, j) = c;
            W(j, i) = -c;
        }
    Eigen::MatrixXd G = W * J;
    return 0.5 * (G + G.transpose().eval());
}

}  // namespace

ChernRicciRatio chern_ricci_ratio(const Hermitian& h) {
    LeeData lee = h.lee_form();
    Form djt = h.d(h.apply_J_one_form(lee.theta));
    if (h.form_norm(djt) < 1e-10) return {0.0, 0.0, false};
    Form rho = ricci_forms(h, chern(h)).rho;
    Eigen::VectorXd w = coeff_vector(h, djt);
    Eigen::VectorXd r = coeff_vector(h, rho);
    double ratio = r.dot(w) / w.squaredNorm();
    double residual = h.form_norm(rho - ratio * djt);
    return {ratio, residual, true};
}

Form pluriclosed_step(const Hermitian& h) {
    Form rho = ricci_forms(h, bismut(h)).rho;
    // (1,1)-projection of a real 2-form is its J-invariant average
    Form proj = 0.5 * (rho + h.apply_J_slots(rho));
    return -proj;
}

FlowTrajectory integrate_pluriclosed(const Hermitian& h0, double t_max,
                                     double dt, double skt_tol) {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (skt_residual(h0) > skt_tol)
        throw std::invalid_argument("initial structure is not pluriclosed");

    const StructureConstants& sc = h0.sc();
    const Eigen::MatrixXd& J = h0.J();
    FlowTrajectory traj;
    Form omega = h0.omega();
    const int steps = static_cast<int>(std::llround(t_max / dt));

    auto velocity = [&](const Form& w) {
        return pluriclosed_step(Hermitian(sc, J, metric_from_omega(w, J)));
    };

    for (int n = 0; n <= steps; ++n) {
        FlowSample sample;
        sample.t = n * dt;
        sample.omega = omega;
        Eigen::MatrixXd g = metric_from_omega(omega, J);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
        sample.min_eig = es.eigenvalues().minCoeff();
        if (!std::isfinite(sample.min_eig) || sample.min_eig <= 1e-9) {
            sample.skt_monitor = std::nan("");
            traj.positivity_failed = true;
            traj.samples.push_back(sample);
            break;
        }
        sample.skt_monitor = skt_residual(Hermitian(sc, J, g));
        traj.samples.push_back(sample);
        if (n == steps) break;
        try {
            Form k1 = velocity(omega);
            Form k2 = velocity(omega + (0.5 * dt) * k1);
            Form k3 = velocity(omega + (0.5 * dt) * k2);
            Form k4 = velocity(omega + dt * k3);
            omega = omega + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        } catch (const std::invalid_argument&) {
            // an intermediate stage left the positive cone
            traj.positivity_failed = true;
            break;
        }
    }
    return traj;
}

VaismanFlowState vaisman_state(const Hermitian& h) {
    LeeData lee = h.lee_form();
    if (lee.theta_norm_sq < 1e-18)
        throw std::invalid_argument("Lee form vanishes");
    VaismanFlowState st;
    st.f = 1.0;
    st.theta0_norm_sq = lee.theta_norm_sq;
    st.theta0 = lee.theta;
    st.j_theta0 = h.apply_J_one_form(lee.theta);
    st.d_j_theta0 = h.d(st.j_theta0);
    ChernRicciRatio cr = chern_ricci_ratio(h);
    st.h = cr.defined ? cr.h : 0.0;
    return st;
}

Form reconstruct_omega(const VaismanFlowState& st, double f) {
    return (1.0 / st.theta0_norm_sq) *
           (st.theta0.wedge(st.j_theta0) - f * st.d_j_theta0);
}

VaismanScalarTrajectory vaisman_f_ode(double h, double theta0_norm_sq,
                                      double t_max, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (theta0_norm_sq <= 0.0)
        throw std::invalid_argument("|theta0|^2 must be positive");
    VaismanScalarTrajectory traj;
    traj.hitting_time = std::nan("");
    double f = 1.0;
    const int steps = static_cast<int>(std::llround(t_max / dt));
    auto rhs = [&](double x) { return theta0_norm_sq * (h - 1.0 / x); };
    for (int n = 0; n <= steps; ++n) {
        traj.samples.push_back({n * dt, f});
        if (n == steps) break;
        double k1 = rhs(f);
        double f2 = f + 0.5 * dt * k1;
        double f3, f4, next = std::nan("");
        if (f2 > 0.0) {
            double k2 = rhs(f2);
            f3 = f + 0.5 * dt * k2;
            if (f3 > 0.0) {
                double k3 = rhs(f3);
                f4 = f + dt * k3;
                if (f4 > 0.0) {
                    double k4 = rhs(f4);
                    next = f + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                }
            }
        }
        if (!std::isfinite(next) || next <= 0.0) {
            traj.degenerated = true;
            // near f = 0 the ODE is f f' = -|theta0|^2, so the remaining
            // time to degeneration is f^2 / (2 |theta0|^2)
            traj.hitting_time = n * dt + f * f / (2.0 * theta0_norm_sq);
            break;
        }
        f = next;
    }
    return traj;
}

Form vaisman_from_lee(const Hermitian& h) {
    LeeData lee = h.lee_form();
    if (lee.theta_norm_sq < 1e-18)
        throw std::invalid_argument("Lee form vanishes");
    Form jt = h.apply_J_one_form(lee.theta);
    return (1.0 / lee.theta_norm_sq) * (lee.theta.wedge(jt) - h.d(jt));
}

std::vector<ScalarMonitorSample> constant_scalar_monitor(
    const StructureConstants& sc, const Eigen::MatrixXd& J,
    const FlowTrajectory& traj) {
    if (sc.dim() != 4)
        throw std::invalid_argument("scalar monitor is surface-only");
    std::vector<ScalarMonitorSample> out;
    double vol0 = 0.0;
    for (const FlowSample& fs : traj.samples) {
        Eigen::MatrixXd g = metric_from_omega(fs.omega, J);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
        if (!std::isfinite(es.eigenvalues().minCoeff()) ||
            es.eigenvalues().minCoeff() <= 1e-9)
            break;
        Hermitian h(sc, J, g);
        ScalarMonitorSample m;
        m.t = fs.t;

        CurvatureTensor r = curvature(h, levi_civita(h));
        const Eigen::MatrixXd& u = h.frame();
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                s += r.eval(u.col(a), u.col(b), u.col(b), u.col(a));
        m.s = s;

        m.b = ricci_forms(h, bismut(h)).trace_b;
        ChernRicciRatio cr = chern_ricci_ratio(h);
        m.h_defined = cr.defined;
        m.h_t = cr.defined ? cr.h : 0.0;

        // on the conformal ansatz the volume scales linearly in f
        double vol = h.volume().coeff({0, 1, 2, 3}).real();
        if (out.empty()) vol0 = vol;
        m.f = std::abs(vol / vol0);

        LeeData lee = h.lee_form();
        double dwn = h.form_norm(h.d(h.omega()));
        m.identity_residual =
            std::abs(m.b - (m.s - 2.0 * lee.theta_norm_sq + 0.5 * dwn * dwn));
        out.push_back(m);
    }
    return out;
}

}  // namespace hermitia
