#pragma once

#include <vector>

#include "hermitia/form.hpp"
#include "hermitia/hermitian.hpp"

namespace hermitia {

// least-squares constant in rho^Ch = h dJtheta; undefined when dJtheta ~ 0
struct ChernRicciRatio {
    double h;
    double residual;  // |rho^Ch - h dJtheta|
    bool defined;
};
ChernRicciRatio chern_ricci_ratio(const Hermitian& h);

// flow velocity -(rho^B)^{1,1} of the pluriclosed flow
Form pluriclosed_step(const Hermitian& h);

struct FlowSample {
    double t;
    Form omega{2, 2};
    double skt_monitor;  // |d dc omega| of the current structure
    double min_eig;      // smallest eigenvalue of g = omega(., J.)
};

struct FlowTrajectory {
    std::vector<FlowSample> samples;
    bool positivity_failed = false;
};

// RK4 on the omega coefficients with J frozen; g is recovered from
// g(x,y) = omega(x, Jy) each stage and the run halts when positivity fails
FlowTrajectory integrate_pluriclosed(const Hermitian& h0, double t_max,
                                     double dt, double skt_tol = 1e-6);

// Vaisman surface reduction: cached data for the scalar ODE
struct VaismanFlowState {
    double f = 1.0;
    double h;
    double theta0_norm_sq;
    Form theta0{2, 1};
    Form j_theta0{2, 1};
    Form d_j_theta0{2, 2};
};
VaismanFlowState vaisman_state(const Hermitian& h);

// omega_f = (1/|theta0|^2)(theta0 ^ J theta0 - f dJ theta0)
Form reconstruct_omega(const VaismanFlowState& st, double f);

struct VaismanScalarSample {
    double t;
    double f;
};

struct VaismanScalarTrajectory {
    std::vector<VaismanScalarSample> samples;
    bool degenerated = false;
    double hitting_time;  // estimate of the time where f reaches 0
};

// solves f' = |theta0|^2 (h - 1/f) with f(0) = 1
VaismanScalarTrajectory vaisman_f_ode(double h, double theta0_norm_sq,
                                      double t_max, double dt);

// omega = (1/|theta|^2)(theta ^ J theta - dJ theta); requires theta != 0
Form vaisman_from_lee(const Hermitian& h);

struct ScalarMonitorSample {
    double t;
    double s;    // Riemannian scalar curvature of the Levi-Civita connection
    double b;    // trace of the Bismut Ricci form
    double h_t;  // Chern-Ricci ratio (0 when undefined)
    bool h_defined;
    double f;    // volume scale relative to the first sample
    double identity_residual;  // |b - (s - 2|theta|^2 + |d omega|^2 / 2)|
};

// surface-only (n = 2) per-step scalar curvature report for a trajectory
std::vector<ScalarMonitorSample> constant_scalar_monitor(
    const StructureConstants& sc, const Eigen::MatrixXd& J,
    const FlowTrajectory& traj);

}  // namespace hermitia
