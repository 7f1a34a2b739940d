#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hermitia/hermitian.hpp"
#include "hermitia/lie_algebra.hpp"

namespace hermitia {

// Almost abelian data (a, v, A, J1): the algebra has a codimension-one
// abelian ideal spanned by e_1 and n_1 = span(e_2..e_{2n-1}), with
// [e_{2n}, e_1] = a e_1 + v and [e_{2n}, x] = A x on n_1.
// The Hermitian structure is g = Id, J e_1 = e_{2n}, J|n_1 = J1.
struct AlmostAbelianSpec {
    double a = 0.0;
    Eigen::VectorXd v;   // length 2n-2
    Eigen::MatrixXd A;   // (2n-2) x (2n-2)
    Eigen::MatrixXd J1;  // complex structure on n_1, [A, J1] = 0

    int ideal_dim() const { return static_cast<int>(v.size()); }
    int dim() const { return ideal_dim() + 2; }

    // pairs (0,1), (2,3), ... of the ideal basis
    static Eigen::MatrixXd standard_J1(int m);

    double integrability_residual() const;  // |[A, J1]|
};

StructureConstants aa_brackets(const AlmostAbelianSpec& spec);
Hermitian build(const AlmostAbelianSpec& spec, double tol = 1e-9);

// Frobenius norm of the symmetric part of aA + A^2 + A^tA
double skt_criterion(const AlmostAbelianSpec& spec);

// A in so: max_y |g(v, Ay)|; otherwise falls back to the full curvature
// residuals of the built structure
double kahler_like_criterion(const AlmostAbelianSpec& spec, double tol = 1e-9);

// |v| + |A + A^t|; zero iff the metric is Kaehler (and then Bismut flat)
double kahler_criterion(const AlmostAbelianSpec& spec);

struct FlowParams {
    double c;
    int k;  // half rank of A + A^t
    Eigen::MatrixXd S;
};

// c = (k/4 - 1/2)a^2 - |v|^2/2,
// S = (k/4 - 1/2)a^2 Id - AA^t/2 + a(A + A^t)/4.
// The rank of A + A^t comes from an SVD threshold; singular values within
// a factor 10 of the threshold are a hard error unless k is overridden.
FlowParams flow_params(const AlmostAbelianSpec& spec,
                       std::optional<int> k_override = std::nullopt);

// a' = ca, v' = cv + Sv - |v|^2 v / 2, A' = cA (J1 is constant)
AlmostAbelianSpec flow_rhs(const AlmostAbelianSpec& spec,
                           std::optional<int> k_override = std::nullopt);

struct AAFlowSample {
    double t;
    double a;
    Eigen::VectorXd v;
    Eigen::MatrixXd A;
    double kahler_like_monitor;  // max_y |g(v, Ay)|
    double skt_monitor;          // skt_criterion at this state
    double so_drift;             // |A + A^t|
    double ddt_identity;         // central-difference check of
                                 // d/dt g(v,Ay) = g(v, A(3c Id + A^2/2) y)
};

struct AAFlowTrajectory {
    std::vector<AAFlowSample> samples;
    bool blew_up = false;
};

AAFlowTrajectory integrate_flow(const AlmostAbelianSpec& spec, double t_max,
                                double dt,
                                std::optional<int> k_override = std::nullopt);

struct LatticeCandidate {
    Eigen::MatrixXd phi;          // exp(t0 * ad e_{2n})
    Eigen::VectorXd charpoly;     // monic: x^d + c[1] x^{d-1} + ... + c[d]
    bool integral;                // all coefficients within tol of integers
};

// necessary condition for a lattice: the characteristic polynomial of
// exp(t0 ad e_{2n}) has integer coefficients
LatticeCandidate lattice_candidate(const AlmostAbelianSpec& spec, double t0,
                                   double tol = 1e-6);

}  // namespace hermitia
