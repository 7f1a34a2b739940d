#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hermitia/form.hpp"
#include "hermitia/hermitian.hpp"

namespace hermitia {

// Single implication gate: if the hypothesis residual is within tol but the
// conclusion residual exceeds 10*tol, the instance is flagged as falsified.
struct TheoremCheck {
    std::string name;
    bool applicable;
    double hypothesis;
    double conclusion;
    bool falsified;
};

struct ClassificationReport {
    double tol;
    int n;  // complex dimension
    // keys: kahler, skt, gauduchon, kth_gauduchon_<k>, astheno, lck, vaisman,
    // lee_potential, bianchi, j_invariance, kahler_like, symmetry13,
    // parallel_torsion_B, parallel_torsion_LC, bismut_flat
    std::vector<std::pair<std::string, double>> residuals;
    cplx lee_potential_c;
    bool eta_zero;  // Lee form vanishes, so no Lee potential by definition
    std::vector<TheoremCheck> theorems;

    double residual(const std::string& key) const;
    bool verdict(const std::string& key) const;
    bool any_falsified() const;
    nlohmann::json to_json() const;
};

double skt_residual(const Hermitian& h);

struct GauduchonResiduals {
    double gauduchon;          // |d d^c omega^{n-1}|
    std::vector<double> kth;   // |del delbar(omega^k) ^ omega^{n-k-1}|, k=1..n-1
    double astheno;            // |del delbar omega^{n-2}| (0 when n = 2)
};
GauduchonResiduals gauduchon_residuals(const Hermitian& h);

struct LckVaismanResiduals {
    double lck;      // |d omega - theta ^ omega / (n-1)| + |d theta|
    double vaisman;  // lck + |nabla^{LC} theta|
    double dtheta;
    double theta_norm;
};
LckVaismanResiduals lck_vaisman_residuals(const Hermitian& h);

struct LeePotentialResult {
    cplx c;           // least-squares constant in del omega = c eta ^ del etabar
    double residual;  // |del omega - c eta ^ del etabar| + |del eta|
    bool eta_zero;
};
LeePotentialResult lee_potential_check(const Hermitian& h, double tol = 1e-9);

struct KahlerLikeResiduals {
    double bianchi;
    double j_invariance;
};
KahlerLikeResiduals kahler_like_residuals(const Hermitian& h);

double symmetry13_residual(const Hermitian& h);

std::vector<TheoremCheck> theorem_checks(const Hermitian& h, double tol = 1e-9);

ClassificationReport classify(const Hermitian& h, double tol = 1e-9);

// Nijenhuis residual from structure constants and J alone.
double nijenhuis_residual(const StructureConstants& sc, const Eigen::MatrixXd& J);

struct SKTFeasibility {
    bool feasible;
    Form witness;             // positive J-invariant 2-form with dd^c = 0
    std::string certificate;  // infeasibility summary when feasible is false
};

// Decides whether the algebra admits any invariant SKT metric compatible
// with J.  The cone of positive J-invariant real 2-forms is parametrized
// exactly (rational arithmetic, coefficients snapped from doubles), the
// linear system dd^c omega = 0 is imposed, and positivity is enforced on
// sampled directions with an eigenvalue check of the witness plus cutting
// planes.  Infeasibility is exact, with no floating-point tolerance.
SKTFeasibility skt_feasibility(const StructureConstants& sc,
                               const Eigen::MatrixXd& J);

}  // namespace hermitia
