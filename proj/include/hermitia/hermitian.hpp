#pragma once

#include <Eigen/Dense>

#include <nlohmann/json_fwd.hpp>

#include "hermitia/form.hpp"
#include "hermitia/lie_algebra.hpp"

namespace hermitia {

struct LeeData {
    Form theta;          // real Lee form, d(omega^{n-1}) = theta ^ omega^{n-1}
    Form eta;            // (1,0)-part of theta
    double theta_norm_sq;
};

// Hermitian structure (g, J, omega) on a fixed Lie algebra.
//
// Conventions (fixed once, verified by the corpus):
//   omega(x,y) = g(Jx,y), so g(x,y) = omega(x,Jy) and
//   omega = (i/2) sum phi^a ^ conj(phi^a) for a unitary (1,0)-coframe.
//   (1,0)-vectors are the +i eigenvectors of J; on 1-forms
//   (J alpha)(x) = -alpha(Jx).
class Hermitian {
public:
    Hermitian(StructureConstants sc, Eigen::MatrixXd J, Eigen::MatrixXd g);

    // Reconstruct g from a fundamental 2-form via g(x,y) = omega(x,Jy).
    static Hermitian from_omega(const StructureConstants& sc,
                                const Eigen::MatrixXd& J, const Form& omega);

    const StructureConstants& sc() const { return sc_; }
    int dim() const { return sc_.dim(); }
    int n() const { return sc_.dim() / 2; }
    const Eigen::MatrixXd& J() const { return J_; }
    const Eigen::MatrixXd& g() const { return g_; }
    const Form& omega() const { return omega_; }
    const Form& volume() const { return volume_; }

    // columns are the adapted orthonormal frame u_1, .., u_2n
    // (J u_{2a-1} = u_{2a}) in the defining basis
    const Eigen::MatrixXd& frame() const { return frame_; }

    double complex_structure_residual() const;  // |J^2 + Id|
    double compatibility_residual() const;      // |g(J.,J.) - g|
    double nijenhuis_residual() const;

    // forms ---------------------------------------------------------------

    Form to_orthonormal_coframe(const Form& a) const;
    Form from_orthonormal_coframe(const Form& a) const;
    Form to_complex_coframe(const Form& a) const;    // phi/phibar coordinates
    Form from_complex_coframe(const Form& a) const;

    Form bidegree_project(const Form& a, int p, int q) const;
    Form del(const Form& a) const;
    Form delbar(const Form& a) const;
    Form dc(const Form& a) const;          // i(del - delbar)
    Form d(const Form& a) const { return ce_differential(sc_, a); }
    Form hodge_star(const Form& a) const;

    Form apply_J_one_form(const Form& a) const;   // (J alpha)(x) = -alpha(Jx)
    Form apply_J_slots(const Form& a) const;      // alpha(J., .., J.)

    LeeData lee_form() const;
    double form_norm(const Form& a) const;        // g-induced norm
    Eigen::VectorXd sharp(const Form& one_form) const;

    nlohmann::json to_json() const;
    static Hermitian from_json(const nlohmann::json& j);

private:
    void build_caches();

    StructureConstants sc_;
    Eigen::MatrixXd J_;
    Eigen::MatrixXd g_;
    Eigen::MatrixXd frame_;      // u_m = sum_j frame_(j,m) e_j
    Eigen::MatrixXd frame_inv_;
    Eigen::MatrixXcd e_to_c_;    // e^j = sum_c e_to_c_(j,c) f^c
    Eigen::MatrixXcd c_to_e_;
    Form omega_{2, 2};
    Form volume_{2, 2};
};

}  // namespace hermitia
