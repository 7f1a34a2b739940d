#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hermitia/form.hpp"
#include "hermitia/hermitian.hpp"

namespace hermitia {

enum class ConnectionKind { LeviCivita, Bismut, Chern };

// Christoffel array for a metric connection on left-invariant fields:
// nabla_{e_i} e_j = sum_k Gamma^k_ij e_k.
class Connection {
public:
    Connection(ConnectionKind kind, int dim, std::vector<double> gamma);

    ConnectionKind kind() const { return kind_; }
    int dim() const { return dim_; }
    double gamma(int k, int i, int j) const {
        return gamma_[(k * dim_ + i) * dim_ + j];
    }

    Eigen::VectorXd nabla_basis(int i, int j) const;  // nabla_{e_i} e_j
    Eigen::VectorXd nabla(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

private:
    ConnectionKind kind_;
    int dim_;
    std::vector<double> gamma_;  // [(k*dim + i)*dim + j]
};

// Rank-4 curvature R(e_i,e_j,e_k,e_l) = g(R(e_i,e_j)e_k, e_l).
class CurvatureTensor {
public:
    CurvatureTensor(int dim, std::vector<double> r);

    int dim() const { return dim_; }
    double operator()(int i, int j, int k, int l) const {
        return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
    }
    double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& z, const Eigen::VectorXd& w) const;

    double max_abs() const;
    double antisymmetry_residual() const;  // slots (1,2) and (3,4)
    double first_bianchi_residual() const; // max |sigma_{x,y,z} R(x,y,z,u)|
    double j_invariance_residual(const Eigen::MatrixXd& J) const;
    double symmetry13_residual() const;    // R(x,y,z,w) - R(z,y,x,w)

private:
    int dim_;
    std::vector<double> r_;
};

Connection levi_civita(const Hermitian& h);
Connection bismut(const Hermitian& h, double integrability_tol = 1e-8);
Connection chern(const Hermitian& h, double integrability_tol = 1e-8);

// Torsion T(x,y) = nabla_x y - nabla_y x - [x,y] as a (1,2)-tensor;
// component k of T(e_i,e_j) is at (k,i,j).
std::vector<double> torsion_tensor(const Hermitian& h, const Connection& c);

// Bismut torsion 3-form T^B(x,y,z) = g(T(x,y),z); asserts total skewness.
Form torsion_3form(const Hermitian& h, const Connection& c);

// Covariant derivative of an invariant k-form: result[i] = nabla_{e_i} a.
std::vector<Form> nabla_form(const Hermitian& h, const Connection& c, const Form& a);

// max over orthonormal directions u of |nabla_u a| in the g-norm
double nabla_form_norm(const Hermitian& h, const Connection& c, const Form& a);

CurvatureTensor curvature(const Hermitian& h, const Connection& c);

struct RicciData {
    Form rho;        // ricci 2-form, rho(x,y) = 1/2 sum_i R(x,y,u_i,Ju_i)
    double trace_b;  // b = sum_i rho(J u_i, u_i)
};

RicciData ricci_forms(const Hermitian& h, const Connection& c);
RicciData ricci_forms(const Hermitian& h, const CurvatureTensor& r);

// residuals of the torsion/curvature identities for connections with
// totally skew torsion,
// max over all basis 4-tuples
struct TorsionIdentityResiduals {
    double dT_identity;      // dT = sigma{(nabla T) + 2g(T,T)} - (nabla_u T)
    double bianchi_identity; // sigma R = dT + (nabla_u T) - sigma g(T,T)
};

TorsionIdentityResiduals torsion_identities(const Hermitian& h);

}  // namespace hermitia
