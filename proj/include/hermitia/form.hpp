#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hermitia/lie_algebra.hpp"
#include "hermitia/multi_index.hpp"

namespace hermitia {

using cplx = std::complex<double>;

// Left-invariant k-form with complex coefficients over strictly increasing
// multi-indices of the dual basis e^1..e^dim (lexicographic order).
// Real forms are the ones with vanishing imaginary parts.
class Form {
public:
    Form(int dim, int degree);
    Form(int dim, int degree, Eigen::VectorXcd coeffs);

    static Form basis(int dim, const std::vector<int>& indices, cplx value = 1.0);
    static Form zero(int dim, int degree) { return Form(dim, degree); }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const Eigen::VectorXcd& coeffs() const { return coeffs_; }
    Eigen::VectorXcd& coeffs() { return coeffs_; }
    const MultiIndexTable& table() const;

    cplx coeff(const std::vector<int>& indices) const;
    void set_coeff(const std::vector<int>& indices, cplx value);

    bool is_real(double tol = 0.0) const;
    Form real_part() const;
    Form imag_part() const;
    Form conjugate() const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(cplx s) const;
    Form operator-() const { return *this * cplx(-1.0); }

    Form wedge(const Form& o) const;
    Form wedge_pow(int p) const;  // this^p by repeated wedge

    // interior product with an invariant vector
    Form contract(const Eigen::VectorXd& x) const;
    Form contract(const Eigen::VectorXcd& x) const;

    // evaluation on invariant vectors (determinant convention:
    // (e^1^e^2)(e_1,e_2) = 1)
    cplx eval(const std::vector<Eigen::VectorXd>& args) const;

    // coefficient change under a coframe substitution e^j = sum_m L(j,m) f^m;
    // returns the coefficients of the same form over the f-coframe.
    Form substitute_coframe(const Eigen::MatrixXcd& L) const;

    double max_abs() const;
    double coeff_norm() const;  // l2 norm of raw coefficients

    nlohmann::json to_json() const;
    static Form from_json(const nlohmann::json& j);

private:
    int dim_;
    int degree_;
    Eigen::VectorXcd coeffs_;
};

Form operator*(cplx s, const Form& f);

// Chevalley-Eilenberg differential: on 1-forms da(x,y) = -a([x,y]),
// extended as an antiderivation.
Form ce_differential(const StructureConstants& sc, const Form& a);

// omega^power ^ a
Form lefschetz(const Form& omega, const Form& a, int power);

}  // namespace hermitia
