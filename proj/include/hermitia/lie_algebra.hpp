#pragma once

#include <Eigen/Dense>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hermitia {

// One sparse bracket entry: [e_i, e_j] has a component `value` on e_k.
// Indices are 0-based internally; the JSON interchange format is 1-based.
struct BracketEntry {
    int i;
    int j;
    int k;
    double value;
};

// Real Lie algebra of even dimension given by structure constants
// c^k_ij, antisymmetric in (i,j).  Immutable after construction.
class StructureConstants {
public:
    StructureConstants(int dim, const std::vector<BracketEntry>& brackets);

    int dim() const { return dim_; }
    double c(int k, int i, int j) const { return c_[(k * dim_ + i) * dim_ + j]; }

    Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
    Eigen::VectorXd bracket_basis(int i, int j) const;

    // Matrix of y -> [x, y].
    Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd ad_basis(int i) const;

    // max over basis triples of |[[e_i,e_j],e_k] + cyclic| (max-norm).
    double jacobi_residual() const;

    // true iff every ad e_i is traceless within tol; second is the residual.
    std::pair<bool, double> is_unimodular(double tol = 1e-9) const;

    nlohmann::json to_json() const;
    static StructureConstants from_json(const nlohmann::json& j);

private:
    int dim_;
    std::vector<double> c_;
};

}  // namespace hermitia
