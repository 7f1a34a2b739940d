#include "hermitia/lie_algebra.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermitia {

StructureConstants::StructureConstants(int dim, const std::vector<BracketEntry>& brackets)
    : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {
    if (dim < 2) throw std::invalid_argument("dimension must be at least 2");
    if (dim % 2 != 0)
        throw std::invalid_argument("dimension must be even (Hermitian structures only)");
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& b : brackets) {
        if (b.i < 0 || b.i >= dim || b.j < 0 || b.j >= dim || b.k < 0 || b.k >= dim)
            throw std::out_of_range("bracket index out of range");
        if (b.i == b.j)
            throw std::invalid_argument("bracket [e_i,e_i] must vanish");
        if (!seen.insert({b.i, b.j, b.k}).second || seen.count({b.j, b.i, b.k}))
            throw std::invalid_argument("duplicate bracket entry");
        c_[(b.k * dim_ + b.i) * dim_ + b.j] = b.value;
        c_[(b.k * dim_ + b.j) * dim_ + b.i] = -b.value;
    }
}

Eigen::VectorXd StructureConstants::bracket(const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& y) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
    for (int k = 0; k < dim_; ++k) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            if (x[i] == 0.0) continue;
            for (int j = 0; j < dim_; ++j) s += x[i] * y[j] * c(k, i, j);
        }
        out[k] = s;
    }
    return out;
}

Eigen::VectorXd StructureConstants::bracket_basis(int i, int j) const {
    Eigen::VectorXd out(dim_);
    for (int k = 0; k < dim_; ++k) out[k] = c(k, i, j);
    return out;
}

Eigen::MatrixXd StructureConstants::ad(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) s += x[i] * c(k, i, j);
            m(k, j) = s;
        }
    return m;
}

Eigen::MatrixXd StructureConstants::ad_basis(int i) const {
    Eigen::MatrixXd m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) m(k, j) = c(k, i, j);
    return m;
}

double StructureConstants::jacobi_residual() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Eigen::VectorXd r = bracket(bracket_basis(i, j),
                                            Eigen::VectorXd::Unit(dim_, k)) +
                                    bracket(bracket_basis(j, k),
                                            Eigen::VectorXd::Unit(dim_, i)) +
                                    bracket(bracket_basis(k, i),
                                            Eigen::VectorXd::Unit(dim_, j));
                worst = std::max(worst, r.cwiseAbs().maxCoeff());
            }
    return worst;
}

std::pair<bool, double> StructureConstants::is_unimodular(double tol) const {
    double res = 0.0;
    for (int i = 0; i < dim_; ++i) res = std::max(res, std::abs(ad_basis(i).trace()));
    return {res <= tol, res};
}

nlohmann::json StructureConstants::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (c(k, i, j) != 0.0)
                    arr.push_back({i + 1, j + 1, k + 1, c(k, i, j)});
    return {{"dim", dim_}, {"brackets", arr}};
}

StructureConstants StructureConstants::from_json(const nlohmann::json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<BracketEntry> brackets;
    for (const auto& row : j.at("brackets")) {
        brackets.push_back({row.at(0).get<int>() - 1, row.at(1).get<int>() - 1,
                            row.at(2).get<int>() - 1, row.at(3).get<double>()});
    }
    return StructureConstants(dim, brackets);
}

}  // namespace hermitia
