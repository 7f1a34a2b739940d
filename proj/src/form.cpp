#include "hermitia/form.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hermitia {

namespace {

const MultiIndexTable& table_for(int n, int k) {
    static std::map<std::pair<int, int>, MultiIndexTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, MultiIndexTable(n, k)).first;
    return it->second;
}

int clamp_degree(int dim, int degree) {
    if (degree < 0) throw std::invalid_argument("negative form degree");
    return degree;
}

}  // namespace

Form::Form(int dim, int degree)
    : dim_(dim), degree_(clamp_degree(dim, degree)) {
    int sz = degree_ > dim_ ? 0 : static_cast<int>(MultiIndexTable::binomial(dim_, degree_));
    coeffs_ = Eigen::VectorXcd::Zero(sz);
}

Form::Form(int dim, int degree, Eigen::VectorXcd coeffs)
    : dim_(dim), degree_(clamp_degree(dim, degree)), coeffs_(std::move(coeffs)) {
    int sz = degree_ > dim_ ? 0 : static_cast<int>(MultiIndexTable::binomial(dim_, degree_));
    if (coeffs_.size() != sz) throw std::invalid_argument("coefficient count mismatch");
}

Form Form::basis(int dim, const std::vector<int>& indices, cplx value) {
    Form f(dim, static_cast<int>(indices.size()));
    f.set_coeff(indices, value);
    return f;
}

const MultiIndexTable& Form::table() const { return table_for(dim_, degree_); }

cplx Form::coeff(const std::vector<int>& indices) const {
    if (degree_ > dim_) return 0.0;
    return coeffs_[table().rank(indices)];
}

void Form::set_coeff(const std::vector<int>& indices, cplx value) {
    coeffs_[table().rank(indices)] = value;
}

bool Form::is_real(double tol) const {
    for (int i = 0; i < coeffs_.size(); ++i)
        if (std::abs(coeffs_[i].imag()) > tol) return false;
    return true;
}

Form Form::real_part() const { return Form(dim_, degree_, coeffs_.real().cast<cplx>()); }
Form Form::imag_part() const { return Form(dim_, degree_, coeffs_.imag().cast<cplx>()); }
Form Form::conjugate() const { return Form(dim_, degree_, coeffs_.conjugate()); }

Form Form::operator+(const Form& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
        throw std::invalid_argument("form shape mismatch in +");
    return Form(dim_, degree_, coeffs_ + o.coeffs_);
}

Form Form::operator-(const Form& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
        throw std::invalid_argument("form shape mismatch in -");
    return Form(dim_, degree_, coeffs_ - o.coeffs_);
}

Form Form::operator*(cplx s) const { return Form(dim_, degree_, coeffs_ * s); }

Form operator*(cplx s, const Form& f) { return f * s; }

Form Form::wedge(const Form& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in wedge");
    Form out(dim_, degree_ + o.degree_);
    if (degree_ + o.degree_ > dim_) return out;
    const MultiIndexTable& ta = table();
    const MultiIndexTable& tb = o.table();
    const MultiIndexTable& tc = out.table();
    std::vector<int> merged;
    for (int ra = 0; ra < ta.size(); ++ra) {
        if (coeffs_[ra] == 0.0) continue;
        for (int rb = 0; rb < tb.size(); ++rb) {
            if (o.coeffs_[rb] == 0.0) continue;
            int sign = merge_indices(ta.tuple(ra), tb.tuple(rb), merged);
            if (sign == 0) continue;
            out.coeffs_[tc.rank(merged)] +=
                static_cast<double>(sign) * coeffs_[ra] * o.coeffs_[rb];
        }
    }
    return out;
}

Form Form::wedge_pow(int p) const {
    if (p < 0) throw std::invalid_argument("negative wedge power");
    Form acc = Form::basis(dim_, {});
    for (int i = 0; i < p; ++i) acc = acc.wedge(*this);
    return acc;
}

Form Form::contract(const Eigen::VectorXd& x) const {
    return contract(Eigen::VectorXcd(x.cast<cplx>()));
}

Form Form::contract(const Eigen::VectorXcd& x) const {
    if (degree_ == 0) throw std::invalid_argument("cannot contract a 0-form");
    Form out(dim_, degree_ - 1);
    const MultiIndexTable& ti = table();
    const MultiIndexTable& to = out.table();
    std::vector<int> rest;
    for (int r = 0; r < ti.size(); ++r) {
        if (coeffs_[r] == 0.0) continue;
        const auto& idx = ti.tuple(r);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (x[idx[t]] == 0.0) continue;
            rest.clear();
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            double sign = (t % 2 == 0) ? 1.0 : -1.0;
            out.coeffs_[to.rank(rest)] += sign * x[idx[t]] * coeffs_[r];
        }
    }
    return out;
}

cplx Form::eval(const std::vector<Eigen::VectorXd>& args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw std::invalid_argument("argument count must match degree");
    if (degree_ == 0) return coeffs_.size() ? coeffs_[0] : cplx(0.0);
    const MultiIndexTable& ti = table();
    cplx total = 0.0;
    Eigen::MatrixXd m(degree_, degree_);
    for (int r = 0; r < ti.size(); ++r) {
        if (coeffs_[r] == 0.0) continue;
        const auto& idx = ti.tuple(r);
        for (int s = 0; s < degree_; ++s)
            for (int t = 0; t < degree_; ++t) m(s, t) = args[t][idx[s]];
        total += coeffs_[r] * m.determinant();
    }
    return total;
}

Form Form::substitute_coframe(const Eigen::MatrixXcd& L) const {
    if (L.rows() != dim_ || L.cols() != dim_)
        throw std::invalid_argument("coframe substitution matrix must be dim x dim");
    Form out(dim_, degree_);
    if (degree_ > dim_) return out;
    if (degree_ == 0) {
        out.coeffs_ = coeffs_;
        return out;
    }
    const MultiIndexTable& ti = table();
    Eigen::MatrixXcd sub(degree_, degree_);
    for (int r = 0; r < ti.size(); ++r) {
        if (coeffs_[r] == 0.0) continue;
        const auto& I = ti.tuple(r);
        for (int ro = 0; ro < ti.size(); ++ro) {
            const auto& J = ti.tuple(ro);
            for (int s = 0; s < degree_; ++s)
                for (int t = 0; t < degree_; ++t) sub(s, t) = L(I[s], J[t]);
            out.coeffs_[ro] += coeffs_[r] * sub.determinant();
        }
    }
    return out;
}

double Form::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < coeffs_.size(); ++i) m = std::max(m, std::abs(coeffs_[i]));
    return m;
}

double Form::coeff_norm() const { return coeffs_.norm(); }

nlohmann::json Form::to_json() const {
    nlohmann::json coeffs = nlohmann::json::object();
    const MultiIndexTable& ti = table();
    for (int r = 0; r < ti.size(); ++r) {
        if (coeffs_[r] == 0.0) continue;
        std::ostringstream key;
        const auto& idx = ti.tuple(r);
        for (std::size_t s = 0; s < idx.size(); ++s) {
            if (s) key << ",";
            key << idx[s] + 1;
        }
        coeffs[key.str()] = {coeffs_[r].real(), coeffs_[r].imag()};
    }
    return {{"dim", dim_}, {"degree", degree_}, {"coeffs", coeffs}};
}

Form Form::from_json(const nlohmann::json& j) {
    Form f(j.at("dim").get<int>(), j.at("degree").get<int>());
    for (const auto& [key, val] : j.at("coeffs").items()) {
        std::vector<int> idx;
        std::istringstream in(key);
        std::string tok;
        while (std::getline(in, tok, ',')) idx.push_back(std::stoi(tok) - 1);
        f.set_coeff(idx, cplx(val.at(0).get<double>(), val.at(1).get<double>()));
    }
    return f;
}

Form ce_differential(const StructureConstants& sc, const Form& a) {
    int dim = sc.dim();
    if (a.dim() != dim) throw std::invalid_argument("form/algebra dimension mismatch");
    // de^j = -sum_{l<m} c^j_lm e^l ^ e^m
    std::vector<Form> d1;
    d1.reserve(dim);
    for (int j = 0; j < dim; ++j) {
        Form dj(dim, 2);
        for (int l = 0; l < dim; ++l)
            for (int m = l + 1; m < dim; ++m)
                if (sc.c(j, l, m) != 0.0) dj.set_coeff({l, m}, -sc.c(j, l, m));
        d1.push_back(std::move(dj));
    }
    Form out(dim, a.degree() + 1);
    if (a.degree() + 1 > dim || a.degree() == 0) return out;
    const MultiIndexTable& ti = a.table();
    for (int r = 0; r < ti.size(); ++r) {
        cplx coeff = a.coeffs()[r];
        if (coeff == 0.0) continue;
        const auto& idx = ti.tuple(r);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            std::vector<int> rest;
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            double sign = (t % 2 == 0) ? 1.0 : -1.0;
            out = out + (sign * coeff) * d1[idx[t]].wedge(Form::basis(dim, rest));
        }
    }
    return out;
}

Form lefschetz(const Form& omega, const Form& a, int power) {
    if (power < 0) throw std::invalid_argument("negative Lefschetz power");
    return omega.wedge_pow(power).wedge(a);
}

}  // namespace hermitia
