#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "hermitia/almost_abelian.hpp"
#include "hermitia/classify.hpp"
#include "hermitia/corpus.hpp"
#include "hermitia/flow.hpp"

using namespace hermitia;
using nlohmann::json;

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Hermitian load_structure(const std::string& input) {
    if (input.rfind("corpus:", 0) == 0) return corpus::build_uri(input);
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open " + input);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + input + ": " + e.what());
    }
    return Hermitian::from_json(j);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_check(const std::string& input, double tol, bool table) {
    Hermitian h = load_structure(input);
    ClassificationReport rep = classify(h, tol);
    if (table) {
        std::cout << "property             residual      verdict\n";
        for (const auto& [key, val] : rep.residuals)
            std::printf("%-20s %-13.6g %s\n", key.c_str(), val,
                        rep.verdict(key) ? "true" : "false");
        for (const auto& tc : rep.theorems)
            if (tc.applicable)
                std::printf("%-34s %s\n", tc.name.c_str(),
                            tc.falsified ? "FALSIFIED" : "ok");
    } else {
        std::cout << rep.to_json().dump(2) << "\n";
    }
    return rep.any_falsified() ? 1 : 0;
}

int cmd_flow(const std::string& input, double t_max, double dt,
             const std::string& out) {
    Hermitian h = load_structure(input);
    FlowTrajectory tr = integrate_pluriclosed(h, t_max, dt);
    std::ostringstream csv;
    csv << "t";
    const auto& table = tr.samples.front().omega.table();
    for (int r = 0; r < table.size(); ++r) {
        csv << ",w";
        for (int idx : table.tuple(r)) csv << "_" << idx + 1;
    }
    csv << ",skt_monitor,min_eig\n";
    for (const auto& s : tr.samples) {
        csv << fmt(s.t);
        for (int r = 0; r < table.size(); ++r)
            csv << "," << fmt(s.omega.coeffs()[r].real());
        csv << "," << fmt(s.skt_monitor) << "," << fmt(s.min_eig) << "\n";
    }
    write_text(out, csv.str());
    json summary = {{"samples", tr.samples.size()},
                    {"positivity_failed", tr.positivity_failed},
                    {"t_end", tr.samples.back().t},
                    {"final_skt_monitor", tr.samples.back().skt_monitor}};
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_aa_flow(const std::string& input, const std::string& a_s,
                const std::string& v_s, const std::string& A_s, double t_max,
                double dt, const std::string& out) {
    AlmostAbelianSpec spec;
    if (!input.empty()) {
        if (input != "corpus:aa6d" && input != "aa6d")
            throw std::runtime_error("unknown almost abelian input: " + input);
        spec = corpus::almost_abelian_6d();
    } else {
        std::vector<double> v = parse_list(v_s);
        std::vector<double> A = parse_list(A_s);
        const int m = static_cast<int>(v.size());
        if (static_cast<int>(A.size()) != m * m)
            throw std::runtime_error("A must have |v|^2 entries (row-major)");
        spec.a = a_s.empty() ? 0.0 : std::stod(a_s);
        spec.v = Eigen::Map<Eigen::VectorXd>(v.data(), m);
        spec.A = Eigen::Map<
            Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                          Eigen::RowMajor>>(A.data(), m, m);
        spec.J1 = AlmostAbelianSpec::standard_J1(m);
    }
    AAFlowTrajectory tr = integrate_flow(spec, t_max, dt);
    const int m = spec.ideal_dim();
    std::ostringstream csv;
    csv << "t,a";
    for (int i = 0; i < m; ++i) csv << ",v" << i + 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) csv << ",A" << i + 1 << j + 1;
    csv << ",kahler_like_monitor,skt_monitor,so_drift,ddt_identity\n";
    double max_kl = 0.0, max_drift = 0.0;
    for (const auto& s : tr.samples) {
        csv << fmt(s.t) << "," << fmt(s.a);
        for (int i = 0; i < m; ++i) csv << "," << fmt(s.v[i]);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) csv << "," << fmt(s.A(i, j));
        csv << "," << fmt(s.kahler_like_monitor) << "," << fmt(s.skt_monitor)
            << "," << fmt(s.so_drift) << "," << fmt(s.ddt_identity) << "\n";
        max_kl = std::max(max_kl, s.kahler_like_monitor);
        max_drift = std::max(max_drift, s.so_drift);
    }
    write_text(out, csv.str());
    json summary = {{"samples", tr.samples.size()},
                    {"blew_up", tr.blew_up},
                    {"max_kahler_like_monitor", max_kl},
                    {"max_so_drift", max_drift}};
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_vaisman_flow(const std::string& input, double t_max, double dt,
                     const std::string& out) {
    Hermitian h = load_structure(input);
    VaismanFlowState st = vaisman_state(h);
    VaismanScalarTrajectory tr =
        vaisman_f_ode(st.h, st.theta0_norm_sq, t_max, dt);
    std::ostringstream csv;
    csv << "t,f\n";
    for (const auto& s : tr.samples)
        csv << fmt(s.t) << "," << fmt(s.f) << "\n";
    write_text(out, csv.str());
    json summary = {{"h", st.h},
                    {"theta0_norm_sq", st.theta0_norm_sq},
                    {"degenerated", tr.degenerated},
                    {"f_end", tr.samples.back().f}};
    if (tr.degenerated) summary["hitting_time"] = tr.hitting_time;
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_sweep(const std::string& points, const std::string& out) {
    json result = json::array();
    std::stringstream ss(points);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::vector<double> p = parse_list(item);
        if (p.size() != 2)
            throw std::runtime_error("each sweep point must be re,im");
        std::complex<double> t(p[0], p[1]);
        Hermitian h = corpus::calabi_eckmann_su2su2(t);
        SKTFeasibility fs = skt_feasibility(h.sc(), h.J());
        result.push_back({{"t_re", p[0]},
                          {"t_im", p[1]},
                          {"feasible", fs.feasible},
                          {"standard_metric_skt_residual", skt_residual(h)}});
    }
    write_text(out, result.dump(2) + "\n");
    return 0;
}

int cmd_corpus(const std::string& action, const std::string& name,
               const std::string& out) {
    if (action == "list") {
        for (const auto& e : corpus::entries()) std::cout << e.name << "\n";
        return 0;
    }
    if (action == "build") {
        Hermitian h = corpus::build_uri(name);
        write_text(out, h.to_json().dump(2) + "\n");
        return 0;
    }
    throw std::runtime_error("unknown corpus action: " + action);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant Hermitian geometry toolkit"};
    app.require_subcommand(1);

    std::string input, out, a_s, v_s, A_s, points, action, name;
    double tol = 1e-9, t_max = 1.0, dt = 1e-3;
    bool as_table = false, as_json = false;

    auto* check = app.add_subcommand("check", "classify a structure");
    check->add_option("input", input, "corpus: URI or JSON file")->required();
    check->add_option("--tol", tol, "residual tolerance");
    check->add_flag("--table", as_table, "human-readable table");
    check->add_flag("--json", as_json, "JSON report (default)");

    auto* flow = app.add_subcommand("flow", "integrate the pluriclosed flow");
    flow->add_option("input", input)->required();
    flow->add_option("--t-max", t_max);
    flow->add_option("--dt", dt);
    flow->add_option("--out", out, "CSV output path (default stdout)");

    auto* aa = app.add_subcommand("aa-flow", "reduced almost abelian flow");
    aa->add_option("input", input, "corpus:aa6d");
    aa->add_option("--a", a_s);
    aa->add_option("--v", v_s, "comma-separated ideal vector");
    aa->add_option("--A", A_s, "comma-separated row-major matrix");
    aa->add_option("--t-max", t_max);
    aa->add_option("--dt", dt);
    aa->add_option("--out", out);

    auto* vf = app.add_subcommand("vaisman-flow", "conformal factor ODE");
    vf->add_option("input", input)->required();
    vf->add_option("--t-max", t_max);
    vf->add_option("--dt", dt);
    vf->add_option("--out", out);

    auto* sweep = app.add_subcommand("sweep", "SKT feasibility over a grid");
    sweep->add_option("--points", points, "semicolon-separated re,im pairs");
    sweep->add_option("--out", out);

    auto* corpus_cmd = app.add_subcommand("corpus", "list or build examples");
    corpus_cmd->add_option("action", action, "list|build")->required();
    corpus_cmd->add_option("name", name, "entry name or corpus: URI");
    corpus_cmd->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(input, tol, as_table);
        if (*flow) return cmd_flow(input, t_max, dt, out);
        if (*aa) return cmd_aa_flow(input, a_s, v_s, A_s, t_max, dt, out);
        if (*vf) return cmd_vaisman_flow(input, t_max, dt, out);
        if (*sweep) return cmd_sweep(points, out);
        if (*corpus_cmd) return cmd_corpus(action, name, out);
    } catch (const std::exception& e) {
        json err = {{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
