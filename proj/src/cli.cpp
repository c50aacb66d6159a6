#include "spbvp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spbvp/convergence.hpp"
#include "spbvp/errors.hpp"
#include "spbvp/expr.hpp"
#include "spbvp/mesh.hpp"
#include "spbvp/problem.hpp"
#include "spbvp/reduced.hpp"

namespace spbvp::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct ProblemOptions {
    std::string name = "ex1";
    double eps1 = kDefaultEps1;
    double eps2 = kDefaultEps2;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::string a1, a2, b11, b12 = "0", b21 = "0", b22, f1 = "0", f2 = "0";
    double l1 = 0.0, l2 = 0.0, r1 = 0.0, r2 = 0.0;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& p, bool with_eps = true) {
    cmd->add_option("--problem", p.name, "ex1, ex2, ex3, ms1 or custom")
        ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ms1", "custom"}));
    if (with_eps) {
        cmd->add_option("--eps1", p.eps1, "perturbation parameter of u1");
        cmd->add_option("--eps2", p.eps2, "perturbation parameter of u2");
    }
    cmd->add_option("--alpha", p.alpha, "lower bound of a1, a2 (required for custom)");
    cmd->add_option("--beta", p.beta, "lower bound of b_ii - b_ij (custom only)");
    cmd->add_option("--a1", p.a1);
    cmd->add_option("--a2", p.a2);
    cmd->add_option("--b11", p.b11);
    cmd->add_option("--b12", p.b12);
    cmd->add_option("--b21", p.b21);
    cmd->add_option("--b22", p.b22);
    cmd->add_option("--f1", p.f1);
    cmd->add_option("--f2", p.f2);
    cmd->add_option("--l1", p.l1);
    cmd->add_option("--l2", p.l2);
    cmd->add_option("--r1", p.r1);
    cmd->add_option("--r2", p.r2);
}

ScalarField expression_field(const std::string& label, const std::string& text) {
    if (text.empty()) throw ArgumentError("custom problem needs --" + label);
    try {
        const Expr e = parse_expression(text);
        return ScalarField(label, [e](double x) { return e.eval(x); });
    } catch (const ParseError& err) {
        throw ParseError(err.offset(), "--" + label + " '" + text + "': " + err.what());
    }
}

/// Builds the problem family selected on the command line.
ProblemFamily make_family(const ProblemOptions& p) {
    if (p.name != "custom") {
        const std::string name = p.name;
        const std::optional<double> alpha = p.alpha;
        return [name, alpha](double e1, double e2) {
            TwoParamBVP bvp = builtin_problem(name, e1, e2);
            if (alpha) bvp.alpha = *alpha;
            return bvp;
        };
    }
    if (!p.alpha) throw ArgumentError("custom problem needs --alpha");
    TwoParamBVP base;
    base.a1 = expression_field("a1", p.a1);
    base.a2 = expression_field("a2", p.a2);
    base.b11 = expression_field("b11", p.b11);
    base.b12 = expression_field("b12", p.b12);
    base.b21 = expression_field("b21", p.b21);
    base.b22 = expression_field("b22", p.b22);
    base.f1 = expression_field("f1", p.f1);
    base.f2 = expression_field("f2", p.f2);
    base.left_bc = {p.l1, p.l2};
    base.right_bc = {p.r1, p.r2};
    base.alpha = *p.alpha;
    if (!(base.alpha > 0.0)) throw ArgumentError("--alpha must be positive");
    if (p.beta) {
        base.beta = *p.beta;
    } else {
        base.eps1 = base.eps2 = 1.0;
        base.beta = validate_problem(base).beta_estimate;
    }
    return [base](double e1, double e2) {
        if (!(e1 > 0.0) || !(e2 > 0.0)) throw ArgumentError("perturbation parameters must be positive");
        TwoParamBVP bvp = base;
        bvp.eps1 = e1;
        bvp.eps2 = e2;
        return bvp;
    };
}

class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_valid(const TwoParamBVP& bvp, std::ostream& err) {
    const ValidationReport report = validate_problem(bvp);
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    if (!report.ok) throw ValidationFailure("problem failed validation");
}

// Writes to --out when given, otherwise to the command's stdout stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw ArgumentError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError("invalid integer '" + item + "' in list");
        }
        if (used != item.size()) throw ArgumentError("invalid integer '" + item + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw ArgumentError("empty N list");
    return out;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ArgumentError("invalid number '" + text + "'");
    }
    if (used != text.size()) throw ArgumentError("invalid number '" + text + "'");
    return v;
}

// "paper" or comma-separated eps1:eps2 pairs.
std::vector<EpsPair> parse_eps_grid(const std::string& text) {
    if (text == "paper") return paper_eps_grid();
    std::vector<EpsPair> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ArgumentError("eps grid entries must look like eps1:eps2, got '" + item + "'");
        }
        grid.push_back({parse_real(item.substr(0, colon)), parse_real(item.substr(colon + 1))});
    }
    if (grid.empty()) throw ArgumentError("empty eps grid");
    return grid;
}

void write_solution(std::ostream& os, const std::vector<double>& x, const std::vector<Vec2>& u) {
    os << "x,u1,u2\n";
    for (std::size_t j = 0; j < x.size(); ++j) {
        os << num(x[j]) << ',' << num(u[j][0]) << ',' << num(u[j][1]) << '\n';
    }
}

void write_row(std::ostream& os, const char* label, const std::vector<double>& values) {
    os << label;
    for (double v : values) os << ',' << num(v);
    os << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Upwind Shishkin-mesh solver for coupled singularly perturbed convection-diffusion systems",
                 "spbvp"};
    app.require_subcommand(1);

    ProblemOptions prob;
    std::string out_path;
    int n = 0;
    std::string mesh_kind = "shishkin";

    auto* solve = app.add_subcommand("solve", "solve on a Shishkin or uniform mesh, write x,u1,u2");
    add_problem_options(solve, prob);
    solve->add_option("--N", n, "number of mesh elements")->required();
    solve->add_option("--mesh", mesh_kind)->check(CLI::IsMember({"shishkin", "uniform"}));
    solve->add_option("--out", out_path);

    double mesh_eps1 = kDefaultEps1, mesh_eps2 = kDefaultEps2, mesh_alpha = 1.0;
    auto* mesh = app.add_subcommand("mesh", "write mesh points as j,x,region");
    mesh->add_option("--eps1", mesh_eps1);
    mesh->add_option("--eps2", mesh_eps2);
    mesh->add_option("--alpha", mesh_alpha);
    mesh->add_option("--N", n)->required();
    mesh->add_option("--mesh", mesh_kind)->check(CLI::IsMember({"shishkin", "uniform"}));
    mesh->add_option("--out", out_path);

    int m = 1024;
    auto* reduced = app.add_subcommand("reduced", "solve the reduced problem, write x,u1,u2");
    add_problem_options(reduced, prob);
    reduced->add_option("--M", m, "number of integration steps");
    reduced->add_option("--out", out_path);

    std::string eps_grid = "paper";
    std::string n_list;
    std::string variant = "recomputed";
    unsigned threads = 0;
    auto* table = app.add_subcommand("table", "two-mesh parameter-uniform convergence table");
    add_problem_options(table, prob, false);
    table->add_option("--eps-grid", eps_grid, "'paper' or eps1:eps2,eps1:eps2,...");
    table->add_option("--N-list", n_list, "comma-separated, doubling, e.g. 128,256,512")->required();
    table->add_option("--two-mesh", variant, "fine-mesh construction")
        ->check(CLI::IsMember({"recomputed", "frozen"}));
    table->add_option("--threads", threads, "worker threads (0 = all cores)");
    table->add_option("--out", out_path);

    int samples = 1001;
    auto* validate = app.add_subcommand("validate", "check the coefficient assumptions");
    add_problem_options(validate, prob);
    validate->add_option("--samples", samples);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const MeshKind kind = mesh_kind == "uniform" ? MeshKind::uniform : MeshKind::shishkin;

        if (mesh->parsed()) {
            const PiecewiseUniformMesh msh = kind == MeshKind::shishkin
                                                 ? build_shishkin_mesh(mesh_eps1, mesh_eps2, mesh_alpha, n)
                                                 : build_uniform_mesh(n);
            Sink sink(out_path, out);
            *sink << "j,x,region\n";
            for (int j = 0; j <= msh.n_elements; ++j) {
                *sink << j << ',' << num(msh.points[static_cast<std::size_t>(j)]) << ',' << msh.region(j)
                      << '\n';
            }
            return kSuccess;
        }

        const ProblemFamily family = make_family(prob);

        if (validate->parsed()) {
            const TwoParamBVP bvp = family(prob.eps1, prob.eps2);
            const ValidationReport r = validate_problem(bvp, samples);
            out << "problem=" << prob.name << '\n'
                << "eps1=" << num(bvp.eps1) << '\n'
                << "eps2=" << num(bvp.eps2) << '\n'
                << "alpha=" << num(bvp.alpha) << '\n'
                << "beta=" << num(bvp.beta) << '\n'
                << "alpha_estimate=" << num(r.alpha_estimate) << '\n'
                << "beta_estimate=" << num(r.beta_estimate) << '\n'
                << "offdiag_min=" << num(r.offdiag_min) << '\n'
                << "samples=" << r.sample_count << '\n';
            for (const auto& w : r.warnings) out << "warning: " << w << '\n';
            out << "ok=" << (r.ok ? "true" : "false") << '\n';
            return r.ok ? kSuccess : kValidationFailure;
        }

        if (solve->parsed()) {
            const TwoParamBVP bvp = family(prob.eps1, prob.eps2);
            require_valid(bvp, err);
            const DiscreteSolution sol = solve_bvp(bvp, n, kind);
            Sink sink(out_path, out);
            write_solution(*sink, sol.mesh.points, sol.values);
            return kSuccess;
        }

        if (reduced->parsed()) {
            const TwoParamBVP bvp = family(prob.eps1, prob.eps2);
            require_valid(bvp, err);
            const ReducedSolution rs = solve_reduced(bvp, m);
            Sink sink(out_path, out);
            write_solution(*sink, rs.grid, rs.values);
            return kSuccess;
        }

        if (table->parsed()) {
            const std::vector<EpsPair> grid = parse_eps_grid(eps_grid);
            for (const auto& e : grid) require_valid(family(e.eps1, e.eps2), err);
            const TwoMeshVariant v = variant == "frozen" ? TwoMeshVariant::frozen_transition
                                                         : TwoMeshVariant::recomputed_transition;
            const ConvergenceReport rep = uniform_table(family, grid, parse_int_list(n_list), v, threads);
            Sink sink(out_path, out);
            std::ostream& os = *sink;
            os << "eps1,eps2,N,D_eps_N\n";
            for (std::size_t e = 0; e < rep.eps_grid.size(); ++e) {
                for (std::size_t k = 0; k < rep.n_list.size(); ++k) {
                    os << num(rep.eps_grid[e].eps1) << ',' << num(rep.eps_grid[e].eps2) << ','
                       << rep.n_list[k] << ',' << num(rep.d_eps_n[e][k]) << '\n';
                }
            }
            write_row(os, "D_N", rep.d_n);
            write_row(os, "p_N", rep.p_n);
            write_row(os, "C_pN", rep.c_p_n);
            os << "# p_star=" << num(rep.p_star) << '\n';
            os << "# C_p_star=" << num(rep.c_p_star) << '\n';
            return kSuccess;
        }
    } catch (const ValidationFailure& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        // ArgumentError, IndexError, CatalogError, ParseError
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace spbvp::cli
