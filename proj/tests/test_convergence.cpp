#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "spbvp/convergence.hpp"
#include "spbvp/errors.hpp"

namespace spbvp {
namespace {

ProblemFamily builtin_family(const char* name) {
    return [name](double e1, double e2) { return builtin_problem(name, e1, e2); };
}

double ms1_error(const DiscreteSolution& sol) {
    double err = 0.0;
    for (std::size_t j = 0; j < sol.values.size(); ++j) {
        const Vec2 exact = ms1_exact(sol.mesh.points[j]);
        err = std::max({err, std::abs(sol.values[j][0] - exact[0]), std::abs(sol.values[j][1] - exact[1])});
    }
    return err;
}

TEST(SolveBvp, ManufacturedSolutionConverges) {
    const TwoParamBVP p = builtin_problem("ms1", 1.0, 1.0);
    const double e64 = ms1_error(solve_bvp(p, 64));
    const double e128 = ms1_error(solve_bvp(p, 128));
    EXPECT_LE(e64, 0.02);
    EXPECT_GT(e64 / e128, 1.7);
    EXPECT_LT(e64 / e128, 2.3);
}

TEST(SolveBvp, BoundaryValuesAttached) {
    for (const auto& name : builtin_problem_names()) {
        const TwoParamBVP p = builtin_problem(name);
        for (MeshKind kind : {MeshKind::shishkin, MeshKind::uniform}) {
            const DiscreteSolution sol = solve_bvp(p, 32, kind);
            EXPECT_EQ(sol.values.front(), p.left_bc);
            EXPECT_EQ(sol.values.back(), p.right_bc);
            EXPECT_EQ(sol.values.size(), 33u);
        }
    }
    EXPECT_THROW(solve_bvp(builtin_problem("ex1"), 6), ArgumentError);
}

TEST(SolveBvp, Example1LayerInSecondComponent) {
    const TwoParamBVP p = builtin_problem("ex1");
    const DiscreteSolution sol = solve_bvp(p, 1024);
    const ReducedSolution r = solve_reduced(p, 1024);
    // u2 leaves 3 and settles onto the outer solution within a few eps2
    const double edge = 10.0 * p.eps2;
    const auto it = std::lower_bound(sol.mesh.points.begin(), sol.mesh.points.end(), edge);
    const auto j = static_cast<std::size_t>(it - sol.mesh.points.begin());
    EXPECT_LT(sol.values[j][1], 3.0);
    EXPECT_NEAR(sol.values[j][1], eval_reduced(r, sol.mesh.points[j])[1], 0.05);
    EXPECT_LT(layer_width(sol, r, 2, 0.05), edge);
}

TEST(TwoMesh, PaperCells) {
    const double d1 = two_mesh_difference(builtin_problem("ex1", std::pow(5.0, -4), std::pow(2.0, -7)), 128);
    EXPECT_NEAR(d1, 4.725e-2, 0.1 * 4.725e-2);
    const double d2 = two_mesh_difference(builtin_problem("ex1", std::pow(5.0, -8), std::pow(2.0, -11)), 512);
    EXPECT_NEAR(d2, 3.365e-2, 0.1 * 3.365e-2);
}

TEST(TwoMesh, LinearExactSolutionGivesZero) {
    TwoParamBVP p = builtin_problem("ex2", 1e-4, 1e-2);
    // ex2's reduced solution (2x, x+1) is linear; with f adjusted it also solves the full problem
    p.left_bc = {0.0, 1.0};
    for (auto variant : {TwoMeshVariant::recomputed_transition, TwoMeshVariant::frozen_transition}) {
        EXPECT_LE(two_mesh_difference(p, 64, variant), 1e-12);
    }
}

TEST(TwoMesh, FrozenVariantNestsMeshes) {
    const TwoParamBVP p = builtin_problem("ex1");
    const double frozen = two_mesh_difference(p, 64, TwoMeshVariant::frozen_transition);
    const double recomputed = two_mesh_difference(p, 64, TwoMeshVariant::recomputed_transition);
    EXPECT_GT(frozen, 0.0);
    EXPECT_GT(recomputed, 0.0);
}

TEST(TwoMesh, FittedMeshBeatsUniformMesh) {
    const TwoParamBVP p = builtin_problem("ex1", std::pow(5.0, -8), std::pow(2.0, -11));
    const double shishkin = two_mesh_difference(p, 512);
    const double uniform = two_mesh_difference(p, 512, TwoMeshVariant::recomputed_transition, MeshKind::uniform);
    EXPECT_GE(uniform, 2.0 * shishkin);
}

TEST(PaperEpsGrid, FifteenPairs) {
    const auto g = paper_eps_grid();
    ASSERT_EQ(g.size(), 15u);
    EXPECT_EQ(g.front().eps1, std::pow(5.0, -4));
    EXPECT_EQ(g.front().eps2, std::pow(2.0, -7));
    EXPECT_EQ(g.back().eps1, std::pow(5.0, -18));
    EXPECT_EQ(g.back().eps2, std::pow(2.0, -21));
}

// The error-constant formula applied to the printed D^N row must give the printed C row.
TEST(UniformTable, ErrorConstantFormulaMatchesPrintedRow) {
    const double d[] = {7.515e-2, 5.376e-2, 3.478e-2, 2.044e-2, 1.181e-2};
    const double printed_c[] = {2.755, 2.755, 2.491, 2.047, 1.654};
    const double p_star = std::log2(d[0] / d[1]);
    EXPECT_NEAR(p_star, 0.4833, 1e-4);  // printed D^N are rounded
    for (int k = 0; k < 5; ++k) {
        const double c = d[k] * std::pow(128.0 * (1 << k), p_star) / (1.0 - std::pow(2.0, -p_star));
        EXPECT_NEAR(c, printed_c[k], 0.001 * printed_c[k]) << k;
    }
}

TEST(UniformTable, ReportInvariants) {
    const std::vector<EpsPair> grid{{1e-3, 1e-2}, {1e-5, 1e-3}, {1e-7, 1e-4}};
    const std::vector<int> ns{32, 64, 128};
    const auto rep = uniform_table(builtin_family("ex1"), grid, ns, TwoMeshVariant::recomputed_transition, 2);
    ASSERT_EQ(rep.d_eps_n.size(), 3u);
    ASSERT_EQ(rep.p_n.size(), 2u);
    for (std::size_t k = 0; k < ns.size(); ++k) {
        double mx = 0.0;
        for (const auto& row : rep.d_eps_n) mx = std::max(mx, row[k]);
        EXPECT_EQ(rep.d_n[k], mx);
    }
    for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
        EXPECT_EQ(rep.p_n[k], std::log2(rep.d_n[k] / rep.d_n[k + 1]));
    }
    EXPECT_EQ(rep.p_star, *std::min_element(rep.p_n.begin(), rep.p_n.end()));
    EXPECT_EQ(rep.c_p_star, *std::max_element(rep.c_p_n.begin(), rep.c_p_n.end()));
    for (std::size_t k = 0; k < ns.size(); ++k) {
        EXPECT_DOUBLE_EQ(rep.c_p_n[k],
                         rep.d_n[k] * std::pow(ns[k], rep.p_star) / (1.0 - std::pow(2.0, -rep.p_star)));
    }
    EXPECT_EQ(rep.d_eps_n[1][2], two_mesh_difference(builtin_problem("ex1", 1e-5, 1e-3), 128));
}

TEST(UniformTable, IndependentOfThreadCount) {
    const std::vector<EpsPair> grid{{1e-3, 1e-2}, {1e-6, 1e-4}};
    const std::vector<int> ns{16, 32, 64, 128};
    const auto one = uniform_table(builtin_family("ex3"), grid, ns, TwoMeshVariant::recomputed_transition, 1);
    const auto many = uniform_table(builtin_family("ex3"), grid, ns, TwoMeshVariant::recomputed_transition, 8);
    EXPECT_EQ(one.d_eps_n, many.d_eps_n);
    EXPECT_EQ(one.c_p_star, many.c_p_star);
}

TEST(UniformTable, RejectsBadNList) {
    const std::vector<EpsPair> grid{{1e-3, 1e-2}};
    EXPECT_THROW(uniform_table(builtin_family("ex1"), grid, {16, 48}), ArgumentError);
    EXPECT_THROW(uniform_table(builtin_family("ex1"), grid, {6, 12}), ArgumentError);
    EXPECT_THROW(uniform_table(builtin_family("ex1"), grid, {}), ArgumentError);
}

TEST(UniformTable, PropagatesCellFailures) {
    const std::vector<EpsPair> grid{{1e-3, 1e-2}, {0.1, 0.01}};
    EXPECT_THROW(uniform_table(builtin_family("ex1"), grid, {16, 32}), ArgumentError);
}

TEST(LayerWidth, Example3OnlyFirstComponent) {
    const ReducedSolution r = solve_reduced(builtin_problem("ex3"), 1024);
    double widths[3];
    const double eps1s[] = {std::pow(5.0, -4), std::pow(5.0, -5), std::pow(5.0, -6)};
    for (int k = 0; k < 3; ++k) {
        const DiscreteSolution sol = solve_bvp(builtin_problem("ex3", eps1s[k], std::pow(2.0, -4)), 1024);
        widths[k] = layer_width(sol, r, 1, 0.05);
        EXPECT_LE(layer_width(sol, r, 2, 0.05), sol.mesh.points[1]);
    }
    EXPECT_GT(widths[0] / widths[1], 3.0);
    EXPECT_LT(widths[0] / widths[1], 7.0);
    EXPECT_GT(widths[1] / widths[2], 3.0);
    EXPECT_LT(widths[1] / widths[2], 7.0);
}

TEST(LayerWidth, SolutionBuiltFromReducedHasNoLayer) {
    const TwoParamBVP p = builtin_problem("ex2");
    const ReducedSolution r = solve_reduced(p, 256);
    DiscreteSolution sol{build_shishkin_mesh(p.eps1, p.eps2, p.alpha, 64), {}};
    for (double x : sol.mesh.points) sol.values.push_back(eval_reduced(r, x));
    EXPECT_EQ(layer_width(sol, r, 1, 1e-12), 0.0);
    EXPECT_EQ(layer_width(sol, r, 2, 1e-12), 0.0);
    EXPECT_THROW(layer_width(sol, r, 3, 0.1), ArgumentError);
    EXPECT_THROW(layer_width(sol, r, 1, 0.0), ArgumentError);
}

TEST(Interpolate, NodesAndMidpoints) {
    const DiscreteSolution sol = solve_bvp(builtin_problem("ex1"), 16);
    EXPECT_EQ(interpolate(sol, sol.mesh.points[5]), sol.values[5]);
    const Vec2 mid = interpolate(sol, 0.5 * (sol.mesh.points[9] + sol.mesh.points[10]));
    EXPECT_NEAR(mid[0], 0.5 * (sol.values[9][0] + sol.values[10][0]), 1e-14);
    EXPECT_THROW(interpolate(sol, 1.5), ArgumentError);
}

}  // namespace
}  // namespace spbvp
