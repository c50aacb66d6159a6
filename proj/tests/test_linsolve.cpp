#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "random_problems.hpp"
#include "spbvp/discretize.hpp"
#include "spbvp/errors.hpp"
#include "spbvp/linsolve.hpp"

namespace spbvp {
namespace {

double inf_norm(const std::vector<Vec2>& v) {
    double n = 0.0;
    for (const auto& e : v) n = std::max({n, std::abs(e[0]), std::abs(e[1])});
    return n;
}

double max_diff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        d = std::max({d, std::abs(a[k][0] - b[k][0]), std::abs(a[k][1] - b[k][1])});
    return d;
}

BlockTridiagonalSystem diagonal_system(int nodes, Block2 d, Vec2 rhs) {
    BlockTridiagonalSystem s;
    s.n_unknown_nodes = nodes;
    s.sub.assign(nodes, Block2{});
    s.sup.assign(nodes, Block2{});
    s.diag.assign(nodes, d);
    s.rhs.assign(nodes, rhs);
    return s;
}

TEST(BlockThomas, DecoupledDiagonalSystem) {
    const auto s = diagonal_system(7, Block2{{{-1.0, 0.0}, {0.0, -1.0}}}, Vec2{-1.0, -2.0});
    for (const auto& u : solve_block_tridiagonal(s)) {
        EXPECT_EQ(u[0], 1.0);
        EXPECT_EQ(u[1], 2.0);
    }
}

TEST(BlockThomas, MatchesDenseOracleOnBuiltins) {
    struct Case {
        const char* name;
        double eps1, eps2;
    };
    for (const Case c : {Case{"ms1", 0.1, 0.5}, Case{"ex1", kDefaultEps1, kDefaultEps2}}) {
        const TwoParamBVP p = builtin_problem(c.name, c.eps1, c.eps2);
        const auto s = assemble(p, build_shishkin_mesh(p.eps1, p.eps2, p.alpha, 8));
        const auto thomas = solve_block_tridiagonal(s);
        const auto dense = solve_dense_oracle(s);
        EXPECT_LE(max_diff(thomas, dense), 1e-12) << c.name;
    }
}

TEST(BlockThomas, SingularPivotNamesRow) {
    auto s = diagonal_system(5, Block2{{{-1.0, 0.0}, {0.0, -1.0}}}, Vec2{1.0, 1.0});
    s.diag[3] = Block2{{{1.0, 2.0}, {2.0, 4.0}}};
    try {
        solve_block_tridiagonal(s);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError& e) {
        EXPECT_NE(std::string(e.what()).find("row 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(solve_dense_oracle(s), NumericalError);
}

TEST(BlockThomas, RandomSystemsAgreeWithDenseOracle) {
    std::mt19937_64 rng(99);
    const int sizes[] = {4, 8, 16, 64};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = sizes[trial % 4];
        const auto s = trial % 2 == 0 ? testing::random_dominant_system(rng, n - 1)
                                      : testing::random_scheme_system(rng, n);
        const auto thomas = solve_block_tridiagonal(s);
        const auto dense = solve_dense_oracle(s);
        EXPECT_LE(max_diff(thomas, dense), 1e-10 * inf_norm(dense)) << "trial " << trial;
        EXPECT_LE(residual(s, thomas), 1e-10 * (inf_norm(s.rhs) + 1.0));
    }
}

TEST(BlockThomas, BitReproducible) {
    std::mt19937_64 rng(3);
    const auto s = testing::random_dominant_system(rng, 63);
    const auto a = solve_block_tridiagonal(s);
    const auto b = solve_block_tridiagonal(s);
    EXPECT_EQ(a, b);
}

TEST(DenseOracle, IdentityAndSingleNode) {
    const auto id = diagonal_system(3, Block2{{{1.0, 0.0}, {0.0, 1.0}}}, Vec2{0.25, -7.0});
    for (const auto& u : solve_dense_oracle(id)) {
        EXPECT_EQ(u[0], 0.25);
        EXPECT_EQ(u[1], -7.0);
    }
    // one interior node: closed-form 2x2 solve
    const auto one = diagonal_system(1, Block2{{{-3.0, 1.0}, {2.0, -5.0}}}, Vec2{1.0, 2.0});
    const double det = 15.0 - 2.0;
    const double u1 = (-5.0 * 1.0 - 1.0 * 2.0) / det;
    const double u2 = (-3.0 * 2.0 - 2.0 * 1.0) / det;
    const auto dense = solve_dense_oracle(one);
    const auto thomas = solve_block_tridiagonal(one);
    EXPECT_NEAR(dense[0][0], u1, 1e-15);
    EXPECT_NEAR(dense[0][1], u2, 1e-15);
    EXPECT_NEAR(thomas[0][0], u1, 1e-15);
    EXPECT_NEAR(thomas[0][1], u2, 1e-15);
}

TEST(Residual, Basics) {
    std::mt19937_64 rng(5);
    auto s = testing::random_dominant_system(rng, 15);
    const auto u = solve_block_tridiagonal(s);
    EXPECT_LE(residual(s, u), 1e-10 * (inf_norm(s.rhs) + 1.0));

    auto zero = s;
    for (auto& r : zero.rhs) r = {0.0, 0.0};
    EXPECT_EQ(residual(zero, std::vector<Vec2>(15, Vec2{0.0, 0.0})), 0.0);

    // A unit bump in one entry leaves a residual equal to that column's largest entry.
    auto bumped = u;
    bumped[6][1] += 1.0;
    double column_max = std::abs(s.diag[6][1][1]);
    column_max = std::max({column_max, std::abs(s.diag[6][0][1]), std::abs(s.sub[7][1][1]),
                           std::abs(s.sup[5][1][1])});
    const double r = residual(s, bumped);
    EXPECT_GT(r, 0.0);
    EXPECT_NEAR(r, column_max, 1e-9 * column_max);
    EXPECT_THROW(residual(s, std::vector<Vec2>(3)), ArgumentError);
}

TEST(Residual, AtLargeNAndTinyEps) {
    const TwoParamBVP p = builtin_problem("ex1", std::pow(5.0, -18), std::pow(2.0, -21));
    const auto s = assemble(p, build_shishkin_mesh(p.eps1, p.eps2, p.alpha, 2048));
    const auto u = solve_block_tridiagonal(s);
    EXPECT_LE(residual(s, u), 1e-10 * (inf_norm(s.rhs) + 1.0));
}

}  // namespace
}  // namespace spbvp
