#include "spbvp/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spbvp/errors.hpp"

namespace spbvp {

namespace {

Block2 multiply(const Block2& a, const Block2& b) {
    Block2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Vec2 multiply(const Block2& a, const Vec2& v) {
    return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

Block2 inverse(const Block2& a, std::size_t row) {
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (!(std::abs(det) >= kPivotDeterminantFloor)) {
        throw NumericalError("block-tridiagonal solve: singular pivot block at row " +
                             std::to_string(row) + " (det = " + std::to_string(det) + ")");
    }
    return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

void check_shape(const BlockTridiagonalSystem& s) {
    const auto n = static_cast<std::size_t>(s.n_unknown_nodes);
    if (n == 0 || s.sub.size() != n || s.diag.size() != n || s.sup.size() != n ||
        s.rhs.size() != n) {
        throw ArgumentError("block-tridiagonal system has inconsistent sizes");
    }
}

}  // namespace

std::vector<Vec2> solve_block_tridiagonal(const BlockTridiagonalSystem& system) {
    check_shape(system);
    const std::size_t n = system.diag.size();

    // Forward sweep: pivot_k = D_k - L_k pivot_{k-1}^{-1} U_{k-1}.
    std::vector<Block2> pivot_inv(n);
    std::vector<Vec2> g(n);
    pivot_inv[0] = inverse(system.diag[0], 0);
    g[0] = system.rhs[0];
    for (std::size_t k = 1; k < n; ++k) {
        const Block2 m = multiply(system.sub[k], pivot_inv[k - 1]);
        const Block2 mu = multiply(m, system.sup[k - 1]);
        Block2 pivot = system.diag[k];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) pivot[i][j] -= mu[i][j];
        pivot_inv[k] = inverse(pivot, k);
        const Vec2 mg = multiply(m, g[k - 1]);
        g[k] = {system.rhs[k][0] - mg[0], system.rhs[k][1] - mg[1]};
    }

    std::vector<Vec2> u(n);
    u[n - 1] = multiply(pivot_inv[n - 1], g[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        const Vec2 su = multiply(system.sup[k], u[k + 1]);
        u[k] = multiply(pivot_inv[k], Vec2{g[k][0] - su[0], g[k][1] - su[1]});
    }
    return u;
}

std::vector<Vec2> solve_dense_oracle(const BlockTridiagonalSystem& system) {
    check_shape(system);
    const std::size_t nodes = system.diag.size();
    const std::size_t dim = 2 * nodes;
    std::vector<double> a(dim * dim, 0.0);
    std::vector<double> b(dim);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * dim + c]; };

    for (std::size_t k = 0; k < nodes; ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            const std::size_t r = 2 * k + i;
            b[r] = system.rhs[k][i];
            for (std::size_t j = 0; j < 2; ++j) {
                at(r, 2 * k + j) = system.diag[k][i][j];
                if (k > 0) at(r, 2 * (k - 1) + j) = system.sub[k][i][j];
                if (k + 1 < nodes) at(r, 2 * (k + 1) + j) = system.sup[k][i][j];
            }
        }
    }

    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));

    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < dim; ++r)
            if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
        if (!(std::abs(at(p, c)) > scale * 1e-18)) {
            throw NumericalError("dense solve: matrix is numerically singular at column " +
                                 std::to_string(c));
        }
        if (p != c) {
            for (std::size_t j = 0; j < dim; ++j) std::swap(at(p, j), at(c, j));
            std::swap(b[p], b[c]);
        }
        for (std::size_t r = c + 1; r < dim; ++r) {
            const double f = at(r, c) / at(c, c);
            if (f == 0.0) continue;
            for (std::size_t j = c; j < dim; ++j) at(r, j) -= f * at(c, j);
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(dim);
    for (std::size_t r = dim; r-- > 0;) {
        double s = b[r];
        for (std::size_t j = r + 1; j < dim; ++j) s -= at(r, j) * x[j];
        x[r] = s / at(r, r);
    }

    std::vector<Vec2> u(nodes);
    for (std::size_t k = 0; k < nodes; ++k) u[k] = {x[2 * k], x[2 * k + 1]};
    return u;
}

double residual(const BlockTridiagonalSystem& system, std::span<const Vec2> values) {
    check_shape(system);
    const std::size_t n = system.diag.size();
    if (values.size() != n) throw ArgumentError("residual: value count does not match system");
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        Vec2 r = multiply(system.diag[k], values[k]);
        if (k > 0) {
            const Vec2 s = multiply(system.sub[k], values[k - 1]);
            r = {r[0] + s[0], r[1] + s[1]};
        }
        if (k + 1 < n) {
            const Vec2 s = multiply(system.sup[k], values[k + 1]);
            r = {r[0] + s[0], r[1] + s[1]};
        }
        worst = std::max({worst, std::abs(r[0] - system.rhs[k][0]), std::abs(r[1] - system.rhs[k][1])});
    }
    return worst;
}

}  // namespace spbvp
