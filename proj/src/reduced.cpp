#include "spbvp/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spbvp/errors.hpp"

namespace spbvp {

namespace {

// u0' = A^{-1} (B u0 + f)
Vec2 reduced_rhs(const TwoParamBVP& p, double x, const Vec2& u) {
    const double bu1 = p.b11(x) * u[0] - p.b12(x) * u[1];
    const double bu2 = -p.b21(x) * u[0] + p.b22(x) * u[1];
    return {(bu1 + p.f1(x)) / p.a1(x), (bu2 + p.f2(x)) / p.a2(x)};
}

Vec2 axpy(const Vec2& u, double h, const Vec2& k) { return {u[0] + h * k[0], u[1] + h * k[1]}; }

}  // namespace

ReducedSolution solve_reduced(const TwoParamBVP& bvp, int m) {
    if (m < 16) throw ArgumentError("solve_reduced needs M >= 16, got " + std::to_string(m));

    ReducedSolution sol;
    sol.grid.resize(static_cast<std::size_t>(m) + 1);
    sol.values.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) sol.grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / m;

    const double h = -1.0 / m;
    Vec2 u = bvp.right_bc;
    sol.values.back() = u;
    for (int i = m; i > 0; --i) {
        const double x = sol.grid[static_cast<std::size_t>(i)];
        const double xm = x + 0.5 * h;
        const double xn = sol.grid[static_cast<std::size_t>(i - 1)];
        const Vec2 k1 = reduced_rhs(bvp, x, u);
        const Vec2 k2 = reduced_rhs(bvp, xm, axpy(u, 0.5 * h, k1));
        const Vec2 k3 = reduced_rhs(bvp, xm, axpy(u, 0.5 * h, k2));
        const Vec2 k4 = reduced_rhs(bvp, xn, axpy(u, h, k3));
        for (int c = 0; c < 2; ++c) u[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        if (!std::isfinite(u[0]) || !std::isfinite(u[1])) {
            throw NumericalError("reduced problem: non-finite state at x = " + std::to_string(xn));
        }
        sol.values[static_cast<std::size_t>(i - 1)] = u;
    }
    return sol;
}

Vec2 eval_reduced(const ReducedSolution& rsol, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("eval_reduced needs 0 <= x <= 1");
    const auto& g = rsol.grid;
    auto it = std::upper_bound(g.begin(), g.end(), x);
    if (it == g.end()) return rsol.values.back();
    const auto hi = static_cast<std::size_t>(it - g.begin());
    const auto lo = hi - 1;
    if (g[lo] == x) return rsol.values[lo];
    const double t = (x - g[lo]) / (g[hi] - g[lo]);
    const Vec2& a = rsol.values[lo];
    const Vec2& b = rsol.values[hi];
    return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

}  // namespace spbvp
