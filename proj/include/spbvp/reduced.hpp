#pragma once

#include <vector>

#include "spbvp/problem.hpp"

namespace spbvp {

/// Outer solution of A u0' - B u0 = f, u0(1) = r on an equispaced grid.
struct ReducedSolution {
    std::vector<double> grid;
    std::vector<Vec2> values;
};

/// Integrates u0' = A^{-1}(B u0 + f) from x = 1 down to x = 0 with classical
/// fourth-order Runge-Kutta, step 1/M. Requires M >= 16.
ReducedSolution solve_reduced(const TwoParamBVP& bvp, int m);

/// Piecewise-linear interpolation of the stored values, 0 <= x <= 1.
Vec2 eval_reduced(const ReducedSolution& rsol, double x);

}  // namespace spbvp
