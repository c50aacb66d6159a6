#pragma once

#include <span>
#include <vector>

#include "spbvp/discretize.hpp"

namespace spbvp {

/// Pivot blocks with |det| below this are reported as singular.
inline constexpr double kPivotDeterminantFloor = 1e-30;

/// Block forward elimination / back substitution without pivoting across
/// block rows. Returns U(x_1..x_{N-1}). Throws NumericalError naming the row
/// when a pivot block is singular.
std::vector<Vec2> solve_block_tridiagonal(const BlockTridiagonalSystem& system);

/// Expands the blocks into a dense 2(N-1) square matrix and solves it by
/// Gaussian elimination with partial pivoting. Test oracle.
std::vector<Vec2> solve_dense_oracle(const BlockTridiagonalSystem& system);

/// max |M values - rhs| over all rows and components.
double residual(const BlockTridiagonalSystem& system, std::span<const Vec2> values);

}  // namespace spbvp
