#pragma once

#include <array>
#include <span>
#include <vector>

#include "spbvp/mesh.hpp"
#include "spbvp/problem.hpp"

namespace spbvp {

using Block2 = std::array<std::array<double, 2>, 2>;

/// The upwind operator L^N on the interior nodes x_1..x_{N-1} as a 2x2-block
/// tridiagonal system M U = rhs. Row k of every array belongs to node j = k+1.
///
/// The matrix keeps the sign of the continuous operator (negative diagonal).
/// Boundary values are folded into rhs; sub.front() and sup.back() still hold
/// the boundary coupling that was eliminated, and the solvers ignore them.
struct BlockTridiagonalSystem {
    int n_unknown_nodes = 0;
    std::vector<Block2> sub;
    std::vector<Block2> diag;
    std::vector<Block2> sup;
    std::vector<Vec2> rhs;
    Vec2 boundary_left{};
    Vec2 boundary_right{};
};

struct MeshFunctionPair {
    PiecewiseUniformMesh mesh;
    std::vector<Vec2> values;  ///< one (U1, U2) pair per mesh point
};

/// D+ U(x_j) = (U_{j+1} - U_j) / h_{j+1}, 0 <= j <= N-1.
double forward_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                          int j);

/// D- U(x_j) = (U_j - U_{j-1}) / h_j, 1 <= j <= N.
double backward_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                           int j);

/// delta^2 U(x_j) = (D+ U(x_j) - D- U(x_j)) / hbar_j, 1 <= j <= N-1.
double second_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                         int j);

/// Assembles E delta^2 U + A D+ U - B U = f at x_1..x_{N-1} with
/// U(x_0) = l and U(x_N) = r eliminated.
BlockTridiagonalSystem assemble(const TwoParamBVP& bvp, const PiecewiseUniformMesh& mesh);

/// (L^N psi)(x_j) for j = 1..N-1, evaluated from the difference operators
/// without going through the assembled matrix.
std::vector<Vec2> apply_discrete_operator(const TwoParamBVP& bvp,
                                          const PiecewiseUniformMesh& mesh,
                                          const MeshFunctionPair& psi);

}  // namespace spbvp
