#pragma once

#include <functional>
#include <vector>

#include "spbvp/mesh.hpp"
#include "spbvp/problem.hpp"
#include "spbvp/reduced.hpp"

namespace spbvp {

/// Mesh plus all N+1 nodal values; values.front() = l, values.back() = r.
struct DiscreteSolution {
    PiecewiseUniformMesh mesh;
    std::vector<Vec2> values;
};

/// How the 2N-element comparison solution is formed.
enum class TwoMeshVariant {
    /// Fine Shishkin mesh built from 2N (its own tau1, tau2); fine solution
    /// linearly interpolated at the coarse nodes. Reproduces Table 1.
    recomputed_transition,
    /// Fine mesh = bisection of the coarse mesh (tau frozen at the coarse
    /// values); fine values read at even indices.
    frozen_transition,
};

const char* to_string(TwoMeshVariant variant);

struct EpsPair {
    double eps1 = 0.0;
    double eps2 = 0.0;
};

struct ConvergenceReport {
    std::vector<EpsPair> eps_grid;
    std::vector<int> n_list;
    std::vector<std::vector<double>> d_eps_n;  ///< [eps index][N index]
    std::vector<double> d_n;
    std::vector<double> p_n;  ///< one fewer entry than n_list
    double p_star = 0.0;
    std::vector<double> c_p_n;
    double c_p_star = 0.0;
};

/// Builds a problem instance for a given (eps1, eps2).
using ProblemFamily = std::function<TwoParamBVP(double eps1, double eps2)>;

/// Mesh, assemble, block-Thomas solve, boundary values reattached.
DiscreteSolution solve_bvp(const TwoParamBVP& bvp, int n, MeshKind kind = MeshKind::shishkin);

/// Same pipeline on a caller-built mesh.
DiscreteSolution solve_on_mesh(const TwoParamBVP& bvp, const PiecewiseUniformMesh& mesh);

/// Piecewise-linear interpolant of a discrete solution at x in [0,1].
Vec2 interpolate(const DiscreteSolution& sol, double x);

/// max over coarse nodes and both components of |U^N - U^{2N}|.
double two_mesh_difference(const TwoParamBVP& bvp, int n,
                           TwoMeshVariant variant = TwoMeshVariant::recomputed_transition,
                           MeshKind kind = MeshKind::shishkin);

/// The 15 (eps1, eps2) = (5^{-3-k}, 2^{-6-k}), k = 1..15 pairs of Table 1.
std::vector<EpsPair> paper_eps_grid();

/// Two-mesh differences for every (eps, N) cell and the derived D^N, p^N,
/// p*, C^N_{p*} = D^N N^{p*} / (1 - 2^{-p*}) and C_{p*}. n_list must double
/// at every step and hold multiples of 4. Cells are evaluated on up to
/// `threads` worker threads (0 = hardware concurrency); the result does not
/// depend on the thread count.
ConvergenceReport uniform_table(const ProblemFamily& family, const std::vector<EpsPair>& eps_grid,
                                const std::vector<int>& n_list,
                                TwoMeshVariant variant = TwoMeshVariant::recomputed_transition,
                                unsigned threads = 0);

/// Smallest mesh point x_j with |U_c(x_k) - u0_c(x_k)| <= threshold for
/// every k >= j (component c in {1, 2}); 0 if that holds everywhere.
double layer_width(const DiscreteSolution& sol, const ReducedSolution& rsol, int component,
                   double threshold);

}  // namespace spbvp
