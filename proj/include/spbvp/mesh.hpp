#pragma once

#include <vector>

namespace spbvp {

enum class MeshKind { shishkin, uniform };

const char* to_string(MeshKind kind);

struct TransitionParameters {
    double tau1 = 0.0;
    double tau2 = 0.0;
};

struct MeshSteps {
    double h_j = 0.0;        ///< x_j - x_{j-1}
    double h_jplus1 = 0.0;   ///< x_{j+1} - x_j
    double hbar_j = 0.0;     ///< (h_j + h_{j+1}) / 2
};

/// Piecewise-uniform mesh on [0,1] with three regions [0,tau1], [tau1,tau2],
/// [tau2,1] of step h1, h2, h3. A uniform mesh records tau1 = 1/4,
/// tau2 = 1/2 for reporting and h1 = h2 = h3 = 1/N.
struct PiecewiseUniformMesh {
    std::vector<double> points;
    int n_elements = 0;
    double tau1 = 0.0;
    double tau2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;
    MeshKind kind = MeshKind::uniform;

    /// Region (1, 2 or 3) that node j belongs to: 1 for x_j <= tau1,
    /// 2 for tau1 < x_j <= tau2, 3 otherwise.
    int region(int j) const;
};

/// tau2 = min{1/2, 2 eps2 ln N / alpha}, tau1 = min{tau2/2, 2 eps1 ln N / alpha}.
TransitionParameters transition_parameters(double eps1, double eps2, double alpha, int n);

/// Shishkin mesh with N/4 elements in each of [0,tau1], [tau1,tau2] and N/2
/// in [tau2,1]. The transition nodes are set to tau1 and tau2 exactly.
PiecewiseUniformMesh build_shishkin_mesh(double eps1, double eps2, double alpha, int n);

/// Same construction with caller-supplied transition parameters
/// (0 < tau1 <= tau2/2, tau2 <= 1/2).
PiecewiseUniformMesh build_shishkin_mesh(const TransitionParameters& tau, int n);

PiecewiseUniformMesh build_uniform_mesh(int n);

/// Inserts the midpoint of every element: 2N elements, same transition
/// parameters, every original node kept bit-exactly at index 2j.
PiecewiseUniformMesh bisect_mesh(const PiecewiseUniformMesh& mesh);

/// Adjacent steps at interior node j (1 <= j <= N-1).
MeshSteps mesh_steps(const PiecewiseUniformMesh& mesh, int j);

}  // namespace spbvp
