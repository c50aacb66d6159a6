#include "spbvp/discretize.hpp"

#include <cmath>
#include <string>

#include "spbvp/errors.hpp"

namespace spbvp {

namespace {

void check_values(std::span<const double> values, const PiecewiseUniformMesh& mesh) {
    if (values.size() != mesh.points.size()) {
        throw ArgumentError("mesh function has " + std::to_string(values.size()) +
                            " values for " + std::to_string(mesh.points.size()) + " mesh points");
    }
}

double step(const PiecewiseUniformMesh& mesh, int j) {
    const auto k = static_cast<std::size_t>(j);
    return mesh.points[k] - mesh.points[k - 1];
}

// Coefficients of one interior row for component i: U_{j-1}, U_j, U_{j+1}.
struct Stencil {
    double lower;
    double center;
    double upper;
};

Stencil upwind_stencil(double eps, double a, double b_diag, const MeshSteps& s) {
    const double lower = eps / (s.hbar_j * s.h_j);
    const double upper = eps / (s.hbar_j * s.h_jplus1) + a / s.h_jplus1;
    const double center = -eps / s.hbar_j * (1.0 / s.h_j + 1.0 / s.h_jplus1) - a / s.h_jplus1 - b_diag;
    return {lower, center, upper};
}

}  // namespace

double forward_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                          int j) {
    check_values(values, mesh);
    if (j < 0 || j > mesh.n_elements - 1) {
        throw IndexError("forward_difference: j = " + std::to_string(j) + " out of range");
    }
    const auto k = static_cast<std::size_t>(j);
    return (values[k + 1] - values[k]) / step(mesh, j + 1);
}

double backward_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                           int j) {
    check_values(values, mesh);
    if (j < 1 || j > mesh.n_elements) {
        throw IndexError("backward_difference: j = " + std::to_string(j) + " out of range");
    }
    const auto k = static_cast<std::size_t>(j);
    return (values[k] - values[k - 1]) / step(mesh, j);
}

double second_difference(std::span<const double> values, const PiecewiseUniformMesh& mesh,
                         int j) {
    if (j < 1 || j > mesh.n_elements - 1) {
        throw IndexError("second_difference: j = " + std::to_string(j) + " is not interior");
    }
    const MeshSteps s = mesh_steps(mesh, j);
    return (forward_difference(values, mesh, j) - backward_difference(values, mesh, j)) / s.hbar_j;
}

BlockTridiagonalSystem assemble(const TwoParamBVP& bvp, const PiecewiseUniformMesh& mesh) {
    const int n = mesh.n_elements;
    if (n < 2 || mesh.points.size() != static_cast<std::size_t>(n) + 1) {
        throw ArgumentError("assemble: malformed mesh");
    }
    const auto rows = static_cast<std::size_t>(n - 1);

    BlockTridiagonalSystem sys;
    sys.n_unknown_nodes = n - 1;
    sys.sub.assign(rows, Block2{});
    sys.diag.assign(rows, Block2{});
    sys.sup.assign(rows, Block2{});
    sys.rhs.assign(rows, Vec2{});
    sys.boundary_left = bvp.left_bc;
    sys.boundary_right = bvp.right_bc;

    const double eps[2] = {bvp.eps1, bvp.eps2};
    for (int j = 1; j <= n - 1; ++j) {
        const auto k = static_cast<std::size_t>(j - 1);
        const double x = mesh.points[static_cast<std::size_t>(j)];
        const MeshSteps s = mesh_steps(mesh, j);
        const double a[2] = {bvp.a1(x), bvp.a2(x)};
        const double b_diag[2] = {bvp.b11(x), bvp.b22(x)};
        const double b_off[2] = {bvp.b12(x), bvp.b21(x)};
        const double f[2] = {bvp.f1(x), bvp.f2(x)};

        for (int i = 0; i < 2; ++i) {
            const Stencil st = upwind_stencil(eps[i], a[i], b_diag[i], s);
            const int other = 1 - i;
            sys.sub[k][i][i] = st.lower;
            sys.diag[k][i][i] = st.center;
            sys.diag[k][i][other] = b_off[i];
            sys.sup[k][i][i] = st.upper;
            sys.rhs[k][i] = f[i];
        }
        for (int i = 0; i < 2; ++i) {
            if (!std::isfinite(sys.sub[k][i][i]) || !std::isfinite(sys.diag[k][i][i]) ||
                !std::isfinite(sys.diag[k][i][1 - i]) || !std::isfinite(sys.sup[k][i][i]) ||
                !std::isfinite(sys.rhs[k][i])) {
                throw EvaluationError("assemble: non-finite entry at node " + std::to_string(j));
            }
        }
    }

    for (int i = 0; i < 2; ++i) {
        sys.rhs.front()[i] -= sys.sub.front()[i][i] * bvp.left_bc[i];
        sys.rhs.back()[i] -= sys.sup.back()[i][i] * bvp.right_bc[i];
    }
    return sys;
}

std::vector<Vec2> apply_discrete_operator(const TwoParamBVP& bvp,
                                          const PiecewiseUniformMesh& mesh,
                                          const MeshFunctionPair& psi) {
    if (psi.values.size() != mesh.points.size() || psi.mesh.points != mesh.points) {
        throw ArgumentError("apply_discrete_operator: mesh function lives on a different mesh");
    }
    const int n = mesh.n_elements;
    std::vector<double> comp[2];
    for (int i = 0; i < 2; ++i) {
        comp[i].resize(psi.values.size());
        for (std::size_t k = 0; k < psi.values.size(); ++k) comp[i][k] = psi.values[k][i];
    }

    const double eps[2] = {bvp.eps1, bvp.eps2};
    std::vector<Vec2> out(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        const auto k = static_cast<std::size_t>(j);
        const double x = mesh.points[k];
        const double a[2] = {bvp.a1(x), bvp.a2(x)};
        // B U with B = [[b11, -b12], [-b21, b22]]
        const double bu[2] = {bvp.b11(x) * comp[0][k] - bvp.b12(x) * comp[1][k],
                              -bvp.b21(x) * comp[0][k] + bvp.b22(x) * comp[1][k]};
        for (int i = 0; i < 2; ++i) {
            out[k - 1][i] = eps[i] * second_difference(comp[i], mesh, j) +
                            a[i] * forward_difference(comp[i], mesh, j) - bu[i];
        }
    }
    return out;
}

}  // namespace spbvp
