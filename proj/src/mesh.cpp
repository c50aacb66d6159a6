#include "spbvp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spbvp/errors.hpp"

namespace spbvp {

const char* to_string(MeshKind kind) {
    return kind == MeshKind::shishkin ? "shishkin" : "uniform";
}

int PiecewiseUniformMesh::region(int j) const {
    const double x = points.at(static_cast<std::size_t>(j));
    if (x <= tau1) return 1;
    if (x <= tau2) return 2;
    return 3;
}

TransitionParameters transition_parameters(double eps1, double eps2, double alpha, int n) {
    if (!(eps1 > 0.0) || !(eps2 > 0.0) || !(alpha > 0.0)) {
        throw ArgumentError("eps1, eps2 and alpha must be positive");
    }
    if (eps1 > eps2) throw ArgumentError("transition parameters need eps1 <= eps2");
    if (n < 4) throw ArgumentError("transition parameters need N >= 4");

    const double log_n = std::log(static_cast<double>(n));
    TransitionParameters tau;
    tau.tau2 = std::min(0.5, 2.0 * eps2 / alpha * log_n);
    tau.tau1 = std::min(tau.tau2 / 2.0, 2.0 * eps1 / alpha * log_n);
    return tau;
}

PiecewiseUniformMesh build_shishkin_mesh(const TransitionParameters& tau, int n) {
    if (n < 4 || n % 4 != 0) {
        throw ArgumentError("Shishkin mesh needs N a positive multiple of 4, got " +
                            std::to_string(n));
    }
    if (!(tau.tau1 > 0.0) || tau.tau1 > tau.tau2 / 2.0 || tau.tau2 > 0.5) {
        throw ArgumentError("transition parameters must satisfy 0 < tau1 <= tau2/2, tau2 <= 1/2");
    }

    PiecewiseUniformMesh mesh;
    mesh.kind = MeshKind::shishkin;
    mesh.n_elements = n;
    mesh.tau1 = tau.tau1;
    mesh.tau2 = tau.tau2;
    mesh.h1 = 4.0 * tau.tau1 / n;
    mesh.h2 = 4.0 * (tau.tau2 - tau.tau1) / n;
    mesh.h3 = 2.0 * (1.0 - tau.tau2) / n;

    const int q = n / 4;
    const int half = n / 2;
    mesh.points.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        double x;
        if (j < q) {
            x = j * mesh.h1;
        } else if (j < half) {
            x = tau.tau1 + (j - q) * mesh.h2;
        } else {
            x = tau.tau2 + (j - half) * mesh.h3;
        }
        mesh.points[static_cast<std::size_t>(j)] = x;
    }
    mesh.points[static_cast<std::size_t>(q)] = tau.tau1;
    mesh.points[static_cast<std::size_t>(half)] = tau.tau2;
    mesh.points.back() = 1.0;
    return mesh;
}

PiecewiseUniformMesh build_shishkin_mesh(double eps1, double eps2, double alpha, int n) {
    if (n < 4 || n % 4 != 0) {
        throw ArgumentError("Shishkin mesh needs N a positive multiple of 4, got " +
                            std::to_string(n));
    }
    return build_shishkin_mesh(transition_parameters(eps1, eps2, alpha, n), n);
}

PiecewiseUniformMesh build_uniform_mesh(int n) {
    if (n < 2) throw ArgumentError("uniform mesh needs N >= 2, got " + std::to_string(n));
    PiecewiseUniformMesh mesh;
    mesh.kind = MeshKind::uniform;
    mesh.n_elements = n;
    mesh.tau1 = 0.25;
    mesh.tau2 = 0.5;
    mesh.h1 = mesh.h2 = mesh.h3 = 1.0 / n;
    mesh.points.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        mesh.points[static_cast<std::size_t>(j)] = static_cast<double>(j) / n;
    }
    return mesh;
}

PiecewiseUniformMesh bisect_mesh(const PiecewiseUniformMesh& mesh) {
    PiecewiseUniformMesh fine = mesh;
    fine.n_elements = 2 * mesh.n_elements;
    fine.h1 = mesh.h1 / 2.0;
    fine.h2 = mesh.h2 / 2.0;
    fine.h3 = mesh.h3 / 2.0;
    fine.points.assign(static_cast<std::size_t>(fine.n_elements) + 1, 0.0);
    for (std::size_t j = 0; j + 1 < mesh.points.size(); ++j) {
        fine.points[2 * j] = mesh.points[j];
        fine.points[2 * j + 1] = 0.5 * (mesh.points[j] + mesh.points[j + 1]);
    }
    fine.points.back() = mesh.points.back();
    return fine;
}

MeshSteps mesh_steps(const PiecewiseUniformMesh& mesh, int j) {
    if (j < 1 || j > mesh.n_elements - 1) {
        throw IndexError("mesh_steps: node " + std::to_string(j) + " is not interior");
    }
    const auto& x = mesh.points;
    const auto k = static_cast<std::size_t>(j);
    MeshSteps s;
    s.h_j = x[k] - x[k - 1];
    s.h_jplus1 = x[k + 1] - x[k];
    s.hbar_j = 0.5 * (s.h_j + s.h_jplus1);
    return s;
}

}  // namespace spbvp
