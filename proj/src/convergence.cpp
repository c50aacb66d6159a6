#include "spbvp/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "spbvp/discretize.hpp"
#include "spbvp/errors.hpp"
#include "spbvp/linsolve.hpp"

namespace spbvp {

const char* to_string(TwoMeshVariant variant) {
    return variant == TwoMeshVariant::recomputed_transition ? "recomputed" : "frozen";
}

DiscreteSolution solve_on_mesh(const TwoParamBVP& bvp, const PiecewiseUniformMesh& mesh) {
    const BlockTridiagonalSystem system = assemble(bvp, mesh);
    const std::vector<Vec2> interior = solve_block_tridiagonal(system);

    DiscreteSolution sol;
    sol.mesh = mesh;
    sol.values.reserve(mesh.points.size());
    sol.values.push_back(bvp.left_bc);
    sol.values.insert(sol.values.end(), interior.begin(), interior.end());
    sol.values.push_back(bvp.right_bc);
    return sol;
}

DiscreteSolution solve_bvp(const TwoParamBVP& bvp, int n, MeshKind kind) {
    const PiecewiseUniformMesh mesh = kind == MeshKind::shishkin
                                          ? build_shishkin_mesh(bvp.eps1, bvp.eps2, bvp.alpha, n)
                                          : build_uniform_mesh(n);
    return solve_on_mesh(bvp, mesh);
}

Vec2 interpolate(const DiscreteSolution& sol, double x) {
    const auto& p = sol.mesh.points;
    if (!(x >= p.front() && x <= p.back())) throw ArgumentError("interpolate: x outside [0,1]");
    auto it = std::upper_bound(p.begin(), p.end(), x);
    if (it == p.end()) return sol.values.back();
    const auto hi = static_cast<std::size_t>(it - p.begin());
    const auto lo = hi - 1;
    if (p[lo] == x) return sol.values[lo];
    const double t = (x - p[lo]) / (p[hi] - p[lo]);
    const Vec2& a = sol.values[lo];
    const Vec2& b = sol.values[hi];
    return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

double two_mesh_difference(const TwoParamBVP& bvp, int n, TwoMeshVariant variant, MeshKind kind) {
    const PiecewiseUniformMesh coarse = kind == MeshKind::shishkin
                                            ? build_shishkin_mesh(bvp.eps1, bvp.eps2, bvp.alpha, n)
                                            : build_uniform_mesh(n);
    const DiscreteSolution u_coarse = solve_on_mesh(bvp, coarse);

    double diff = 0.0;
    if (variant == TwoMeshVariant::frozen_transition || kind == MeshKind::uniform) {
        // Bisection nests the meshes: coarse node j is fine node 2j.
        const DiscreteSolution u_fine = solve_on_mesh(bvp, bisect_mesh(coarse));
        for (std::size_t j = 0; j < u_coarse.values.size(); ++j) {
            for (int c = 0; c < 2; ++c) {
                diff = std::max(diff, std::abs(u_coarse.values[j][c] - u_fine.values[2 * j][c]));
            }
        }
    } else {
        const PiecewiseUniformMesh fine = build_shishkin_mesh(bvp.eps1, bvp.eps2, bvp.alpha, 2 * n);
        const DiscreteSolution u_fine = solve_on_mesh(bvp, fine);
        for (std::size_t j = 0; j < u_coarse.values.size(); ++j) {
            const Vec2 v = interpolate(u_fine, coarse.points[j]);
            for (int c = 0; c < 2; ++c) {
                diff = std::max(diff, std::abs(u_coarse.values[j][c] - v[c]));
            }
        }
    }
    return diff;
}

std::vector<EpsPair> paper_eps_grid() {
    std::vector<EpsPair> grid;
    for (int k = 1; k <= 15; ++k) {
        grid.push_back({std::pow(5.0, -3 - k), std::pow(2.0, -6 - k)});
    }
    return grid;
}

ConvergenceReport uniform_table(const ProblemFamily& family, const std::vector<EpsPair>& eps_grid,
                                const std::vector<int>& n_list, TwoMeshVariant variant,
                                unsigned threads) {
    if (eps_grid.empty() || n_list.empty()) {
        throw ArgumentError("uniform_table needs a nonempty eps grid and N list");
    }
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        if (n_list[k] < 4 || n_list[k] % 4 != 0) {
            throw ArgumentError("N list entries must be positive multiples of 4");
        }
        if (k > 0 && n_list[k] != 2 * n_list[k - 1]) {
            throw ArgumentError("N list must double at every step");
        }
    }

    ConvergenceReport report;
    report.eps_grid = eps_grid;
    report.n_list = n_list;
    report.d_eps_n.assign(eps_grid.size(), std::vector<double>(n_list.size(), 0.0));

    const std::size_t cells = eps_grid.size() * n_list.size();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t cell = next++; cell < cells; cell = next++) {
            const std::size_t e = cell / n_list.size();
            const std::size_t k = cell % n_list.size();
            try {
                const TwoParamBVP bvp = family(eps_grid[e].eps1, eps_grid[e].eps2);
                report.d_eps_n[e][k] = two_mesh_difference(bvp, n_list[k], variant);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    report.d_n.assign(n_list.size(), 0.0);
    for (std::size_t k = 0; k < n_list.size(); ++k) {
        for (const auto& row : report.d_eps_n) report.d_n[k] = std::max(report.d_n[k], row[k]);
    }
    for (std::size_t k = 0; k + 1 < n_list.size(); ++k) {
        report.p_n.push_back(std::log2(report.d_n[k] / report.d_n[k + 1]));
    }
    // With a single N there is no order estimate; C is then left at zero.
    if (!report.p_n.empty()) {
        report.p_star = *std::min_element(report.p_n.begin(), report.p_n.end());
        const double denom = 1.0 - std::pow(2.0, -report.p_star);
        for (std::size_t k = 0; k < n_list.size(); ++k) {
            report.c_p_n.push_back(report.d_n[k] * std::pow(static_cast<double>(n_list[k]), report.p_star) /
                                   denom);
        }
        report.c_p_star = *std::max_element(report.c_p_n.begin(), report.c_p_n.end());
    }
    return report;
}

double layer_width(const DiscreteSolution& sol, const ReducedSolution& rsol, int component,
                   double threshold) {
    if (component != 1 && component != 2) throw ArgumentError("component must be 1 or 2");
    if (!(threshold > 0.0)) throw ArgumentError("threshold must be positive");
    const auto c = static_cast<std::size_t>(component - 1);
    const auto& x = sol.mesh.points;
    for (std::size_t k = x.size(); k-- > 0;) {
        const double outer = eval_reduced(rsol, x[k])[c];
        if (std::abs(sol.values[k][c] - outer) > threshold) {
            return k + 1 < x.size() ? x[k + 1] : x[k];
        }
    }
    return 0.0;
}

}  // namespace spbvp
