#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace spbvp {

using Vec2 = std::array<double, 2>;

/// A pure real function on [0,1] with a label used in diagnostics.
///
/// Evaluation must be side-effect free; fields are shared freely between
/// threads by the table driver.
class ScalarField {
public:
    using Fn = std::function<double(double)>;

    ScalarField() = default;
    ScalarField(std::string label, Fn fn) : label_(std::move(label)), fn_(std::move(fn)) {}

    static ScalarField constant(std::string label, double value);

    double operator()(double x) const { return fn_(x); }
    const std::string& label() const noexcept { return label_; }
    explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

private:
    std::string label_;
    Fn fn_;
};

/// E u'' + A u' - B u = f on (0,1), u(0) = left_bc, u(1) = right_bc, with
/// E = diag(eps1, eps2), A = diag(a1, a2) and B = [[b11, -b12], [-b21, b22]].
struct TwoParamBVP {
    double eps1 = 0.0;
    double eps2 = 0.0;
    ScalarField a1, a2;
    ScalarField b11, b12, b21, b22;
    ScalarField f1, f2;
    Vec2 left_bc{};
    Vec2 right_bc{};
    double alpha = 0.0;  ///< lower bound for a1, a2
    double beta = 0.0;   ///< lower bound for b11 - b12 and b22 - b21
};

struct ValidationReport {
    double alpha_estimate = 0.0;
    double beta_estimate = 0.0;
    double offdiag_min = 0.0;
    int sample_count = 0;
    std::vector<std::string> warnings;
    bool ok = false;
};

inline constexpr double kDefaultEps1 = 1.0 / 625.0;  // 5^-4
inline constexpr double kDefaultEps2 = 1.0 / 128.0;  // 2^-7

/// Names accepted by builtin_problem.
const std::vector<std::string>& builtin_problem_names();

/// Catalog lookup: "ex1", "ex2", "ex3" or the manufactured problem "ms1"
/// (exact solution u1 = x(1-x), u2 = x^2(1-x)). Throws CatalogError for
/// unknown names and ArgumentError for nonpositive ε.
TwoParamBVP builtin_problem(const std::string& name, double eps1 = kDefaultEps1,
                            double eps2 = kDefaultEps2);

/// Exact solution of "ms1" at x.
Vec2 ms1_exact(double x);

/// Samples every coefficient at sample_count equispaced points of [0,1]
/// (endpoints included). Throws EvaluationError naming the field and x on a
/// non-finite value, ArgumentError if sample_count < 2.
ValidationReport validate_problem(const TwoParamBVP& bvp, int sample_count = 1001);

/// exp(-alpha x / eps): B1 when eps = eps1, B2 when eps = eps2.
double layer_function(int which, double x, double alpha, double eps);

/// Layer function B_which evaluated with the problem's own alpha and eps_which.
double layer_function(const TwoParamBVP& bvp, int which, double x);

}  // namespace spbvp
