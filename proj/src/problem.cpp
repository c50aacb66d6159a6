#include "spbvp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "spbvp/errors.hpp"

namespace spbvp {

ScalarField ScalarField::constant(std::string label, double value) {
    return ScalarField(std::move(label), [value](double) { return value; });
}

namespace {

TwoParamBVP example1(double eps1, double eps2) {
    TwoParamBVP p;
    p.eps1 = eps1;
    p.eps2 = eps2;
    p.a1 = ScalarField("a1", [](double x) { return 1.0 + x * x; });
    p.a2 = ScalarField("a2", [](double x) { return 2.0 + x; });
    p.b11 = ScalarField("b11", [](double x) { return 4.0 + std::sin(x); });
    p.b12 = ScalarField::constant("b12", 2.0);
    p.b21 = ScalarField::constant("b21", 1.0);
    p.b22 = ScalarField("b22", [](double x) { return 2.0 + std::cos(x); });
    p.f1 = ScalarField("f1", [](double x) { return -std::exp(x); });
    p.f2 = ScalarField("f2", [](double x) { return -x * x; });
    p.left_bc = {3.0, 3.0};
    p.right_bc = {1.0, 1.0};
    p.alpha = 1.0;
    p.beta = 1.0 + std::cos(1.0);  // min of b22 - b21 = 1 + cos x
    return p;
}

// Examples 2 and 3 share coefficients and differ only in the left boundary.
TwoParamBVP example23(double eps1, double eps2, Vec2 left) {
    TwoParamBVP p;
    p.eps1 = eps1;
    p.eps2 = eps2;
    p.a1 = ScalarField::constant("a1", 1.0);
    p.a2 = ScalarField("a2", [](double x) { return 1.0 + x; });
    p.b11 = ScalarField::constant("b11", 2.0);
    p.b12 = ScalarField::constant("b12", 1.0);
    p.b21 = ScalarField("b21", [](double x) { return x; });
    p.b22 = ScalarField("b22", [](double x) { return 2.0 * x + 1.0; });
    p.f1 = ScalarField("f1", [](double x) { return -3.0 * (x - 1.0); });
    p.f2 = ScalarField("f2", [](double x) { return -2.0 * x; });
    p.left_bc = left;
    p.right_bc = {2.0, 2.0};
    p.alpha = 1.0;
    p.beta = 1.0;
    return p;
}

// u1 = x(1-x), u2 = x^2(1-x); f obtained by substituting into the operator.
TwoParamBVP manufactured(double eps1, double eps2) {
    TwoParamBVP p;
    p.eps1 = eps1;
    p.eps2 = eps2;
    p.a1 = ScalarField::constant("a1", 1.0);
    p.a2 = ScalarField::constant("a2", 1.0);
    p.b11 = ScalarField::constant("b11", 2.0);
    p.b12 = ScalarField::constant("b12", 1.0);
    p.b21 = ScalarField::constant("b21", 1.0);
    p.b22 = ScalarField::constant("b22", 2.0);
    p.f1 = ScalarField("f1", [eps1](double x) {
        const Vec2 u = ms1_exact(x);
        return -2.0 * eps1 + (1.0 - 2.0 * x) - (2.0 * u[0] - u[1]);
    });
    p.f2 = ScalarField("f2", [eps2](double x) {
        const Vec2 u = ms1_exact(x);
        return eps2 * (2.0 - 6.0 * x) + (2.0 * x - 3.0 * x * x) - (2.0 * u[1] - u[0]);
    });
    p.left_bc = {0.0, 0.0};
    p.right_bc = {0.0, 0.0};
    p.alpha = 1.0;
    p.beta = 1.0;
    return p;
}

double checked_eval(const ScalarField& field, double x) {
    const double v = field(x);
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "coefficient " << field.label() << " is not finite at x = " << x;
        throw EvaluationError(msg.str());
    }
    return v;
}

}  // namespace

const std::vector<std::string>& builtin_problem_names() {
    static const std::vector<std::string> names{"ex1", "ex2", "ex3", "ms1"};
    return names;
}

Vec2 ms1_exact(double x) { return {x * (1.0 - x), x * x * (1.0 - x)}; }

TwoParamBVP builtin_problem(const std::string& name, double eps1, double eps2) {
    if (!(eps1 > 0.0) || !(eps2 > 0.0)) {
        throw ArgumentError("perturbation parameters must be positive");
    }
    if (name == "ex1") return example1(eps1, eps2);
    if (name == "ex2") return example23(eps1, eps2, {0.0, 3.0});
    if (name == "ex3") return example23(eps1, eps2, {1.0, 1.0});
    if (name == "ms1") return manufactured(eps1, eps2);
    throw CatalogError("unknown built-in problem '" + name + "' (expected ex1, ex2, ex3 or ms1)");
}

ValidationReport validate_problem(const TwoParamBVP& bvp, int sample_count) {
    if (sample_count < 2) {
        throw ArgumentError("validate_problem needs at least 2 sample points");
    }
    ValidationReport report;
    report.sample_count = sample_count;
    report.alpha_estimate = std::numeric_limits<double>::infinity();
    report.beta_estimate = std::numeric_limits<double>::infinity();
    report.offdiag_min = std::numeric_limits<double>::infinity();

    for (int k = 0; k < sample_count; ++k) {
        const double x = k == sample_count - 1 ? 1.0 : static_cast<double>(k) / (sample_count - 1);
        const double a1 = checked_eval(bvp.a1, x);
        const double a2 = checked_eval(bvp.a2, x);
        const double b11 = checked_eval(bvp.b11, x);
        const double b12 = checked_eval(bvp.b12, x);
        const double b21 = checked_eval(bvp.b21, x);
        const double b22 = checked_eval(bvp.b22, x);
        checked_eval(bvp.f1, x);
        checked_eval(bvp.f2, x);
        report.alpha_estimate = std::min({report.alpha_estimate, a1, a2});
        report.beta_estimate = std::min({report.beta_estimate, b11 - b12, b22 - b21});
        report.offdiag_min = std::min({report.offdiag_min, b12, b21});
    }

    auto& w = report.warnings;
    if (report.offdiag_min <= 0.0) {
        w.push_back("off-diagonal coefficient not strictly positive (min b12, b21 = " +
                    std::to_string(report.offdiag_min) + ")");
    }
    if (!(bvp.eps1 > 0.0)) w.push_back("eps1 must be positive");
    if (bvp.eps1 > bvp.eps2) w.push_back("eps1 > eps2: the components must be ordered eps1 <= eps2");
    if (bvp.eps1 == bvp.eps2) w.push_back("eps1 == eps2: equal perturbation parameters");
    if (report.alpha_estimate <= 0.0) w.push_back("convection coefficient not positive");
    if (report.beta_estimate <= 0.0) w.push_back("coupling margin b_ii - b_ij not positive");
    if (bvp.alpha > report.alpha_estimate) {
        w.push_back("stored alpha " + std::to_string(bvp.alpha) + " exceeds sampled min(a1, a2) " +
                    std::to_string(report.alpha_estimate));
    }
    if (bvp.beta > report.beta_estimate) {
        w.push_back("stored beta " + std::to_string(bvp.beta) + " exceeds sampled coupling margin " +
                    std::to_string(report.beta_estimate));
    }

    report.ok = report.alpha_estimate > 0.0 && report.beta_estimate > 0.0 && bvp.eps1 > 0.0 &&
                bvp.eps1 <= bvp.eps2;
    return report;
}

double layer_function(int which, double x, double alpha, double eps) {
    if (which != 1 && which != 2) throw ArgumentError("layer function index must be 1 or 2");
    if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("layer function needs 0 <= x <= 1");
    if (!(eps > 0.0) || !(alpha > 0.0)) {
        throw ArgumentError("layer function needs eps > 0 and alpha > 0");
    }
    return std::exp(-alpha * x / eps);
}

double layer_function(const TwoParamBVP& bvp, int which, double x) {
    return layer_function(which, x, bvp.alpha, which == 1 ? bvp.eps1 : bvp.eps2);
}

}  // namespace spbvp
