#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace spbvp {

/// Immutable expression tree in one variable x.
///
/// Grammar (whitespace ignored):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' factor)?
///   atom   := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func   := sin | cos | exp | ln | sqrt | abs
/// '^' is right-associative and binds tighter than unary minus, so
/// "-x^2" is -(x^2).
class Expr {
public:
    enum class Kind { number, variable, neg, add, sub, mul, div, pow, call };
    enum class Func { sin, cos, exp, ln, sqrt, abs };

    struct Node;

    /// Throws EvaluationError for division by zero, ln/sqrt outside their
    /// domain, or any non-finite result; the message names the subexpression.
    double eval(double x) const;

    /// Fully parenthesized text that parses back to an identical tree.
    std::string to_string() const;

    Kind kind() const;

private:
    friend Expr parse_expression(std::string_view text);
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

/// Throws ParseError with the 0-based offset of the offending character.
Expr parse_expression(std::string_view text);

inline double eval_expression(const Expr& expr, double x) { return expr.eval(x); }

}  // namespace spbvp
