#include "spbvp/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "spbvp/errors.hpp"

namespace spbvp {

struct Expr::Node {
    Kind kind = Kind::number;
    double value = 0.0;
    Func func = Func::sin;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Kind;
using Func = Expr::Func;

struct FuncName {
    const char* name;
    Func func;
};

constexpr FuncName kFuncs[] = {{"sin", Func::sin},   {"cos", Func::cos},   {"exp", Func::exp},
                               {"ln", Func::ln},     {"sqrt", Func::sqrt}, {"abs", Func::abs}};

const char* func_name(Func f) {
    for (const auto& fn : kFuncs)
        if (fn.func == f) return fn.name;
    return "?";
}

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render(const Expr::Node& n) {
    switch (n.kind) {
        case Kind::number: return format_number(n.value);
        case Kind::variable: return "x";
        case Kind::neg: return "(-" + render(*n.lhs) + ")";
        case Kind::add: return "(" + render(*n.lhs) + "+" + render(*n.rhs) + ")";
        case Kind::sub: return "(" + render(*n.lhs) + "-" + render(*n.rhs) + ")";
        case Kind::mul: return "(" + render(*n.lhs) + "*" + render(*n.rhs) + ")";
        case Kind::div: return "(" + render(*n.lhs) + "/" + render(*n.rhs) + ")";
        case Kind::pow: return "(" + render(*n.lhs) + "^" + render(*n.rhs) + ")";
        case Kind::call: return std::string(func_name(n.func)) + "(" + render(*n.lhs) + ")";
    }
    return {};
}

[[noreturn]] void eval_failure(const Expr::Node& n, const std::string& what, double x) {
    throw EvaluationError(what + " in '" + render(n) + "' at x = " + format_number(x));
}

double evaluate(const Expr::Node& n, double x) {
    double v = 0.0;
    switch (n.kind) {
        case Kind::number: return n.value;
        case Kind::variable: return x;
        case Kind::neg: v = -evaluate(*n.lhs, x); break;
        case Kind::add: v = evaluate(*n.lhs, x) + evaluate(*n.rhs, x); break;
        case Kind::sub: v = evaluate(*n.lhs, x) - evaluate(*n.rhs, x); break;
        case Kind::mul: v = evaluate(*n.lhs, x) * evaluate(*n.rhs, x); break;
        case Kind::div: {
            const double num = evaluate(*n.lhs, x);
            const double den = evaluate(*n.rhs, x);
            if (den == 0.0) eval_failure(n, "division by zero", x);
            v = num / den;
            break;
        }
        case Kind::pow: v = std::pow(evaluate(*n.lhs, x), evaluate(*n.rhs, x)); break;
        case Kind::call: {
            const double arg = evaluate(*n.lhs, x);
            switch (n.func) {
                case Func::sin: v = std::sin(arg); break;
                case Func::cos: v = std::cos(arg); break;
                case Func::exp: v = std::exp(arg); break;
                case Func::ln:
                    if (!(arg > 0.0)) eval_failure(n, "logarithm of a nonpositive value", x);
                    v = std::log(arg);
                    break;
                case Func::sqrt:
                    if (arg < 0.0) eval_failure(n, "square root of a negative value", x);
                    v = std::sqrt(arg);
                    break;
                case Func::abs: v = std::abs(arg); break;
            }
            break;
        }
    }
    if (!std::isfinite(v)) eval_failure(n, "non-finite result", x);
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr root = expr();
        skip_space();
        if (pos_ != text_.size()) fail("expected operator or end of input");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = make(Kind::add, lhs, term());
            } else if (accept('-')) {
                lhs = make(Kind::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = make(Kind::mul, lhs, factor());
            } else if (accept('/')) {
                lhs = make(Kind::div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor() {
        if (accept('-')) return make(Kind::neg, factor());
        NodePtr base = atom();
        if (accept('^')) return make(Kind::pow, base, factor());
        return base;
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected number, 'x', function or '(' but input ended");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view word = text_.substr(start, pos_ - start);
            if (word == "x") return make(Kind::variable);
            for (const auto& fn : kFuncs) {
                if (word == fn.name) {
                    expect('(');
                    auto call = std::make_shared<Expr::Node>();
                    call->kind = Kind::call;
                    call->func = fn.func;
                    call->lhs = expr();
                    expect(')');
                    return call;
                }
            }
            pos_ = start;
            fail("unknown identifier '" + std::string(word) + "'");
        }
        fail("expected number, 'x', function or '('");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t count = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            count += digits();
        }
        if (count == 0) {
            pos_ = start;
            fail("malformed number");
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) {
                pos_ = mark;
                fail("malformed exponent");
            }
        }
        const std::string literal(text_.substr(start, pos_ - start));
        auto n = std::make_shared<Expr::Node>();
        n->kind = Kind::number;
        n->value = std::strtod(literal.c_str(), nullptr);
        if (!std::isfinite(n->value)) {
            pos_ = start;
            fail("number out of range");
        }
        return n;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

double Expr::eval(double x) const { return evaluate(*root_, x); }

std::string Expr::to_string() const { return render(*root_); }

Expr::Kind Expr::kind() const { return root_->kind; }

Expr parse_expression(std::string_view text) { return Expr(Parser(text).parse()); }

}  // namespace spbvp
