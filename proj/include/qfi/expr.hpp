// expr.hpp — Tiny arithmetic grammar for user-supplied monotone functions:
// +, -, *, /, ^, log, exp, sqrt, numbers, and the variable x.
// Parsed once into an AST; custom functions pass only the scalar sanity checks.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <string>

#include "qfi/monotone.hpp"
#include "qfi/types.hpp"

namespace qfi::expr {

struct Node {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Log, Exp, Sqrt };
    Kind kind;
    double value{0.0};
    std::shared_ptr<Node> lhs, rhs;
};

using NodePtr = std::shared_ptr<Node>;

inline double eval(const Node& n, double x) {
    switch (n.kind) {
        case Node::Kind::Number: return n.value;
        case Node::Kind::Var:    return x;
        case Node::Kind::Add:    return eval(*n.lhs, x) + eval(*n.rhs, x);
        case Node::Kind::Sub:    return eval(*n.lhs, x) - eval(*n.rhs, x);
        case Node::Kind::Mul:    return eval(*n.lhs, x) * eval(*n.rhs, x);
        case Node::Kind::Div:    return eval(*n.lhs, x) / eval(*n.rhs, x);
        case Node::Kind::Pow:    return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
        case Node::Kind::Neg:    return -eval(*n.lhs, x);
        case Node::Kind::Log:    return std::log(eval(*n.lhs, x));
        case Node::Kind::Exp:    return std::exp(eval(*n.lhs, x));
        case Node::Kind::Sqrt:   return std::sqrt(eval(*n.lhs, x));
    }
    return 0.0;
}

class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    NodePtr parse() {
        NodePtr e = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw ValidationError("expr: unexpected character '" + std::string(1, text_[pos_]) +
                                  "' at position " + std::to_string(pos_));
        return e;
    }

private:
    std::string text_;
    std::size_t pos_{0};

    void skip_ws() { while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_; }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    NodePtr make(Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
        auto n = std::make_shared<Node>();
        n->kind = k; n->lhs = std::move(l); n->rhs = std::move(r);
        return n;
    }

    NodePtr expression() {
        NodePtr e = term();
        for (;;) {
            if (consume('+')) e = make(Node::Kind::Add, e, term());
            else if (consume('-')) e = make(Node::Kind::Sub, e, term());
            else return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (consume('*')) e = make(Node::Kind::Mul, e, unary());
            else if (consume('/')) e = make(Node::Kind::Div, e, unary());
            else return e;
        }
    }

    NodePtr unary() {
        if (consume('-')) return make(Node::Kind::Neg, unary());
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (consume('^')) return make(Node::Kind::Pow, base, unary());  // right-assoc
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ValidationError("expr: unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t len = 0;
            const double v = std::stod(text_.substr(pos_), &len);
            pos_ += len;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Number; n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string word = text_.substr(start, pos_ - start);
            if (word == "x") return make(Node::Kind::Var);
            Node::Kind k;
            if (word == "log") k = Node::Kind::Log;
            else if (word == "exp") k = Node::Kind::Exp;
            else if (word == "sqrt") k = Node::Kind::Sqrt;
            else throw ValidationError("expr: unknown identifier '" + word + "'");
            if (!consume('(')) throw ValidationError("expr: expected '(' after " + word);
            NodePtr arg = expression();
            if (!consume(')')) throw ValidationError("expr: missing ')' after " + word);
            return make(k, arg);
        }
        if (consume('(')) {
            NodePtr e = expression();
            if (!consume(')')) throw ValidationError("expr: missing ')'");
            return e;
        }
        throw ValidationError("expr: unexpected character '" + std::string(1, c) +
                              "' at position " + std::to_string(pos_));
    }
};

// Build a MonotoneFunction from a closed-form expression in x. Validated only
// by the scalar necessary conditions; operator monotonicity is trusted input.
inline MonotoneFunction make_custom(const std::string& text) {
    NodePtr ast = Parser(text).parse();
    MonotoneFunction f;
    f.name = "expr:" + text;
    f.eval = [ast](double x) { return eval(*ast, x); };
    f.eval_log = [ast](double u) { return eval(*ast, std::exp(std::clamp(u, -700.0, 700.0))); };
    f.log_eval = [fe = f.eval_log](double u) { return std::log(fe(u)); };
    validate_monotone_candidate(f);
    // f(0+) probed at 1e-12 with a Richardson step at 1e-10
    const double lo = f.eval(1e-12);
    const double hi = f.eval(1e-10);
    f.f_zero = lo + (lo - hi) / 99;
    f.standard = is_standard_numeric(f);
    return f;
}

} // namespace qfi::expr
