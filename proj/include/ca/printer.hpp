/*
 * Canonical printing of expressions with minimal parentheses.
 *
 * Precedence levels: 1 additive, 2 multiplicative, 3 unary minus, 4 atoms
 * (identifiers, non-negative integers, function calls, parenthesized terms).
 * Binary operators are left-associative, so a right operand needs one level
 * more than its parent. Unary minus takes an atom.
 */
#pragma once

#include <string>

#include "ca/expr.hpp"

namespace ca {

namespace detail {

constexpr int prec_add = 1, prec_mul = 2, prec_unary = 3, prec_atom = 4;

/// Level at which a literal's canonical text re-parses as a single operand.
inline int literal_precedence(const std::string& text) {
    if (text.find(" + ") != std::string::npos || text.find(" - ") != std::string::npos) return prec_add;
    if (text.find_first_of("*/^") != std::string::npos) return prec_mul;
    if (!text.empty() && text[0] == '-') return prec_unary;
    return prec_atom;
}

inline int op_precedence(Op op) {
    switch (op) {
    case Op::add:
    case Op::sub: return prec_add;
    case Op::mul:
    case Op::div: return prec_mul;
    case Op::neg: return prec_unary;
    default: return prec_atom;
    }
}

inline std::pair<std::string, int> render(const Expr& e) {
    if (const auto* l = e.as_literal()) {
        std::string s = l->value.to_string();
        return {s, literal_precedence(s)};
    }
    if (const auto* s = e.as_symbol()) return {s->name, prec_atom};
    const Apply& a = *e.as_apply();
    auto operand = [](const Expr& c, int min) {
        auto [text, p] = render(c);
        return p < min ? "(" + text + ")" : text;
    };
    int p = op_precedence(a.op);
    switch (a.op) {
    case Op::add: return {operand(a.args[0], p) + " + " + operand(a.args[1], p + 1), p};
    case Op::sub: return {operand(a.args[0], p) + " - " + operand(a.args[1], p + 1), p};
    case Op::mul: return {operand(a.args[0], p) + "*" + operand(a.args[1], p + 1), p};
    case Op::div: return {operand(a.args[0], p) + "/" + operand(a.args[1], p + 1), p};
    case Op::neg: return {"-" + operand(a.args[0], prec_atom), p};
    default: {
        auto [text, _] = render(a.args[0]);
        return {std::string(op_symbol(a.op)) + "(" + text + ")", prec_atom};
    }
    }
}

} // namespace detail

inline std::string print_expr(const Expr& e) { return detail::render(e).first; }

} // namespace ca
