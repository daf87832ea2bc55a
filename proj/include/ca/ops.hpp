#pragma once

#include <string_view>

namespace ca {

/// Operators of the structure signatures. `sub` is binary minus, `neg` unary.
enum class Op { add, sub, neg, mul, div, inversion, norm, conj };

inline constexpr Op all_ops[] = {Op::add, Op::sub, Op::neg, Op::mul, Op::div, Op::inversion, Op::norm, Op::conj};

constexpr std::string_view op_symbol(Op op) {
    switch (op) {
    case Op::add: return "+";
    case Op::sub: return "-";
    case Op::neg: return "-";
    case Op::mul: return "*";
    case Op::div: return "/";
    case Op::inversion: return "Inversion";
    case Op::norm: return "Norm";
    case Op::conj: return "Conj";
    }
    return "?";
}

constexpr int op_arity(Op op) {
    switch (op) {
    case Op::neg:
    case Op::inversion:
    case Op::norm:
    case Op::conj: return 1;
    default: return 2;
    }
}

/// Named unary functions are written in call syntax: Inversion(a).
constexpr bool is_function_op(Op op) { return op == Op::inversion || op == Op::norm || op == Op::conj; }

} // namespace ca
