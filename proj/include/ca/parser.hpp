/*
 * Recursive-descent parser for the small CA language:
 *
 *   program   = { statement } ;
 *   statement = ident ":" type ";" | ident ":=" expr ";" | expr ";" ;
 *   type      = ident [ "(" type { "," (type | int) } ")" ] ;
 *   expr      = term { ("+" | "-") term } ;
 *   term      = unary { ("*" | "/") unary } ;
 *   unary     = [ "-" ] atom ;
 *   atom      = int | ident | "(" expr ")" | func "(" expr ")" ;
 *   func      = "Inversion" | "Norm" | "Conj" ;
 *
 * Expressions come out as untyped skeletons; elaborate() assigns the tags.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ca/errors.hpp"
#include "ca/expr.hpp"
#include "ca/lexer.hpp"
#include "ca/type_tag.hpp"

namespace ca {

struct TypeExpr {
    std::string name;
    /// Nested types or integer parameters.
    std::vector<std::variant<TypeExpr, Integer>> args;
    SourcePos pos;
};

struct Declaration {
    std::string name;
    TypeExpr type;
};

struct Binding {
    std::string name;
    Expr expr;
};

struct ExprStatement {
    Expr expr;
};

struct Statement {
    std::variant<Declaration, Binding, ExprStatement> body;
    SourcePos pos;
};

/// Maximum nesting of parentheses and unary operators.
inline constexpr std::size_t max_parse_depth = 256;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens, SourcePos end = {}) : toks_(std::move(tokens)), end_(end) {
        if (!toks_.empty()) {
            end_ = toks_.back().pos;
            end_.column += toks_.back().text.size();
        }
    }

    bool at_end() const { return n_ >= toks_.size(); }

    std::vector<Statement> program() {
        std::vector<Statement> out;
        while (!at_end()) out.push_back(statement());
        return out;
    }

    Statement statement() {
        SourcePos start = here();
        if (peek_kind(TokenKind::identifier) && n_ + 1 < toks_.size()) {
            const Token& next = toks_[n_ + 1];
            if (next.text == ":" && next.kind == TokenKind::punct) {
                std::string name = toks_[n_].text;
                n_ += 2;
                TypeExpr t = type();
                expect(";");
                return {Declaration{std::move(name), std::move(t)}, start};
            }
            if (next.text == ":=") {
                std::string name = toks_[n_].text;
                n_ += 2;
                Expr e = expr();
                expect(";");
                return {Binding{std::move(name), std::move(e)}, start};
            }
        }
        Expr e = expr();
        expect(";");
        return {ExprStatement{std::move(e)}, start};
    }

    TypeExpr type() {
        if (!peek_kind(TokenKind::identifier)) fail("expected a type name");
        TypeExpr t{toks_[n_].text, {}, toks_[n_].pos};
        ++n_;
        if (accept("(")) {
            t.args.emplace_back(type());
            while (accept(",")) {
                if (peek_kind(TokenKind::integer)) {
                    t.args.emplace_back(parse_decimal(toks_[n_].text));
                    ++n_;
                } else {
                    t.args.emplace_back(type());
                }
            }
            expect(")");
        }
        return t;
    }

    Expr expr() {
        Expr lhs = term();
        while (peek_op("+") || peek_op("-")) {
            Op op = toks_[n_++].text == "+" ? Op::add : Op::sub;
            lhs = Expr::apply(op, {lhs, term()});
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (peek_op("*") || peek_op("/")) {
            Op op = toks_[n_++].text == "*" ? Op::mul : Op::div;
            lhs = Expr::apply(op, {lhs, unary()});
        }
        return lhs;
    }

    Expr unary() {
        if (peek_op("-")) {
            ++n_;
            return Expr::apply(Op::neg, {atom()});
        }
        return atom();
    }

    Expr atom() {
        if (at_end()) fail("expected an expression");
        const Token& t = toks_[n_];
        switch (t.kind) {
        case TokenKind::integer: ++n_; return Expr::literal(parse_decimal(t.text));
        case TokenKind::identifier: ++n_; return Expr::symbol(t.text);
        case TokenKind::keyword: {
            ++n_;
            Op op = t.text == "Inversion" ? Op::inversion : (t.text == "Norm" ? Op::norm : Op::conj);
            expect("(");
            Expr inner = nested();
            expect(")");
            return Expr::apply(op, {inner});
        }
        default: break;
        }
        if (t.text == "(") {
            ++n_;
            Expr inner = nested();
            expect(")");
            return inner;
        }
        fail("expected an expression");
    }

    void expect(std::string_view text) {
        if (!accept(text)) fail("expected '" + std::string(text) + "'");
    }

    /// Requires the input to be exhausted, allowing one trailing ";".
    void finish() {
        accept(";");
        if (!at_end()) fail("unexpected trailing input");
    }

private:
    Expr nested() {
        if (++depth_ > max_parse_depth) fail("expression nested too deeply");
        Expr e = expr();
        --depth_;
        return e;
    }

    bool accept(std::string_view text) {
        if (!at_end() && toks_[n_].text == text && toks_[n_].kind != TokenKind::identifier) {
            ++n_;
            return true;
        }
        return false;
    }
    bool peek_op(std::string_view text) const {
        return !at_end() && toks_[n_].kind == TokenKind::op && toks_[n_].text == text;
    }
    bool peek_kind(TokenKind k) const { return !at_end() && toks_[n_].kind == k; }
    SourcePos here() const { return at_end() ? end_ : toks_[n_].pos; }

    [[noreturn]] void fail(const std::string& what) const {
        std::string found = at_end() ? "end of input" : "'" + toks_[n_].text + "'";
        throw SyntaxError(what + ", found " + found, here());
    }

    std::vector<Token> toks_;
    std::size_t n_ = 0;
    std::size_t depth_ = 0;
    SourcePos end_;
};

/// Parses a single expression covering all of `tokens`.
inline Expr parse_expr(std::vector<Token> tokens) {
    Parser p(std::move(tokens));
    Expr e = p.expr();
    p.finish();
    return e;
}

inline Expr parse_expr(std::string_view source, SourcePos start = {}) { return parse_expr(tokenize(source, start)); }

inline std::vector<Statement> parse_program(std::string_view source, SourcePos start = {}) {
    return Parser(tokenize(source, start)).program();
}

/// Resolves a parsed type expression to a TypeTag.
inline TypeTag resolve_type(const TypeExpr& t) {
    auto fail = [&](const std::string& msg) -> TypeError {
        TypeError e(msg);
        e.set_position(t.pos);
        return e;
    };
    auto nested = [&](std::size_t k) -> TypeTag {
        if (const auto* inner = std::get_if<TypeExpr>(&t.args[k])) return resolve_type(*inner);
        throw fail("argument " + std::to_string(k + 1) + " of " + t.name + " must be a type");
    };
    auto arity = [&](std::size_t n) {
        if (t.args.size() != n) throw fail(t.name + " takes " + std::to_string(n) + " argument(s)");
    };
    try {
        if (t.name == "Integer") return arity(0), TypeTag::integer();
        if (t.name == "Rational") return arity(0), TypeTag::rational();
        if (t.name == "ComplexQ") return arity(0), TypeTag::complex();
        if (t.name == "Quaternion") return arity(0), TypeTag::quaternion();
        if (t.name == "Polynomial") return arity(1), TypeTag::polynomial(nested(0));
        if (t.name == "Matrix") {
            arity(2);
            const auto* n = std::get_if<Integer>(&t.args[1]);
            if (!n || *n < 1 || *n > 64) throw fail("Matrix dimension must be an integer in 1..64");
            return TypeTag::matrix(nested(0), n->convert_to<std::size_t>());
        }
    } catch (Error& e) {
        if (!e.position()) e.set_position(t.pos);
        throw;
    }
    throw fail("unknown type " + t.name);
}

inline TypeTag parse_type(std::string_view source) {
    Parser p(tokenize(source));
    TypeExpr t = p.type();
    p.finish();
    return resolve_type(t);
}

} // namespace ca
