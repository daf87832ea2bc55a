#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ca/errors.hpp"

namespace ca {

enum class TokenKind { identifier, integer, op, punct, keyword };

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;

    friend bool operator==(const Token&, const Token&) = default;
};

/// Names of the built-in unary functions; they cannot be used as identifiers.
inline bool is_keyword(std::string_view s) { return s == "Inversion" || s == "Norm" || s == "Conj"; }

/// Longest-match tokenizer. Whitespace and "--" comments are skipped.
/// `start` positions the first character (the REPL offsets meta-commands).
inline std::vector<Token> tokenize(std::string_view src, SourcePos start = {}) {
    std::vector<Token> out;
    SourcePos pos = start;
    std::size_t n = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++n) {
            if (src[n] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (n < src.size()) {
        char c = src[n];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '-' && n + 1 < src.size() && src[n + 1] == '-') {
            while (n < src.size() && src[n] != '\n') advance(1);
            continue;
        }
        SourcePos at = pos;
        std::size_t len = 0;
        TokenKind kind;
        if (is_alpha(c)) {
            while (n + len < src.size() && (is_alpha(src[n + len]) || is_digit(src[n + len]) || src[n + len] == '_')) ++len;
            kind = is_keyword(src.substr(n, len)) ? TokenKind::keyword : TokenKind::identifier;
        } else if (is_digit(c)) {
            while (n + len < src.size() && is_digit(src[n + len])) ++len;
            kind = TokenKind::integer;
        } else if (c == ':' && n + 1 < src.size() && src[n + 1] == '=') {
            len = 2;
            kind = TokenKind::op;
        } else if (c == '+' || c == '-' || c == '*' || c == '/') {
            len = 1;
            kind = TokenKind::op;
        } else if (c == '(' || c == ')' || c == ';' || c == ',' || c == ':') {
            len = 1;
            kind = TokenKind::punct;
        } else {
            std::string shown = static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f
                                    ? "byte 0x" + [&] {
                                          const char* hex = "0123456789abcdef";
                                          auto u = static_cast<unsigned char>(c);
                                          return std::string{hex[u >> 4], hex[u & 15]};
                                      }()
                                    : "'" + std::string(1, c) + "'";
            throw LexicalError("illegal character " + shown, at);
        }
        out.push_back({kind, std::string(src.substr(n, len)), at});
        advance(len);
    }
    return out;
}

} // namespace ca
