/*
 * Error types shared by every layer of the kernel.
 *
 * All failures are reported by exception. Each error carries a kind (used to
 * label diagnostics) and an optional 1-based source position that the parser
 * or the session attaches once it is known.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ca {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class Error : public std::runtime_error {
public:
    enum class Kind { lexical, syntax, type, lookup, not_invertible };

    Error(Kind kind, const std::string& message, std::optional<SourcePos> pos = std::nullopt)
        : std::runtime_error(message), kind_(kind), pos_(pos) {}

    Kind kind() const noexcept { return kind_; }
    const std::optional<SourcePos>& position() const noexcept { return pos_; }
    void set_position(SourcePos pos) { pos_ = pos; }

    std::string_view kind_name() const noexcept {
        switch (kind_) {
        case Kind::lexical: return "lexical error";
        case Kind::syntax: return "syntax error";
        case Kind::type: return "type error";
        case Kind::lookup: return "lookup error";
        case Kind::not_invertible: return "not invertible";
        }
        return "error";
    }

private:
    Kind kind_;
    std::optional<SourcePos> pos_;
};

class LexicalError : public Error {
public:
    LexicalError(const std::string& msg, SourcePos pos) : Error(Kind::lexical, msg, pos) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, SourcePos pos) : Error(Kind::syntax, msg, pos) {}
};

class TypeError : public Error {
public:
    explicit TypeError(const std::string& msg) : Error(Kind::type, msg) {}
};

class LookupError : public Error {
public:
    explicit LookupError(const std::string& msg) : Error(Kind::lookup, msg) {}
};

/// Raised by Inversion (and therefore "/") on zero or non-unit operands.
class NotInvertible : public Error {
public:
    explicit NotInvertible(const std::string& msg) : Error(Kind::not_invertible, msg) {}
};

} // namespace ca
