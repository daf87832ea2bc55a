/*
 * Exact concrete values and their arithmetic.
 *
 * Value is a closed sum over the data-carrying carriers: Integer, Rational,
 * ComplexQ, Quaternion, Polynomial and Matrix. Polynomials and matrices hold
 * Values of a scalar coefficient/entry carrier, so the carriers nest.
 *
 * Every binary operation requires both operands to carry the same TypeTag;
 * callers coerce first (see coerce()). Division is a * inversion(b) for every
 * carrier, and inversion raises NotInvertible on zero and non-unit operands.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ca/complex.hpp"
#include "ca/errors.hpp"
#include "ca/integer.hpp"
#include "ca/quaternion.hpp"
#include "ca/rational.hpp"
#include "ca/type_tag.hpp"

namespace ca {

class Value;

/// Dense univariate polynomial, ascending coefficients. Zero is the empty list.
class Polynomial {
public:
    explicit Polynomial(TypeTag coeff_tag) : coeff_tag_(std::move(coeff_tag)) {}
    Polynomial(TypeTag coeff_tag, std::vector<Value> coeffs);

    const TypeTag& coeff_tag() const noexcept { return coeff_tag_; }
    const std::vector<Value>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

private:
    TypeTag coeff_tag_;
    std::vector<Value> coeffs_;
};

/// Square n x n matrix, row-major.
class Matrix {
public:
    Matrix(TypeTag entry_tag, std::size_t n, std::vector<Value> entries);

    static Matrix identity(const TypeTag& entry_tag, std::size_t n);
    static Matrix zero(const TypeTag& entry_tag, std::size_t n);

    const TypeTag& entry_tag() const noexcept { return entry_tag_; }
    std::size_t size() const noexcept { return n_; }
    const Value& at(std::size_t row, std::size_t col) const;
    const std::vector<Value>& entries() const noexcept { return entries_; }

private:
    TypeTag entry_tag_;
    std::size_t n_;
    std::vector<Value> entries_;
};

class Value {
public:
    using Variant = std::variant<Integer, Rational, ComplexQ, Quaternion, Polynomial, Matrix>;

    Value() : data_(Integer(0)) {}
    Value(int v) : data_(Integer(v)) {}            // NOLINT(google-explicit-constructor)
    Value(Integer v) : data_(std::move(v)) {}      // NOLINT
    Value(Rational v) : data_(std::move(v)) {}     // NOLINT
    Value(ComplexQ v) : data_(std::move(v)) {}     // NOLINT
    Value(Quaternion v) : data_(std::move(v)) {}   // NOLINT
    Value(Polynomial v) : data_(std::move(v)) {}   // NOLINT
    Value(Matrix v) : data_(std::move(v)) {}       // NOLINT

    const Variant& data() const noexcept { return data_; }

    template <class T>
    const T* get_if() const noexcept {
        return std::get_if<T>(&data_);
    }
    template <class T>
    const T& as() const {
        if (const T* p = get_if<T>()) return *p;
        throw TypeError("value " + to_string() + " has unexpected type " + tag().to_string());
    }

    TypeTag tag() const;
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b);

private:
    Variant data_;
};

Value zero_of(const TypeTag& tag);
Value unit_of(const TypeTag& tag);
Value coerce(const Value& v, const TypeTag& to);

Value add(const Value& a, const Value& b);
Value sub(const Value& a, const Value& b);
Value neg(const Value& a);
Value mul(const Value& a, const Value& b);
Value inversion(const Value& a);
Value divide(const Value& a, const Value& b);
/// Reduced norm for Quaternion, determinant for Matrix.
Value norm(const Value& a);
/// Conjugate for Quaternion, transpose for Matrix.
Value conj(const Value& a);
Value det(const Matrix& m);
Value poly_eval(const Polynomial& p, const Value& at);

// ---------------------------------------------------------------------------

inline Polynomial::Polynomial(TypeTag coeff_tag, std::vector<Value> coeffs)
    : coeff_tag_(std::move(coeff_tag)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (!(c.tag() == coeff_tag_))
            throw TypeError("polynomial coefficient " + c.to_string() + " is not " + coeff_tag_.to_string());
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

inline Matrix::Matrix(TypeTag entry_tag, std::size_t n, std::vector<Value> entries)
    : entry_tag_(std::move(entry_tag)), n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw TypeError("matrix dimension must be at least 1");
    if (entries_.size() != n_ * n_)
        throw TypeError("matrix of size " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) + " entries");
    for (const auto& e : entries_) {
        if (!(e.tag() == entry_tag_))
            throw TypeError("matrix entry " + e.to_string() + " is not " + entry_tag_.to_string());
    }
}

inline Matrix Matrix::identity(const TypeTag& entry_tag, std::size_t n) {
    std::vector<Value> e(n * n, zero_of(entry_tag));
    for (std::size_t k = 0; k < n; ++k) e[k * n + k] = unit_of(entry_tag);
    return {entry_tag, n, std::move(e)};
}

inline Matrix Matrix::zero(const TypeTag& entry_tag, std::size_t n) {
    return {entry_tag, n, std::vector<Value>(n * n, zero_of(entry_tag))};
}

inline const Value& Matrix::at(std::size_t row, std::size_t col) const { return entries_.at(row * n_ + col); }

namespace detail {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Wraps a polynomial coefficient in parentheses when it has several terms.
inline std::string coeff_text(const Value& c) {
    std::string s = c.to_string();
    if (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos) return "(" + s + ")";
    return s;
}

inline std::string render_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Value& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::string text = coeff_text(c);
        bool negative = !text.empty() && text[0] == '-';
        std::string mag = negative ? text.substr(1) : text;
        std::string body;
        if (mono.empty()) body = mag;
        else if (mag == "1") body = mono;
        else body = mag + "*" + mono;
        if (out.empty()) out = negative ? "-" + body : body;
        else out += (negative ? " - " : " + ") + body;
    }
    return out;
}

inline std::string render_matrix(const Matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c) out += ",";
            out += m.at(r, c).to_string();
        }
        out += "]";
    }
    return out + "]";
}

inline void require_same_tag(const Value& a, const Value& b, const char* op) {
    TypeTag ta = a.tag(), tb = b.tag();
    if (!(ta == tb))
        throw TypeError(std::string("operands of '") + op + "' differ in type: " + ta.to_string() + " vs " + tb.to_string());
}

inline Polynomial poly_combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<Value> out;
    out.reserve(n);
    Value z = zero_of(a.coeff_tag());
    for (std::size_t k = 0; k < n; ++k) {
        const Value& x = k < a.coeffs().size() ? a.coeffs()[k] : z;
        const Value& y = k < b.coeffs().size() ? b.coeffs()[k] : z;
        out.push_back(subtract ? sub(x, y) : add(x, y));
    }
    return {a.coeff_tag(), std::move(out)};
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.coeff_tag());
    std::vector<Value> out(a.coeffs().size() + b.coeffs().size() - 1, zero_of(a.coeff_tag()));
    for (std::size_t p = 0; p < a.coeffs().size(); ++p)
        for (std::size_t q = 0; q < b.coeffs().size(); ++q)
            out[p + q] = add(out[p + q], mul(a.coeffs()[p], b.coeffs()[q]));
    return {a.coeff_tag(), std::move(out)};
}

inline Matrix matrix_combine(const Matrix& a, const Matrix& b, bool subtract) {
    std::vector<Value> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        out.push_back(subtract ? sub(a.entries()[k], b.entries()[k]) : add(a.entries()[k], b.entries()[k]));
    return {a.entry_tag(), a.size(), std::move(out)};
}

inline Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    std::vector<Value> out(n * n, zero_of(a.entry_tag()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Value acc = zero_of(a.entry_tag());
            for (std::size_t k = 0; k < n; ++k) acc = add(acc, mul(a.at(r, k), b.at(k, c)));
            out[r * n + c] = std::move(acc);
        }
    return {a.entry_tag(), n, std::move(out)};
}

inline bool is_field_scalar(const TypeTag& t) {
    return t.carrier() == Carrier::rational || t.carrier() == Carrier::complex;
}

/// Gauss-Jordan inverse over a field; throws NotInvertible when singular.
inline Matrix matrix_inverse(const Matrix& m) {
    if (!is_field_scalar(m.entry_tag()))
        throw NotInvertible("matrix inversion requires Field entries, not " + m.entry_tag().to_string());
    std::size_t n = m.size();
    std::vector<Value> a = m.entries();
    std::vector<Value> inv = Matrix::identity(m.entry_tag(), n).entries();
    auto at = [n](std::vector<Value>& v, std::size_t r, std::size_t c) -> Value& { return v[r * n + c]; };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && at(a, pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw NotInvertible("singular matrix " + render_matrix(m));
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(at(a, pivot, c), at(a, col, c));
                std::swap(at(inv, pivot, c), at(inv, col, c));
            }
        }
        Value scale = inversion(at(a, col, col));
        for (std::size_t c = 0; c < n; ++c) {
            at(a, col, c) = mul(scale, at(a, col, c));
            at(inv, col, c) = mul(scale, at(inv, col, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || at(a, r, col).is_zero()) continue;
            Value f = at(a, r, col);
            for (std::size_t c = 0; c < n; ++c) {
                at(a, r, c) = sub(at(a, r, c), mul(f, at(a, col, c)));
                at(inv, r, c) = sub(at(inv, r, c), mul(f, at(inv, col, c)));
            }
        }
    }
    return {m.entry_tag(), n, std::move(inv)};
}

} // namespace detail

inline TypeTag Value::tag() const {
    return std::visit(detail::overloaded{
                          [](const Integer&) { return TypeTag::integer(); },
                          [](const Rational&) { return TypeTag::rational(); },
                          [](const ComplexQ&) { return TypeTag::complex(); },
                          [](const Quaternion&) { return TypeTag::quaternion(); },
                          [](const Polynomial& p) { return TypeTag::polynomial(p.coeff_tag()); },
                          [](const Matrix& m) { return TypeTag::matrix(m.entry_tag(), m.size()); },
                      },
                      data_);
}

inline bool Value::is_zero() const {
    return std::visit(detail::overloaded{
                          [](const Integer& v) { return v == 0; },
                          [](const Rational& v) { return v.is_zero(); },
                          [](const ComplexQ& v) { return v.is_zero(); },
                          [](const Quaternion& v) { return v.is_zero(); },
                          [](const Polynomial& p) { return p.is_zero(); },
                          [](const Matrix& m) {
                              for (const auto& e : m.entries())
                                  if (!e.is_zero()) return false;
                              return true;
                          },
                      },
                      data_);
}

inline bool Value::is_one() const { return *this == unit_of(tag()); }

inline std::string Value::to_string() const {
    return std::visit(detail::overloaded{
                          [](const Integer& v) { return v.str(); },
                          [](const Rational& v) { return v.to_string(); },
                          [](const ComplexQ& v) { return v.to_string(); },
                          [](const Quaternion& v) { return v.to_string(); },
                          [](const Polynomial& p) { return detail::render_polynomial(p); },
                          [](const Matrix& m) { return detail::render_matrix(m); },
                      },
                      data_);
}

inline bool operator==(const Value& a, const Value& b) {
    if (a.data_.index() != b.data_.index()) return false;
    return std::visit(detail::overloaded{
                          [&](const Polynomial& p) {
                              const auto& q = std::get<Polynomial>(b.data_);
                              return p.coeff_tag() == q.coeff_tag() && p.coeffs() == q.coeffs();
                          },
                          [&](const Matrix& m) {
                              const auto& o = std::get<Matrix>(b.data_);
                              return m.entry_tag() == o.entry_tag() && m.size() == o.size() &&
                                     m.entries() == o.entries();
                          },
                          [&](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(b.data_); },
                      },
                      a.data_);
}

inline Value zero_of(const TypeTag& tag) {
    switch (tag.carrier()) {
    case Carrier::integer: return Integer(0);
    case Carrier::rational: return Rational();
    case Carrier::complex: return ComplexQ();
    case Carrier::quaternion: return Quaternion();
    case Carrier::polynomial: return Polynomial(tag.parameter());
    case Carrier::matrix: return Matrix::zero(tag.parameter(), tag.dimension());
    case Carrier::unknown: break;
    }
    throw TypeError("no zero for untyped value");
}

inline Value unit_of(const TypeTag& tag) {
    switch (tag.carrier()) {
    case Carrier::integer: return Integer(1);
    case Carrier::rational: return Rational(1);
    case Carrier::complex: return ComplexQ(Rational(1));
    case Carrier::quaternion: return Quaternion::scalar(1);
    case Carrier::polynomial: return Polynomial(tag.parameter(), {unit_of(tag.parameter())});
    case Carrier::matrix: return Matrix::identity(tag.parameter(), tag.dimension());
    case Carrier::unknown: break;
    }
    throw TypeError("no unit for untyped value");
}

inline Value coerce(const Value& v, const TypeTag& to) {
    TypeTag from = v.tag();
    if (from == to) return v;
    if (!coercible(from, to)) throw TypeError("cannot coerce " + from.to_string() + " to " + to.to_string());
    auto as_rational = [&]() -> Rational {
        if (const auto* i = v.get_if<Integer>()) return Rational(*i);
        return v.as<Rational>();
    };
    switch (to.carrier()) {
    case Carrier::rational: return as_rational();
    case Carrier::complex: return ComplexQ(as_rational());
    case Carrier::quaternion: return Quaternion::scalar(as_rational());
    case Carrier::polynomial: {
        if (const auto* p = v.get_if<Polynomial>()) {
            std::vector<Value> cs;
            for (const auto& c : p->coeffs()) cs.push_back(coerce(c, to.parameter()));
            return Polynomial(to.parameter(), std::move(cs));
        }
        return Polynomial(to.parameter(), {coerce(v, to.parameter())});
    }
    case Carrier::matrix: {
        if (const auto* m = v.get_if<Matrix>()) {
            std::vector<Value> es;
            for (const auto& e : m->entries()) es.push_back(coerce(e, to.parameter()));
            return Matrix(to.parameter(), to.dimension(), std::move(es));
        }
        Value s = coerce(v, to.parameter());
        std::size_t n = to.dimension();
        std::vector<Value> es(n * n, zero_of(to.parameter()));
        for (std::size_t k = 0; k < n; ++k) es[k * n + k] = s;
        return Matrix(to.parameter(), n, std::move(es));
    }
    default: break;
    }
    throw TypeError("cannot coerce " + from.to_string() + " to " + to.to_string());
}

inline Value add(const Value& a, const Value& b) {
    detail::require_same_tag(a, b, "+");
    return std::visit(detail::overloaded{
                          [&](const Polynomial& p) -> Value {
                              return detail::poly_combine(p, b.as<Polynomial>(), false);
                          },
                          [&](const Matrix& m) -> Value {
                              return detail::matrix_combine(m, b.as<Matrix>(), false);
                          },
                          [&](const auto& x) -> Value { return x + std::get<std::decay_t<decltype(x)>>(b.data()); },
                      },
                      a.data());
}

inline Value sub(const Value& a, const Value& b) {
    detail::require_same_tag(a, b, "-");
    return std::visit(detail::overloaded{
                          [&](const Polynomial& p) -> Value {
                              return detail::poly_combine(p, b.as<Polynomial>(), true);
                          },
                          [&](const Matrix& m) -> Value {
                              return detail::matrix_combine(m, b.as<Matrix>(), true);
                          },
                          [&](const auto& x) -> Value { return x - std::get<std::decay_t<decltype(x)>>(b.data()); },
                      },
                      a.data());
}

inline Value neg(const Value& a) { return sub(zero_of(a.tag()), a); }

inline Value mul(const Value& a, const Value& b) {
    detail::require_same_tag(a, b, "*");
    return std::visit(detail::overloaded{
                          [&](const Polynomial& p) -> Value { return detail::poly_mul(p, b.as<Polynomial>()); },
                          [&](const Matrix& m) -> Value { return detail::matrix_mul(m, b.as<Matrix>()); },
                          [&](const auto& x) -> Value { return x * std::get<std::decay_t<decltype(x)>>(b.data()); },
                      },
                      a.data());
}

inline Value inversion(const Value& a) {
    return std::visit(detail::overloaded{
                          [&](const Integer& v) -> Value {
                              if (v == 1 || v == -1) return v;
                              throw NotInvertible(v.str() + " is not invertible in Integer");
                          },
                          [&](const Polynomial& p) -> Value {
                              if (p.degree() != 0)
                                  throw NotInvertible(a.to_string() + " is not invertible in " + a.tag().to_string());
                              return Polynomial(p.coeff_tag(), {inversion(p.coeffs()[0])});
                          },
                          [&](const Matrix& m) -> Value { return detail::matrix_inverse(m); },
                          [&](const auto& x) -> Value { return x.inverse(); },
                      },
                      a.data());
}

inline Value divide(const Value& a, const Value& b) {
    detail::require_same_tag(a, b, "/");
    return mul(a, inversion(b));
}

inline Value det(const Matrix& m) {
    const TypeTag& et = m.entry_tag();
    if (et.carrier() == Carrier::integer) {
        // Lift to the rationals, eliminate, and come back down; the result is integral.
        Value d = det(coerce(Value(m), TypeTag::matrix(TypeTag::rational(), m.size())).as<Matrix>());
        return d.as<Rational>().num();
    }
    std::size_t n = m.size();
    std::vector<Value> a = m.entries();
    auto at = [&](std::size_t r, std::size_t c) -> Value& { return a[r * n + c]; };
    Value result = unit_of(et);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return zero_of(et);
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(col, c));
            result = neg(result);
        }
        result = mul(result, at(col, col));
        Value inv = inversion(at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (at(r, col).is_zero()) continue;
            Value f = mul(at(r, col), inv);
            for (std::size_t c = col; c < n; ++c) at(r, c) = sub(at(r, c), mul(f, at(col, c)));
        }
    }
    return result;
}

inline Value norm(const Value& a) {
    if (const auto* q = a.get_if<Quaternion>()) return q->norm();
    if (const auto* m = a.get_if<Matrix>()) return det(*m);
    throw TypeError("Norm is not defined for " + a.tag().to_string());
}

inline Value conj(const Value& a) {
    if (const auto* q = a.get_if<Quaternion>()) return q->conj();
    if (const auto* m = a.get_if<Matrix>()) {
        std::size_t n = m->size();
        std::vector<Value> t;
        t.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) t.push_back(m->at(c, r));
        return Matrix(m->entry_tag(), n, std::move(t));
    }
    throw TypeError("Conj is not defined for " + a.tag().to_string());
}

inline Value poly_eval(const Polynomial& p, const Value& at) {
    if (!(at.tag() == p.coeff_tag()))
        throw TypeError("cannot evaluate " + TypeTag::polynomial(p.coeff_tag()).to_string() + " at " +
                        at.tag().to_string());
    Value acc = zero_of(p.coeff_tag());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = add(mul(acc, at), *it);
    return acc;
}

} // namespace ca
