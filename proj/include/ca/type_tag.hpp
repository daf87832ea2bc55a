/*
 * Algebraic type tags and the coercion lattice between carriers.
 *
 * A TypeTag names a concrete carrier, possibly parameterized: Polynomial(T)
 * over a scalar coefficient carrier and Matrix(T, n) over a scalar entry
 * carrier. The default-constructed tag is "unknown" and only appears in the
 * untyped skeletons produced by the parser.
 *
 * Coercions: Integer -> Rational -> ComplexQ, Integer/Rational -> Quaternion,
 * and any scalar into Polynomial/Matrix as a constant / scalar-diagonal.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "ca/errors.hpp"

namespace ca {

enum class Carrier { unknown, integer, rational, complex, quaternion, polynomial, matrix };

class TypeTag {
public:
    TypeTag() = default;

    static TypeTag integer() { return TypeTag(Carrier::integer); }
    static TypeTag rational() { return TypeTag(Carrier::rational); }
    static TypeTag complex() { return TypeTag(Carrier::complex); }
    static TypeTag quaternion() { return TypeTag(Carrier::quaternion); }

    /// Coefficients must be a commutative scalar carrier (Integer, Rational, ComplexQ).
    static TypeTag polynomial(const TypeTag& coeff) {
        if (!coeff.is_scalar()) throw TypeError("Polynomial coefficients must be Integer, Rational or ComplexQ, not " + coeff.to_string());
        TypeTag t(Carrier::polynomial);
        t.param_ = std::make_shared<const TypeTag>(coeff);
        return t;
    }

    static TypeTag matrix(const TypeTag& entry, std::size_t n) {
        if (!entry.is_scalar()) throw TypeError("Matrix entries must be Integer, Rational or ComplexQ, not " + entry.to_string());
        if (n < 1) throw TypeError("Matrix dimension must be at least 1");
        TypeTag t(Carrier::matrix);
        t.param_ = std::make_shared<const TypeTag>(entry);
        t.n_ = n;
        return t;
    }

    Carrier carrier() const noexcept { return carrier_; }
    bool is_known() const noexcept { return carrier_ != Carrier::unknown; }
    bool is_scalar() const noexcept {
        return carrier_ == Carrier::integer || carrier_ == Carrier::rational || carrier_ == Carrier::complex;
    }

    /// Coefficient / entry tag of a Polynomial or Matrix tag.
    const TypeTag& parameter() const {
        if (!param_) throw TypeError(to_string() + " has no parameter");
        return *param_;
    }
    std::size_t dimension() const noexcept { return n_; }

    friend bool operator==(const TypeTag& a, const TypeTag& b) {
        if (a.carrier_ != b.carrier_ || a.n_ != b.n_) return false;
        if (a.param_ == b.param_) return true;
        if (!a.param_ || !b.param_) return false;
        return *a.param_ == *b.param_;
    }

    std::string to_string() const {
        switch (carrier_) {
        case Carrier::unknown: return "?";
        case Carrier::integer: return "Integer";
        case Carrier::rational: return "Rational";
        case Carrier::complex: return "ComplexQ";
        case Carrier::quaternion: return "Quaternion";
        case Carrier::polynomial: return "Polynomial(" + param_->to_string() + ")";
        case Carrier::matrix: return "Matrix(" + param_->to_string() + ", " + std::to_string(n_) + ")";
        }
        return "?";
    }

private:
    explicit TypeTag(Carrier c) : carrier_(c) {}

    Carrier carrier_ = Carrier::unknown;
    std::shared_ptr<const TypeTag> param_;
    std::size_t n_ = 0;
};

namespace detail {

inline int scalar_rank(Carrier c) {
    switch (c) {
    case Carrier::integer: return 0;
    case Carrier::rational: return 1;
    case Carrier::complex: return 2;
    default: return -1;
    }
}

} // namespace detail

/// True when values of `from` embed canonically into `to` (reflexive).
inline bool coercible(const TypeTag& from, const TypeTag& to) {
    if (!from.is_known() || !to.is_known()) return false;
    if (from == to) return true;
    if (from.is_scalar() && to.is_scalar())
        return detail::scalar_rank(from.carrier()) <= detail::scalar_rank(to.carrier());
    switch (to.carrier()) {
    case Carrier::quaternion:
        return from.carrier() == Carrier::integer || from.carrier() == Carrier::rational;
    case Carrier::polynomial:
        if (from.carrier() == Carrier::polynomial) return coercible(from.parameter(), to.parameter());
        return from.is_scalar() && coercible(from, to.parameter());
    case Carrier::matrix:
        if (from.carrier() == Carrier::matrix)
            return from.dimension() == to.dimension() && coercible(from.parameter(), to.parameter());
        return from.is_scalar() && coercible(from, to.parameter());
    default:
        return false;
    }
}

/// Least common carrier both tags coerce into, if any.
inline std::optional<TypeTag> common_tag(const TypeTag& a, const TypeTag& b) {
    if (coercible(a, b)) return b;
    if (coercible(b, a)) return a;
    auto lift = [](const TypeTag& wrapper, const TypeTag& scalar_part) -> std::optional<TypeTag> {
        auto inner = common_tag(wrapper.parameter(), scalar_part);
        if (!inner || !inner->is_scalar()) return std::nullopt;
        if (wrapper.carrier() == Carrier::polynomial) return TypeTag::polynomial(*inner);
        return TypeTag::matrix(*inner, wrapper.dimension());
    };
    Carrier ca_ = a.carrier(), cb = b.carrier();
    if (ca_ == Carrier::polynomial && cb == Carrier::polynomial) return lift(a, b.parameter());
    if (ca_ == Carrier::matrix && cb == Carrier::matrix && a.dimension() == b.dimension()) return lift(a, b.parameter());
    if ((ca_ == Carrier::polynomial || ca_ == Carrier::matrix) && b.is_scalar()) return lift(a, b);
    if ((cb == Carrier::polynomial || cb == Carrier::matrix) && a.is_scalar()) return lift(b, a);
    return std::nullopt;
}

} // namespace ca
