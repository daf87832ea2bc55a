/*
 * Exact rational numbers over arbitrary-precision integers.
 *
 * Canonical form is maintained after every operation: the denominator is
 * positive, numerator and denominator are coprime, and zero is 0/1.
 */
#pragma once

#include <string>
#include <utility>

#include "ca/errors.hpp"
#include "ca/integer.hpp"

namespace ca {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(Integer n) : num_(std::move(n)), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw NotInvertible("rational with zero denominator");
        normalize();
    }

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational inverse() const {
        if (is_zero()) throw NotInvertible("0 is not invertible");
        return {den_, num_};
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "p/q", or "p" when q = 1.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Integer num_;
    Integer den_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace ca
