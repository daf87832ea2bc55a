#pragma once

#include <string>

#include "ca/detail/terms.hpp"
#include "ca/rational.hpp"

namespace ca {

/// Gaussian rational re + im*i.
class ComplexQ {
public:
    ComplexQ() = default;
    ComplexQ(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {} // NOLINT

    static ComplexQ i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }

    ComplexQ conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    ComplexQ inverse() const {
        if (is_zero()) throw NotInvertible("0 is not invertible");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    ComplexQ operator-() const { return {-re_, -im_}; }

    friend bool operator==(const ComplexQ& a, const ComplexQ& b) noexcept { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// "a + b*i" with zero parts omitted.
    std::string to_string() const { return detail::render_terms({{re_, ""}, {im_, "i"}}); }

private:
    Rational re_;
    Rational im_;
};

} // namespace ca
