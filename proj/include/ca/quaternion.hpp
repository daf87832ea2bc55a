/*
 * Quaternions over the rationals, a0 + a1*i + a2*j + a3*k.
 *
 * Multiplication is the Hamilton product (i*j = k, j*k = i, k*i = j,
 * i^2 = j^2 = k^2 = -1). The norm is the reduced norm, the sum of the squares
 * of the four components, which stays rational and is multiplicative.
 */
#pragma once

#include <array>
#include <string>

#include "ca/detail/terms.hpp"
#include "ca/rational.hpp"

namespace ca {

class Quaternion {
public:
    using Data = std::array<Rational, 4>;

    Quaternion() = default;
    explicit Quaternion(Data data) : data_(std::move(data)) {}
    Quaternion(Rational a0, Rational a1, Rational a2, Rational a3)
        : data_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static Quaternion scalar(Rational r) { return {std::move(r), 0, 0, 0}; }
    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    const Data& data() const noexcept { return data_; }
    const Rational& operator[](std::size_t n) const { return data_[n]; }

    bool is_zero() const noexcept {
        return data_[0].is_zero() && data_[1].is_zero() && data_[2].is_zero() && data_[3].is_zero();
    }
    bool is_one() const noexcept {
        return data_[0].is_one() && data_[1].is_zero() && data_[2].is_zero() && data_[3].is_zero();
    }

    Quaternion conj() const { return {data_[0], -data_[1], -data_[2], -data_[3]}; }

    Rational norm() const {
        return data_[0] * data_[0] + data_[1] * data_[1] + data_[2] * data_[2] + data_[3] * data_[3];
    }

    Quaternion inverse() const {
        if (is_zero()) throw NotInvertible("0 is not invertible");
        Rational s = norm().inverse();
        Quaternion c = conj();
        return {c[0] * s, c[1] * s, c[2] * s, c[3] * s};
    }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
    }
    Quaternion operator-() const { return {-data_[0], -data_[1], -data_[2], -data_[3]}; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) noexcept { return a.data_ == b.data_; }

    std::string to_string() const {
        return detail::render_terms({{data_[0], ""}, {data_[1], "i"}, {data_[2], "j"}, {data_[3], "k"}});
    }

private:
    Data data_{};
};

} // namespace ca
