#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ca/rational.hpp"

namespace ca::detail {

/// Renders c0*u0 + c1*u1 + ... with zero terms dropped, unit coefficients
/// elided ("i" rather than "1*i") and negative terms joined with " - ".
/// An empty unit marks the scalar term. Returns "0" when every term is zero.
inline std::string render_terms(const std::vector<std::pair<Rational, std::string_view>>& terms) {
    std::string out;
    for (const auto& [coeff, unit] : terms) {
        if (coeff.is_zero()) continue;
        bool negative = coeff.sign() < 0;
        Rational mag = coeff.abs();
        std::string body;
        if (unit.empty()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = std::string(unit);
        } else {
            body = mag.to_string() + "*" + std::string(unit);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace ca::detail
