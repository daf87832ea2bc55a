/*
 * Structure laws as equation schemas, checked by exact sampling.
 *
 * A schema is a pair of expression templates over the schematic variables
 * a, b, c (declared at the carrier under test); Zero and Unit appear as
 * literals of that carrier. check_laws instantiates a schema over tuples of
 * sample values and compares both sides with exact equality.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ca/expr.hpp"
#include "ca/structures.hpp"
#include "ca/value.hpp"

namespace ca {

struct EquationSchema {
    Expr lhs;
    Expr rhs;
    /// Schematic variables in tuple order.
    std::vector<std::string> variables;
    /// Tuples containing a zero are skipped (mul_inverse).
    bool requires_nonzero = false;
};

inline EquationSchema equation_schema(LawId law, const TypeTag& tag) {
    Expr a = Expr::symbol("a", tag), b = Expr::symbol("b", tag), c = Expr::symbol("c", tag);
    Expr zero = Expr::literal(zero_of(tag)), unit = Expr::literal(unit_of(tag));
    auto op = [](Op o, std::vector<Expr> args) { return make_apply(o, std::move(args)); };
    switch (law) {
    case LawId::assoc_add:
        return {op(Op::add, {op(Op::add, {a, b}), c}), op(Op::add, {a, op(Op::add, {b, c})}), {"a", "b", "c"}};
    case LawId::comm_add: return {op(Op::add, {a, b}), op(Op::add, {b, a}), {"a", "b"}};
    case LawId::add_identity: return {op(Op::add, {a, zero}), a, {"a"}};
    case LawId::add_inverse: return {op(Op::add, {a, op(Op::neg, {a})}), zero, {"a"}};
    case LawId::assoc_mul:
        return {op(Op::mul, {op(Op::mul, {a, b}), c}), op(Op::mul, {a, op(Op::mul, {b, c})}), {"a", "b", "c"}};
    case LawId::mul_identity: return {op(Op::mul, {a, unit}), a, {"a"}};
    case LawId::distrib_left:
        return {op(Op::mul, {a, op(Op::add, {b, c})}), op(Op::add, {op(Op::mul, {a, b}), op(Op::mul, {a, c})}),
                {"a", "b", "c"}};
    case LawId::distrib_right:
        return {op(Op::mul, {op(Op::add, {a, b}), c}), op(Op::add, {op(Op::mul, {a, c}), op(Op::mul, {b, c})}),
                {"a", "b", "c"}};
    case LawId::comm_mul: return {op(Op::mul, {a, b}), op(Op::mul, {b, a}), {"a", "b"}};
    case LawId::mul_inverse: return {op(Op::mul, {a, op(Op::inversion, {a})}), unit, {"a"}, true};
    case LawId::norm_multiplicative:
        return {op(Op::norm, {op(Op::mul, {a, b})}), op(Op::mul, {op(Op::norm, {a}), op(Op::norm, {b})}), {"a", "b"}};
    }
    throw LookupError("unknown law");
}

struct Counterexample {
    std::vector<std::pair<std::string, Value>> assignment;
    Value lhs;
    Value rhs;
};

struct LawReport {
    LawId law;
    std::size_t tuples_checked = 0;
    std::optional<Counterexample> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Above this many tuples the samples are paired cyclically instead:
/// (s[i], s[i+1], s[i+2]) for every i, wrapping around.
inline constexpr std::size_t exhaustive_tuple_limit = 10'000;

/// Checks `law` for `tag` on tuples drawn from `samples`: every tuple when
/// there are few enough, otherwise one cyclic window per sample.
/// Laws the carrier does not claim may be checked too (to exhibit a
/// counterexample); a schema using an operation the carrier lacks is a type error.
inline LawReport check_laws(const TypeTag& tag, std::span<const Value> samples, LawId law) {
    for (const auto& s : samples)
        if (!(s.tag() == tag)) throw TypeError("sample " + s.to_string() + " is not " + tag.to_string());

    EquationSchema schema = equation_schema(law, tag);
    LawReport report{law, 0, std::nullopt};
    const std::size_t m = samples.size(), k = schema.variables.size();
    if (m == 0) return report;

    double total = std::pow(static_cast<double>(m), static_cast<double>(k));
    bool exhaustive = total <= static_cast<double>(exhaustive_tuple_limit);
    std::size_t count = exhaustive ? static_cast<std::size_t>(total) : m;

    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < count; ++t) {
        if (exhaustive) {
            std::size_t rest = t;
            for (std::size_t v = k; v-- > 0;) {
                idx[v] = rest % m;
                rest /= m;
            }
        } else {
            for (std::size_t v = 0; v < k; ++v) idx[v] = (t + v) % m;
        }
        bool skip = false;
        Environment env;
        std::vector<std::pair<std::string, Value>> assignment;
        for (std::size_t v = 0; v < k; ++v) {
            const Value& s = samples[idx[v]];
            if (schema.requires_nonzero && s.is_zero()) skip = true;
            env.declare(schema.variables[v], tag);
            env.bind(schema.variables[v], Expr::literal(s));
            assignment.emplace_back(schema.variables[v], s);
        }
        if (skip) continue;
        Value lhs = evaluate(schema.lhs, env).as_literal()->value;
        Value rhs = evaluate(schema.rhs, env).as_literal()->value;
        ++report.tuples_checked;
        if (!(lhs == rhs)) {
            report.counterexample = Counterexample{std::move(assignment), std::move(lhs), std::move(rhs)};
            return report;
        }
    }
    return report;
}

/// Every law of every structure the carrier claims, in canonical law order.
inline std::vector<LawId> claimed_laws(const TypeTag& tag, const Registry& reg = builtin_registry()) {
    std::vector<LawId> out;
    for (LawId law : all_laws) {
        auto owner = reg.law_owner(law);
        if (owner && satisfies(tag, *owner, reg)) out.push_back(law);
    }
    return out;
}

/// Draws a random value with small components: integers in [-9, 9] and
/// rationals with numerator and denominator in [-9, 9].
inline Value random_value(const TypeTag& tag, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-9, 9);
    auto rational = [&] {
        int d = 0;
        while (d == 0) d = small(rng);
        return Rational(Integer(small(rng)), Integer(d));
    };
    switch (tag.carrier()) {
    case Carrier::integer: return Integer(small(rng));
    case Carrier::rational: return rational();
    case Carrier::complex: return ComplexQ(rational(), rational());
    case Carrier::quaternion: return Quaternion(rational(), rational(), rational(), rational());
    case Carrier::polynomial: {
        std::uniform_int_distribution<int> deg(0, 3);
        std::vector<Value> cs;
        for (int n = deg(rng); n >= 0; --n) cs.push_back(random_value(tag.parameter(), rng));
        return Polynomial(tag.parameter(), std::move(cs));
    }
    case Carrier::matrix: {
        std::vector<Value> es;
        for (std::size_t n = 0; n < tag.dimension() * tag.dimension(); ++n) es.push_back(random_value(tag.parameter(), rng));
        return Matrix(tag.parameter(), tag.dimension(), std::move(es));
    }
    case Carrier::unknown: break;
    }
    throw TypeError("cannot sample an untyped value");
}

inline std::vector<Value> random_samples(const TypeTag& tag, std::size_t count, std::mt19937_64& rng) {
    std::vector<Value> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(random_value(tag, rng));
    return out;
}

inline constexpr std::size_t default_law_samples = 200;

/// Runs every claimed law on `count` seeded samples.
inline std::vector<LawReport> run_law_suite(const TypeTag& tag, std::uint64_t seed,
                                            std::size_t count = default_law_samples) {
    std::mt19937_64 rng(seed);
    std::vector<Value> samples = random_samples(tag, count, rng);
    std::vector<LawReport> out;
    for (LawId law : claimed_laws(tag)) out.push_back(check_laws(tag, samples, law));
    return out;
}

} // namespace ca
