/*
 * Expression trees whose leaves may be values, free symbols, or applied
 * operators with partially unknown arguments.
 *
 * An Expr is one of three mutually substitutable variants:
 *   Literal    : a bound concrete value,
 *   FreeSymbol : a variable of known type whose value is unknown,
 *   Apply      : an operator node holding its argument subtrees.
 * Each node carries the TypeTag the type checker assigns it. Any variant of a
 * given tag may stand wherever that tag is expected.
 *
 * Expr is an immutable handle; subtrees are shared freely.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ca/errors.hpp"
#include "ca/ops.hpp"
#include "ca/structures.hpp"
#include "ca/type_tag.hpp"
#include "ca/value.hpp"

namespace ca {

class Expr;

struct Literal {
    Value value;
};

struct FreeSymbol {
    std::string name;
};

struct Apply {
    Op op;
    std::vector<Expr> args;
};

class Expr {
public:
    using Node = std::variant<Literal, FreeSymbol, Apply>;

    Expr() : Expr(Literal{Value()}, TypeTag::integer()) {}

    static Expr literal(Value v) {
        TypeTag t = v.tag();
        return Expr(Literal{std::move(v)}, std::move(t));
    }
    /// A symbol with an unknown tag is an untyped skeleton leaf.
    static Expr symbol(std::string name, TypeTag tag = TypeTag()) {
        return Expr(FreeSymbol{std::move(name)}, std::move(tag));
    }
    /// Builds an Apply node with an explicit tag; see make_apply() for the typed builder.
    static Expr apply(Op op, std::vector<Expr> args, TypeTag tag = TypeTag()) {
        if (args.size() != static_cast<std::size_t>(op_arity(op)))
            throw TypeError(std::string(op_symbol(op)) + " expects " + std::to_string(op_arity(op)) +
                            " operand(s), got " + std::to_string(args.size()));
        return Expr(Apply{op, std::move(args)}, std::move(tag));
    }

    const Node& node() const noexcept { return impl_->node; }
    const TypeTag& tag() const noexcept { return impl_->tag; }

    bool is_literal() const noexcept { return std::holds_alternative<Literal>(node()); }
    bool is_symbol() const noexcept { return std::holds_alternative<FreeSymbol>(node()); }
    bool is_apply() const noexcept { return std::holds_alternative<Apply>(node()); }

    const Literal* as_literal() const noexcept { return std::get_if<Literal>(&node()); }
    const FreeSymbol* as_symbol() const noexcept { return std::get_if<FreeSymbol>(&node()); }
    const Apply* as_apply() const noexcept { return std::get_if<Apply>(&node()); }

    /// Structural equality, tags included.
    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.impl_ == b.impl_) return true;
        if (!(a.tag() == b.tag()) || a.node().index() != b.node().index()) return false;
        if (auto* la = a.as_literal()) return la->value == b.as_literal()->value;
        if (auto* sa = a.as_symbol()) return sa->name == b.as_symbol()->name;
        const Apply& x = *a.as_apply();
        const Apply& y = *b.as_apply();
        return x.op == y.op && x.args == y.args;
    }

    /// Structural equality ignoring tags (skeleton comparison).
    friend bool same_shape(const Expr& a, const Expr& b) {
        if (a.node().index() != b.node().index()) return false;
        if (auto* la = a.as_literal()) return la->value == b.as_literal()->value;
        if (auto* sa = a.as_symbol()) return sa->name == b.as_symbol()->name;
        const Apply& x = *a.as_apply();
        const Apply& y = *b.as_apply();
        if (x.op != y.op || x.args.size() != y.args.size()) return false;
        for (std::size_t k = 0; k < x.args.size(); ++k)
            if (!same_shape(x.args[k], y.args[k])) return false;
        return true;
    }

private:
    struct Impl {
        Node node;
        TypeTag tag;
    };

    Expr(Node node, TypeTag tag) : impl_(std::make_shared<const Impl>(Impl{std::move(node), std::move(tag)})) {}

    std::shared_ptr<const Impl> impl_;
};

/// Names that denote the imaginary / quaternion units rather than variables.
inline bool is_reserved_name(std::string_view name) {
    return name == "i" || name == "j" || name == "k" || name == "Inversion" || name == "Norm" || name == "Conj";
}

/// Number of Apply nodes.
inline std::size_t apply_count(const Expr& e) {
    const Apply* a = e.as_apply();
    if (!a) return 0;
    std::size_t n = 1;
    for (const auto& c : a->args) n += apply_count(c);
    return n;
}

inline std::size_t depth(const Expr& e) {
    const Apply* a = e.as_apply();
    if (!a) return 1;
    std::size_t d = 0;
    for (const auto& c : a->args) d = std::max(d, depth(c));
    return d + 1;
}

inline void collect_free_symbols(const Expr& e, std::set<std::string>& out) {
    if (auto* s = e.as_symbol()) out.insert(s->name);
    else if (auto* a = e.as_apply())
        for (const auto& c : a->args) collect_free_symbols(c, out);
}

inline std::set<std::string> free_symbols(const Expr& e) {
    std::set<std::string> out;
    collect_free_symbols(e, out);
    return out;
}

/// Result tag of `op` applied to operands of the given tags. When `expected`
/// is given and the natural result coerces into it, the node is widened to it.
inline TypeTag result_tag(Op op, const std::vector<TypeTag>& args, const std::optional<TypeTag>& expected = std::nullopt) {
    for (const auto& t : args)
        if (!t.is_known()) throw TypeError(std::string("operand of ") + std::string(op_symbol(op)) + " is untyped");
    TypeTag natural;
    if (op == Op::norm) {
        const TypeTag& t = args.at(0);
        if (!satisfies(t, "Algebra")) throw TypeError("Norm requires an Algebra, " + t.to_string() + " is not one");
        natural = t.carrier() == Carrier::quaternion ? TypeTag::rational() : t.parameter();
    } else {
        natural = args.at(0);
        for (std::size_t k = 1; k < args.size(); ++k) {
            auto c = common_tag(natural, args[k]);
            if (!c)
                throw TypeError("no common type for " + natural.to_string() + " and " + args[k].to_string() +
                                " in '" + std::string(op_symbol(op)) + "'");
            natural = *c;
        }
        std::string_view owner = op_owner(op);
        if (!satisfies(natural, owner))
            throw TypeError(std::string(op_symbol(op)) + " requires " + std::string(owner) + ", " +
                            natural.to_string() + " is not one");
    }
    if (expected && expected->is_known() && !(natural == *expected) && coercible(natural, *expected)) {
        if (op == Op::norm || op == Op::conj || satisfies(*expected, op_owner(op))) return *expected;
    }
    return natural;
}

/// Typed Apply builder: checks arity and operand compatibility.
inline Expr make_apply(Op op, std::vector<Expr> args, const std::optional<TypeTag>& expected = std::nullopt) {
    if (args.size() != static_cast<std::size_t>(op_arity(op)))
        throw TypeError(std::string(op_symbol(op)) + " expects " + std::to_string(op_arity(op)) + " operand(s)");
    std::vector<TypeTag> tags;
    for (const auto& a : args) tags.push_back(a.tag());
    TypeTag t = result_tag(op, tags, expected);
    return Expr::apply(op, std::move(args), std::move(t));
}

/// Declarations and bindings. Binding expressions must be typed, compatible
/// with the declared tag, and the uses-graph among bindings stays acyclic.
class Environment {
public:
    void declare(const std::string& name, const TypeTag& tag) {
        if (is_reserved_name(name)) throw TypeError("'" + name + "' is reserved");
        if (!tag.is_known()) throw TypeError("cannot declare " + name + " without a type");
        if (decls_.count(name)) throw TypeError(name + " is already declared as " + decls_.at(name).to_string());
        decls_.emplace(name, tag);
        decl_order_.push_back(name);
    }

    /// Undeclared names are declared with the expression's tag. Re-binding
    /// replaces the previous expression.
    void bind(const std::string& name, const Expr& e) {
        if (is_reserved_name(name)) throw TypeError("'" + name + "' is reserved");
        if (!e.tag().is_known()) throw TypeError("binding for " + name + " is untyped");
        auto d = decls_.find(name);
        if (d != decls_.end() && !coercible(e.tag(), d->second))
            throw TypeError("cannot bind " + e.tag().to_string() + " to " + name + " : " + d->second.to_string());
        for (const auto& s : free_symbols(e))
            if (!decls_.count(s) && s != name) throw LookupError("undeclared symbol " + s);
        if (reaches(e, name)) throw TypeError("binding " + name + " would be cyclic");
        if (d == decls_.end()) {
            decls_.emplace(name, e.tag());
            decl_order_.push_back(name);
        }
        if (!bindings_.count(name)) order_.push_back(name);
        bindings_.insert_or_assign(name, e);
    }

    /// Copy with one extra binding.
    Environment with(const std::string& name, const Expr& e) const {
        Environment env = *this;
        env.bind(name, e);
        return env;
    }

    const TypeTag* declared(std::string_view name) const {
        auto it = decls_.find(std::string(name));
        return it == decls_.end() ? nullptr : &it->second;
    }
    const Expr* binding(std::string_view name) const {
        auto it = bindings_.find(std::string(name));
        return it == bindings_.end() ? nullptr : &it->second;
    }
    bool is_bound(std::string_view name) const { return bindings_.count(std::string(name)) != 0; }

    std::set<std::string> bound_names() const {
        std::set<std::string> out;
        for (const auto& [n, _] : bindings_) out.insert(n);
        return out;
    }

    const std::map<std::string, TypeTag>& declarations() const noexcept { return decls_; }
    const std::map<std::string, Expr>& bindings() const noexcept { return bindings_; }
    /// Declared names in order of declaration.
    const std::vector<std::string>& declaration_order() const noexcept { return decl_order_; }
    /// Bound names in order of first binding.
    const std::vector<std::string>& binding_order() const noexcept { return order_; }

    /// Re-validates every invariant; used after batches of mutations.
    bool consistent() const {
        for (const auto& [name, e] : bindings_) {
            auto d = decls_.find(name);
            if (d == decls_.end() || !coercible(e.tag(), d->second)) return false;
            for (const auto& s : free_symbols(e))
                if (!decls_.count(s)) return false;
            if (reaches(e, name)) return false;
        }
        return true;
    }

private:
    /// Whether `e` mentions `target` directly or through bindings.
    bool reaches(const Expr& e, const std::string& target) const {
        std::vector<std::string> stack;
        for (const auto& s : free_symbols(e)) stack.push_back(s);
        std::set<std::string> seen;
        while (!stack.empty()) {
            std::string s = stack.back();
            stack.pop_back();
            if (s == target) return true;
            if (!seen.insert(s).second) continue;
            auto b = bindings_.find(s);
            if (b != bindings_.end())
                for (const auto& t : free_symbols(b->second)) stack.push_back(t);
        }
        return false;
    }

    std::map<std::string, TypeTag> decls_;
    std::map<std::string, Expr> bindings_;
    std::vector<std::string> order_;
    std::vector<std::string> decl_order_;
};

namespace detail {

/// Thrown when `i` cannot be resolved from the context; the elaborator
/// retries with a hint taken from sibling operands.
class AmbiguousUnit : public TypeError {
public:
    explicit AmbiguousUnit(const std::string& name)
        : TypeError("'" + name + "' is ambiguous here; declare the expected type") {}
};

inline Expr resolve_unit(const std::string& name, const std::optional<TypeTag>& hint) {
    auto base = [](const TypeTag& t) -> Carrier {
        if (t.carrier() == Carrier::polynomial || t.carrier() == Carrier::matrix) return t.parameter().carrier();
        return t.carrier();
    };
    Carrier c = hint && hint->is_known() ? base(*hint) : Carrier::unknown;
    if (name == "i" && c == Carrier::complex) return Expr::literal(ComplexQ::i());
    if (c == Carrier::quaternion || name != "i") {
        if (name == "i") return Expr::literal(Quaternion::unit_i());
        if (name == "j") return Expr::literal(Quaternion::unit_j());
        return Expr::literal(Quaternion::unit_k());
    }
    throw AmbiguousUnit(name);
}

inline Expr elaborate(const Expr& e, const Environment& env, const std::optional<TypeTag>& expected);

inline Expr elaborate_apply(const Apply& a, const Environment& env, const std::optional<TypeTag>& expected) {
    std::optional<TypeTag> hint = a.op == Op::norm ? std::nullopt : expected;
    std::vector<std::optional<Expr>> done(a.args.size());
    bool retry = false;
    for (std::size_t k = 0; k < a.args.size(); ++k) {
        try {
            done[k] = elaborate(a.args[k], env, hint);
        } catch (const AmbiguousUnit&) {
            retry = true;
        }
    }
    if (retry) {
        std::optional<TypeTag> sibling = hint;
        for (const auto& d : done) {
            if (!d) continue;
            if (!sibling) sibling = d->tag();
            else if (auto c = common_tag(*sibling, d->tag())) sibling = *c;
        }
        if (!sibling) {
            for (std::size_t k = 0; k < a.args.size(); ++k) elaborate(a.args[k], env, hint); // rethrows
        }
        for (std::size_t k = 0; k < a.args.size(); ++k)
            if (!done[k]) done[k] = elaborate(a.args[k], env, sibling);
    }
    // An operand node narrower than its siblings is re-elaborated at their
    // common type, so 1/2 next to a Rational divides in Rational.
    if (a.op != Op::norm && done.size() == 2) {
        if (auto common = common_tag(done[0]->tag(), done[1]->tag())) {
            for (std::size_t k = 0; k < 2; ++k)
                if (done[k]->is_apply() && !(done[k]->tag() == *common))
                    done[k] = elaborate(a.args[k], env, *common);
        }
    }
    std::vector<Expr> args;
    for (auto& d : done) args.push_back(std::move(*d));
    return make_apply(a.op, std::move(args), expected);
}

inline Expr elaborate(const Expr& e, const Environment& env, const std::optional<TypeTag>& expected) {
    if (e.is_literal()) return e;
    if (const auto* s = e.as_symbol()) {
        if (s->name == "i" || s->name == "j" || s->name == "k") return resolve_unit(s->name, expected);
        const TypeTag* d = env.declared(s->name);
        if (!d) throw LookupError("undeclared symbol " + s->name);
        if (e.tag().is_known() && !(e.tag() == *d))
            throw TypeError(s->name + " is declared " + d->to_string() + ", not " + e.tag().to_string());
        return Expr::symbol(s->name, *d);
    }
    return elaborate_apply(*e.as_apply(), env, expected);
}

} // namespace detail

/// Fills in the tags of an untyped skeleton (or re-checks a typed tree).
/// `expected` resolves the units i/j/k and widens operator nodes whose
/// natural type coerces into it; a bare literal is coerced to it. Operand
/// nodes are widened to the common type of their siblings the same way.
inline Expr elaborate(const Expr& e, const Environment& env, const std::optional<TypeTag>& expected = std::nullopt) {
    Expr out = detail::elaborate(e, env, expected);
    if (const auto* l = out.as_literal(); l && expected && coercible(out.tag(), *expected))
        return Expr::literal(coerce(l->value, *expected));
    return out;
}

inline TypeTag infer_type(const Expr& e, const Environment& env, const std::optional<TypeTag>& expected = std::nullopt) {
    return elaborate(e, env, expected).tag();
}

namespace detail {

inline Expr rebuild(const Expr& e, std::vector<Expr> args) {
    const Apply& a = *e.as_apply();
    return make_apply(a.op, std::move(args), e.tag());
}

/// Inserts `r` where a symbol of tag `slot` was; literals are coerced.
inline Expr fit(const Expr& r, const TypeTag& slot, std::string_view name) {
    if (!slot.is_known()) return r;
    if (!coercible(r.tag(), slot))
        throw TypeError("cannot replace " + std::string(name) + " : " + slot.to_string() + " by " + r.tag().to_string());
    if (const auto* l = r.as_literal()) return Expr::literal(coerce(l->value, slot));
    return r;
}

} // namespace detail

/// Replaces every FreeSymbol `name` by `r`; untouched subtrees are shared.
inline Expr substitute(const Expr& e, std::string_view name, const Expr& r) {
    if (const auto* s = e.as_symbol()) return s->name == name ? detail::fit(r, e.tag(), name) : e;
    const Apply* a = e.as_apply();
    if (!a) return e;
    std::vector<Expr> args;
    bool changed = false;
    for (const auto& c : a->args) {
        args.push_back(substitute(c, name, r));
        changed = changed || !(args.back() == c);
    }
    if (!changed) return e;
    if (!e.tag().is_known()) return Expr::apply(a->op, std::move(args));
    return detail::rebuild(e, std::move(args));
}

/// Computes one operator on literal operands at the node's tag.
inline Value fold(Op op, const std::vector<Value>& operands, const TypeTag& node_tag) {
    if (op == Op::norm) return coerce(norm(operands[0]), node_tag);
    std::vector<Value> v;
    for (const auto& o : operands) v.push_back(coerce(o, node_tag));
    switch (op) {
    case Op::add: return add(v[0], v[1]);
    case Op::sub: return sub(v[0], v[1]);
    case Op::neg: return neg(v[0]);
    case Op::mul: return mul(v[0], v[1]);
    case Op::div: return divide(v[0], v[1]);
    case Op::inversion: return inversion(v[0]);
    case Op::conj: return conj(v[0]);
    case Op::norm: break;
    }
    throw TypeError("cannot fold operator");
}

namespace detail {

class Evaluator {
public:
    explicit Evaluator(const Environment& env) : env_(env) {}

    Expr run(const Expr& e) {
        if (e.is_literal()) return e;
        if (const auto* s = e.as_symbol()) {
            const Expr* b = env_.binding(s->name);
            if (!b) return e;
            auto it = memo_.find(s->name);
            if (it == memo_.end()) it = memo_.emplace(s->name, run(*b)).first;
            return fit(it->second, e.tag(), s->name);
        }
        const Apply& a = *e.as_apply();
        std::vector<Expr> args;
        bool all_literal = true;
        for (const auto& c : a.args) {
            args.push_back(run(c));
            all_literal = all_literal && args.back().is_literal();
        }
        Expr node = rebuild(e, args);
        if (!all_literal) return node;
        std::vector<Value> vals;
        for (const auto& c : args) vals.push_back(c.as_literal()->value);
        return Expr::literal(fold(a.op, vals, node.tag()));
    }

private:
    const Environment& env_;
    std::map<std::string, Expr> memo_;
};

} // namespace detail

/// Partial evaluation: bound symbols are replaced by their (evaluated)
/// bindings and every all-literal Apply is folded, post-order, left to right.
/// Unbound symbols remain. Folding errors (NotInvertible) propagate.
inline Expr evaluate(const Expr& e, const Environment& env) { return detail::Evaluator(env).run(e); }

namespace detail {

inline bool is_zero_literal(const Expr& e) { return e.is_literal() && e.as_literal()->value.is_zero(); }
inline bool is_one_literal(const Expr& e) { return e.is_literal() && e.as_literal()->value.is_one(); }

/// `t` standing in for a node of tag `node_tag`, if that keeps the tag.
inline std::optional<Expr> keep(const Expr& t, const TypeTag& node_tag) {
    if (t.tag() == node_tag) return t;
    if (const auto* l = t.as_literal()) return Expr::literal(coerce(l->value, node_tag));
    return std::nullopt;
}

/// One rewrite at the root of `e` (children already simplified).
inline std::optional<Expr> rewrite_once(const Expr& e) {
    const Apply* a = e.as_apply();
    if (!a) return std::nullopt;
    const TypeTag& t = e.tag();
    const auto& x = a->args;
    bool all_literal = std::all_of(x.begin(), x.end(), [](const Expr& c) { return c.is_literal(); });
    if (all_literal) { // R6
        try {
            std::vector<Value> vals;
            for (const auto& c : x) vals.push_back(c.as_literal()->value);
            return Expr::literal(fold(a->op, vals, t));
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    switch (a->op) {
    case Op::add: // R1
        if (is_zero_literal(x[1])) return keep(x[0], t);
        if (is_zero_literal(x[0])) return keep(x[1], t);
        break;
    case Op::mul: // R3, then R2
        if (is_zero_literal(x[0]) || is_zero_literal(x[1])) return Expr::literal(zero_of(t));
        if (is_one_literal(x[1])) return keep(x[0], t);
        if (is_one_literal(x[0])) return keep(x[1], t);
        break;
    case Op::neg: // R4
        if (const Apply* inner = x[0].as_apply(); inner && inner->op == Op::neg) return keep(inner->args[0], t);
        break;
    case Op::sub: // R5
        if (x[0] == x[1]) return Expr::literal(zero_of(t));
        break;
    case Op::div: // R7
        if (is_one_literal(x[1])) return keep(x[0], t);
        break;
    default: break;
    }
    return std::nullopt;
}

inline Expr simplify_node(const Expr& e) {
    const Apply* a = e.as_apply();
    if (!a) return e;
    std::vector<Expr> args;
    bool changed = false;
    for (const auto& c : a->args) {
        args.push_back(simplify_node(c));
        changed = changed || !(args.back() == c);
    }
    Expr cur = changed ? Expr::apply(a->op, std::move(args), e.tag()) : e;
    while (auto next = rewrite_once(cur)) cur = *next;
    return cur;
}

} // namespace detail

/// Bottom-up fixpoint of the identity rules
///   t+0, 0+t -> t;  t*1, 1*t -> t;  t*0, 0*t -> 0;  -(-t) -> t;
///   t-t -> 0;  all-literal folding;  t/1 -> t.
/// Never raises: nodes whose folding fails are left in place.
inline Expr simplify(const Expr& e) {
    Expr cur = detail::simplify_node(e);
    for (;;) {
        Expr next = detail::simplify_node(cur);
        if (next == cur) return cur;
        cur = next;
    }
}

} // namespace ca
