/*
 * Lowering of structures, carriers and expression trees into abstract
 * object-oriented classes, and their emission in a Pascal-like notation:
 *
 *   Ring = Object(Module)
 *     operation * (A,B : Ring) : Ring;
 *     ...
 *   end; { Ring }
 *
 * A class without a parent is written "Name = Object;", one with several
 * parents "Name = Object(A, B)". Output is
 * deterministic: classes in input order, two-space indentation, LF endings.
 *
 * An expression tree becomes one class per Apply node, numbered in post-order
 * (x_n1, x_n2, ...) with the root named after the binding. Each node class
 * derives from its carrier class, holds fields referencing its operands, and
 * a function Eval whose body applies the node's single operator to them.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ca/expr.hpp"
#include "ca/parser.hpp"
#include "ca/structures.hpp"
#include "ca/value.hpp"

namespace ca {

enum class MemberKind { operation, function, constant };

/// Body of a built-in member; nothing is emitted for it.
struct Primitive {
    friend bool operator==(const Primitive&, const Primitive&) = default;
};

struct Member {
    MemberKind kind;
    /// Everything after the member keyword, e.g. "+ (A,B : Module) : Module".
    std::string signature;
    std::variant<Primitive, Expr, Value> body;
    /// Member name used for uniqueness and lookup.
    std::string name;
};

struct Field {
    std::string name;
    std::string type;
};

struct OOClass {
    std::string name;
    std::vector<std::string> parents;
    std::vector<Field> fields;
    std::vector<Member> members;

    const Member* find_member(std::string_view n) const {
        for (const auto& m : members)
            if (m.name == n) return &m;
        return nullptr;
    }
    const Field* find_field(std::string_view n) const {
        for (const auto& f : fields)
            if (f.name == n) return &f;
        return nullptr;
    }
};

namespace detail {

inline Member signature_member(Op op, const std::string& operand, const std::string& result) {
    std::string sym(op_symbol(op));
    if (is_function_op(op))
        return {MemberKind::function, sym + "(A : " + operand + ") : " + result, Primitive{}, sym};
    std::string params = op_arity(op) == 2 ? "(A,B : " + operand + ")" : "(A : " + operand + ")";
    std::string key = op == Op::neg ? "-/1" : sym;
    return {MemberKind::operation, sym + " " + params + " : " + result, Primitive{}, key};
}

/// Text of a single-operator Eval body over field/const names.
inline std::string eval_text(const Expr& e) {
    const Apply* a = e.as_apply();
    if (!a) {
        if (const auto* s = e.as_symbol()) return s->name;
        return e.as_literal()->value.to_string();
    }
    std::vector<std::string> ops;
    for (const auto& c : a->args) ops.push_back(eval_text(c));
    if (is_function_op(a->op)) return std::string(op_symbol(a->op)) + "(" + ops[0] + ")";
    if (a->op == Op::neg) return "-" + ops[0];
    return ops[0] + " " + std::string(op_symbol(a->op)) + " " + ops[1];
}

inline bool inline_literal(const Value& v) {
    const auto* n = v.get_if<Integer>();
    return n && *n >= 0;
}

} // namespace detail

/// A structure whose own signature restates everything it inherits is
/// self-contained and lowered as a root class.
inline bool restates_parents(const StructureKind& kind, const Registry& reg) {
    if (kind.parents.empty()) return true;
    for (const auto& p : kind.parents) {
        for (const auto& op : reg.effective_ops(p))
            if (std::none_of(kind.required_ops.begin(), kind.required_ops.end(),
                             [&](const auto& o) { return o.key() == op.key(); }))
                return false;
        for (const auto& c : reg.effective_consts(p))
            if (std::none_of(kind.required_consts.begin(), kind.required_consts.end(),
                             [&](const auto& o) { return o.name == c.name; }))
                return false;
    }
    return true;
}

inline OOClass lower_structure(const StructureKind& kind, const Registry& reg = builtin_registry()) {
    OOClass cls{kind.name, {}, {}, {}};
    if (!restates_parents(kind, reg)) cls.parents = kind.parents;
    for (const auto& op : kind.required_ops)
        cls.members.push_back(detail::signature_member(op.op, op.operand_structure, op.result_structure));
    for (const auto& c : kind.required_consts)
        cls.members.push_back({MemberKind::constant, c.name + " : " + c.structure, Primitive{}, c.name});
    return cls;
}

inline OOClass lower_concrete(const TypeTag& tag) {
    std::string name = tag.to_string();
    OOClass cls{name, {satisfied_structures(tag).front()}, {}, {}};
    switch (tag.carrier()) {
    case Carrier::integer:
        cls.fields = {{"Negative", "Boolean"}, {"Magnitude", "array of Digit"}};
        break;
    case Carrier::rational: cls.fields = {{"num", "Integer"}, {"den", "Integer"}}; break;
    case Carrier::complex: cls.fields = {{"re", "Rational"}, {"im", "Rational"}}; break;
    case Carrier::quaternion: cls.fields = {{"Data", "array [0..3] of Number"}}; break;
    case Carrier::polynomial: cls.fields = {{"Coeff", "array of " + tag.parameter().to_string()}}; break;
    case Carrier::matrix: {
        std::string last = std::to_string(tag.dimension() - 1);
        cls.fields = {{"Data", "array [0.." + last + ", 0.." + last + "] of " + tag.parameter().to_string()}};
        break;
    }
    case Carrier::unknown: throw LookupError("cannot lower an untyped carrier");
    }
    if (satisfies(tag, "Algebra")) {
        std::string number = tag.carrier() == Carrier::quaternion ? "Number" : tag.parameter().to_string();
        cls.members.push_back({MemberKind::function, "Norm : " + number, Primitive{}, "Norm"});
        cls.members.push_back({MemberKind::function, "Conj : " + name, Primitive{}, "Conj"});
    }
    for (Op op : {Op::add, Op::sub, Op::neg, Op::mul, Op::div, Op::inversion})
        cls.members.push_back(detail::signature_member(op, name, name));
    cls.members.push_back({MemberKind::constant, "Zero : " + name, zero_of(tag), "Zero"});
    cls.members.push_back({MemberKind::constant, "Unit : " + name, unit_of(tag), "Unit"});
    return cls;
}

namespace detail {

class ExprLowering {
public:
    explicit ExprLowering(std::string root) : root_(std::move(root)) {}

    std::vector<OOClass> run(const Expr& e) {
        if (e.is_apply()) {
            lower(e, true);
        } else {
            OOClass cls{root_, {e.tag().to_string()}, {}, {}};
            Expr leaf = operand(e, cls, false);
            cls.members.push_back({MemberKind::function, "Eval : " + e.tag().to_string(), leaf, "Eval"});
            out_.push_back(std::move(cls));
        }
        return std::move(out_);
    }

private:
    std::string lower(const Expr& e, bool is_root) {
        const Apply& a = *e.as_apply();
        OOClass cls{"", {e.tag().to_string()}, {}, {}};
        std::vector<Expr> leaves;
        for (const auto& c : a.args) leaves.push_back(operand(c, cls));
        cls.name = is_root ? root_ : root_ + "_n" + std::to_string(++counter_);
        cls.members.push_back(
            {MemberKind::function, "Eval : " + e.tag().to_string(), Expr::apply(a.op, leaves, e.tag()), "Eval"});
        out_.push_back(std::move(cls));
        return out_.back().name;
    }

    /// Leaf standing for `c` inside the Eval body of `cls`. Non-negative
    /// integers are written inline, other literals become const members.
    Expr operand(const Expr& c, OOClass& cls, bool allow_inline = true) {
        if (c.is_apply()) {
            std::string ref = lower(c, false);
            add_field(cls, ref, ref);
            return Expr::symbol(ref, c.tag());
        }
        if (const auto* s = c.as_symbol()) {
            add_field(cls, s->name, c.tag().to_string());
            return c;
        }
        const Value& v = c.as_literal()->value;
        if (allow_inline && inline_literal(v)) return c;
        std::size_t k = 1;
        for (const auto& m : cls.members)
            if (m.kind == MemberKind::constant) ++k;
        std::string name = "c" + std::to_string(k);
        cls.members.push_back({MemberKind::constant, name + " : " + c.tag().to_string(), v, name});
        return Expr::symbol(name, c.tag());
    }

    static void add_field(OOClass& cls, const std::string& name, const std::string& type) {
        if (!cls.find_field(name)) cls.fields.push_back({name, type});
    }

    std::string root_;
    std::size_t counter_ = 0;
    std::vector<OOClass> out_;
};

} // namespace detail

inline std::vector<OOClass> lower_expr(std::string_view name, const Expr& e) {
    return detail::ExprLowering(std::string(name)).run(e);
}

/// Abstract classes for every structure in the registry, in registry order.
inline std::vector<OOClass> lower_library(const Registry& reg = builtin_registry()) {
    std::vector<OOClass> out;
    for (const auto& k : reg.kinds()) out.push_back(lower_structure(k, reg));
    return out;
}

/// Library classes, then one class per carrier used by a declaration (first
/// use order), then the lowered bindings in binding order.
inline std::vector<OOClass> lower_program(const Environment& env) {
    std::vector<OOClass> out = lower_library();
    std::vector<TypeTag> carriers;
    for (const auto& name : env.declaration_order()) {
        const TypeTag& t = *env.declared(name);
        if (std::find(carriers.begin(), carriers.end(), t) == carriers.end()) carriers.push_back(t);
    }
    for (const auto& t : carriers) out.push_back(lower_concrete(t));
    for (const auto& name : env.binding_order()) {
        auto cls = lower_expr(name, *env.binding(name));
        out.insert(out.end(), cls.begin(), cls.end());
    }
    return out;
}

inline std::string emit(std::span<const OOClass> classes) {
    std::string out;
    for (const auto& cls : classes) {
        if (cls.parents.empty()) {
            out += cls.name + " = Object;\n";
        } else {
            out += cls.name + " = Object(";
            for (std::size_t k = 0; k < cls.parents.size(); ++k) out += (k ? ", " : "") + cls.parents[k];
            out += ")\n";
        }
        for (const auto& f : cls.fields) out += "  " + f.name + " : " + f.type + ";\n";
        for (const auto& m : cls.members) {
            std::string_view keyword = m.kind == MemberKind::operation
                                           ? "operation"
                                           : (m.kind == MemberKind::function ? "function" : "const");
            out += "  " + std::string(keyword) + " " + m.signature;
            if (const auto* e = std::get_if<Expr>(&m.body)) out += " = " + detail::eval_text(*e);
            else if (const auto* v = std::get_if<Value>(&m.body)) out += " = " + v->to_string();
            out += ";\n";
        }
        out += "end; { " + cls.name + " }\n";
    }
    return out;
}

inline std::string emit(const std::vector<OOClass>& classes) { return emit(std::span<const OOClass>(classes)); }

/// Reassembles the expression lowered into `classes` under `root` by
/// re-parsing every Eval body and following the operand references.
inline Expr rebuild_expr(std::span<const OOClass> classes, std::string_view root) {
    auto find = [&](std::string_view n) -> const OOClass* {
        for (const auto& c : classes)
            if (c.name == n) return &c;
        return nullptr;
    };
    const OOClass* cls = find(root);
    if (!cls) throw LookupError("no class named " + std::string(root));
    const Member* eval = cls->find_member("Eval");
    if (!eval || !std::holds_alternative<Expr>(eval->body)) throw LookupError(cls->name + " has no Eval body");
    TypeTag tag = parse_type(eval->signature.substr(eval->signature.find(':') + 1));

    auto leaf = [&](const Expr& skel) -> Expr {
        const auto* s = skel.as_symbol();
        if (!s) return skel;
        if (find(s->name) && s->name != root) return rebuild_expr(classes, s->name);
        if (const Member* m = cls->find_member(s->name); m && m->kind == MemberKind::constant)
            return Expr::literal(std::get<Value>(m->body));
        if (const Field* f = cls->find_field(s->name)) return Expr::symbol(s->name, parse_type(f->type));
        throw LookupError(cls->name + " refers to unknown " + s->name);
    };

    Expr body = parse_expr(detail::eval_text(std::get<Expr>(eval->body)));
    const Apply* a = body.as_apply();
    if (!a) return leaf(body);
    std::vector<Expr> args;
    for (const auto& c : a->args) args.push_back(leaf(c));
    return Expr::apply(a->op, std::move(args), tag);
}

inline Expr rebuild_expr(const std::vector<OOClass>& classes, std::string_view root) {
    return rebuild_expr(std::span<const OOClass>(classes), root);
}

} // namespace ca
