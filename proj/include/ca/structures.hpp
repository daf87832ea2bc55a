/*
 * The registry of abstract algebraic structures.
 *
 * Structures carry no data; they declare operator signatures, named constants
 * and the laws a carrier claiming them must obey. The built-in lattice is
 *
 *   Semigroup -> Group -> Module -> Ring -> DivisionRing -> Field
 *   Algebra with parents {Ring, Module}
 *
 * where Module is the additive abelian group (alias "AbelianGroup"). Ring keeps
 * "/" and Inversion in its signature as partial operations; DivisionRing
 * restates them as total on nonzero elements.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ca/errors.hpp"
#include "ca/ops.hpp"
#include "ca/type_tag.hpp"

namespace ca {

struct OperatorSignature {
    Op op;
    std::string operand_structure;
    std::string result_structure;

    std::string_view symbol() const { return op_symbol(op); }
    int arity() const { return op_arity(op); }

    /// Binary and unary minus share a symbol; the key tells them apart.
    std::pair<Op, int> key() const { return {op, arity()}; }
};

enum class ConstRole { zero, unit };

struct ConstRequirement {
    std::string name;
    ConstRole role;
    std::string structure;
};

enum class LawId {
    assoc_add,
    comm_add,
    add_identity,
    add_inverse,
    assoc_mul,
    mul_identity,
    distrib_left,
    distrib_right,
    comm_mul,
    mul_inverse,
    norm_multiplicative,
};

inline constexpr LawId all_laws[] = {
    LawId::assoc_add,    LawId::comm_add,      LawId::add_identity, LawId::add_inverse,
    LawId::assoc_mul,    LawId::mul_identity,  LawId::distrib_left, LawId::distrib_right,
    LawId::comm_mul,     LawId::mul_inverse,   LawId::norm_multiplicative,
};

constexpr std::string_view law_name(LawId law) {
    switch (law) {
    case LawId::assoc_add: return "assoc_add";
    case LawId::comm_add: return "comm_add";
    case LawId::add_identity: return "add_identity";
    case LawId::add_inverse: return "add_inverse";
    case LawId::assoc_mul: return "assoc_mul";
    case LawId::mul_identity: return "mul_identity";
    case LawId::distrib_left: return "distrib_left";
    case LawId::distrib_right: return "distrib_right";
    case LawId::comm_mul: return "comm_mul";
    case LawId::mul_inverse: return "mul_inverse";
    case LawId::norm_multiplicative: return "norm_multiplicative";
    }
    return "?";
}

struct StructureKind {
    std::string name;
    std::vector<std::string> parents;
    std::vector<OperatorSignature> required_ops;
    std::vector<ConstRequirement> required_consts;
    std::vector<LawId> laws;
    std::vector<std::string> aliases;
};

class Registry {
public:
    /// Validates unique names, known parents and an acyclic parent graph.
    explicit Registry(std::vector<StructureKind> kinds) : kinds_(std::move(kinds)) {
        for (std::size_t k = 0; k < kinds_.size(); ++k) {
            auto add_name = [&](const std::string& n) {
                if (!index_.emplace(n, k).second) throw TypeError("duplicate structure name " + n);
            };
            add_name(kinds_[k].name);
            for (const auto& a : kinds_[k].aliases) add_name(a);
        }
        for (const auto& kind : kinds_)
            for (const auto& p : kind.parents)
                if (!index_.count(p)) throw LookupError("structure " + kind.name + " has unknown parent " + p);
        // Depth-first cycle check; depths come out of the same walk.
        depth_.assign(kinds_.size(), -1);
        std::vector<int> state(kinds_.size(), 0);
        for (std::size_t k = 0; k < kinds_.size(); ++k) visit(k, state);
    }

    const std::vector<StructureKind>& kinds() const noexcept { return kinds_; }

    bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

    const StructureKind& at(std::string_view name) const { return kinds_[index_of(name)]; }

    /// Longest parent chain down to a root.
    int depth(std::string_view name) const { return depth_[index_of(name)]; }

    /// Reflexive-transitive ancestor test.
    bool derives_from(std::string_view kind, std::string_view ancestor) const {
        std::size_t target = index_of(ancestor);
        std::vector<std::size_t> stack{index_of(kind)};
        std::set<std::size_t> seen;
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            if (k == target) return true;
            if (!seen.insert(k).second) continue;
            for (const auto& p : kinds_[k].parents) stack.push_back(index_of(p));
        }
        return false;
    }

    /// The kind itself and every transitive parent, in registry order.
    std::vector<std::string> ancestors(std::string_view name) const {
        std::vector<std::string> out;
        for (const auto& k : kinds_)
            if (derives_from(name, k.name)) out.push_back(k.name);
        return out;
    }

    /// Own operators plus every inherited one; a restated operator counts once.
    std::vector<OperatorSignature> effective_ops(std::string_view name) const {
        std::vector<OperatorSignature> out;
        collect(index_of(name), [&](const StructureKind& k) {
            for (const auto& op : k.required_ops)
                if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.key() == op.key(); }))
                    out.push_back(op);
        });
        return out;
    }

    std::vector<ConstRequirement> effective_consts(std::string_view name) const {
        std::vector<ConstRequirement> out;
        collect(index_of(name), [&](const StructureKind& k) {
            for (const auto& c : k.required_consts)
                if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.name == c.name; }))
                    out.push_back(c);
        });
        return out;
    }

    std::vector<LawId> effective_laws(std::string_view name) const {
        std::vector<LawId> out;
        for (LawId law : all_laws) {
            for (const auto& anc : ancestors(name)) {
                const auto& own = at(anc).laws;
                if (std::find(own.begin(), own.end(), law) != own.end()) {
                    out.push_back(law);
                    break;
                }
            }
        }
        return out;
    }

    /// The structure declaring `law`, if any.
    std::optional<std::string> law_owner(LawId law) const {
        for (const auto& k : kinds_)
            if (std::find(k.laws.begin(), k.laws.end(), law) != k.laws.end()) return k.name;
        return std::nullopt;
    }

    /// Most specific common ancestor; ties go to the earlier registry entry.
    std::optional<std::string> join(std::string_view a, std::string_view b) const {
        std::optional<std::string> best;
        for (const auto& k : kinds_) {
            if (!derives_from(a, k.name) || !derives_from(b, k.name)) continue;
            if (!best || (derives_from(k.name, *best) && k.name != *best)) best = k.name;
        }
        return best;
    }

private:
    std::size_t index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw LookupError("unknown structure " + std::string(name));
        return it->second;
    }

    int visit(std::size_t k, std::vector<int>& state) {
        if (state[k] == 2) return depth_[k];
        if (state[k] == 1) throw TypeError("structure inheritance cycle through " + kinds_[k].name);
        state[k] = 1;
        int d = 0;
        for (const auto& p : kinds_[k].parents) d = std::max(d, visit(index_of(p), state) + 1);
        state[k] = 2;
        depth_[k] = d;
        return d;
    }

    template <class F>
    void collect(std::size_t k, F&& f) const {
        f(kinds_[k]);
        for (const auto& p : kinds_[k].parents) collect(index_of(p), f);
    }

    std::vector<StructureKind> kinds_;
    std::map<std::string, std::size_t> index_;
    std::vector<int> depth_;
};

inline const Registry& builtin_registry() {
    static const Registry registry = [] {
        auto sig = [](Op op, const char* s) { return OperatorSignature{op, s, s}; };
        std::vector<StructureKind> kinds;
        kinds.push_back({"Semigroup", {}, {sig(Op::add, "Semigroup")}, {}, {LawId::assoc_add}, {}});
        kinds.push_back({"Group",
                         {"Semigroup"},
                         {sig(Op::sub, "Group"), sig(Op::neg, "Group")},
                         {{"Zero", ConstRole::zero, "Group"}},
                         {LawId::add_identity, LawId::add_inverse},
                         {}});
        // Module restates the whole additive signature, as in its classic listing.
        kinds.push_back({"Module",
                         {"Group"},
                         {sig(Op::add, "Module"), sig(Op::sub, "Module"), sig(Op::neg, "Module")},
                         {{"Zero", ConstRole::zero, "Module"}},
                         {LawId::comm_add},
                         {"AbelianGroup"}});
        kinds.push_back({"Ring",
                         {"Module"},
                         {sig(Op::mul, "Ring"), sig(Op::div, "Ring"), sig(Op::inversion, "Ring")},
                         {{"Unit", ConstRole::unit, "Ring"}},
                         {LawId::assoc_mul, LawId::mul_identity, LawId::distrib_left, LawId::distrib_right},
                         {}});
        kinds.push_back({"DivisionRing",
                         {"Ring"},
                         {sig(Op::div, "DivisionRing"), sig(Op::inversion, "DivisionRing")},
                         {},
                         {LawId::mul_inverse},
                         {}});
        kinds.push_back({"Field", {"DivisionRing"}, {}, {}, {LawId::comm_mul}, {}});
        kinds.push_back({"Algebra",
                         {"Ring", "Module"},
                         {OperatorSignature{Op::norm, "Algebra", "Number"}, sig(Op::conj, "Algebra")},
                         {},
                         {LawId::norm_multiplicative},
                         {}});
        return Registry(std::move(kinds));
    }();
    return registry;
}

/// Structures a carrier declares directly, most specific first.
inline std::vector<std::string> declared_structures(const TypeTag& tag) {
    switch (tag.carrier()) {
    case Carrier::integer: return {"Ring"};
    case Carrier::rational: return {"Field"};
    case Carrier::complex: return {"Field"};
    case Carrier::quaternion: return {"Algebra", "DivisionRing"};
    case Carrier::polynomial: return {"Ring"};
    case Carrier::matrix: return {"Algebra"};
    case Carrier::unknown: break;
    }
    throw LookupError("untyped value has no structures");
}

/// Declared structures plus all their ancestors, deepest first; equal depths
/// keep declaration order, then registry order.
inline std::vector<std::string> satisfied_structures(const TypeTag& tag, const Registry& reg = builtin_registry()) {
    std::vector<std::string> out;
    auto push = [&](const std::string& n) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    auto declared = declared_structures(tag);
    for (const auto& d : declared) push(d);
    for (const auto& k : reg.kinds())
        for (const auto& d : declared)
            if (reg.derives_from(d, k.name)) push(k.name);
    std::stable_sort(out.begin(), out.end(),
                     [&](const std::string& a, const std::string& b) { return reg.depth(a) > reg.depth(b); });
    return out;
}

inline bool satisfies(const TypeTag& tag, std::string_view kind, const Registry& reg = builtin_registry()) {
    if (!reg.contains(kind)) throw LookupError("unknown structure " + std::string(kind));
    for (const auto& d : declared_structures(tag))
        if (reg.derives_from(d, kind)) return true;
    return false;
}

/// Structure whose signature introduces `op`.
inline std::string_view op_owner(Op op) {
    switch (op) {
    case Op::add: return "Semigroup";
    case Op::sub:
    case Op::neg: return "Group";
    case Op::mul:
    case Op::div:
    case Op::inversion: return "Ring";
    case Op::norm:
    case Op::conj: return "Algebra";
    }
    return "Semigroup";
}

} // namespace ca
