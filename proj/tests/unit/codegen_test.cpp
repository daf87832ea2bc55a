#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ca.hpp"
#include "support/generators.hpp"

using namespace ca;
using namespace ca::testing;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(CA_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t count_members(const OOClass& c, std::string_view name) {
    return static_cast<std::size_t>(
        std::count_if(c.members.begin(), c.members.end(), [&](const Member& m) { return m.name == name; }));
}

} // namespace

TEST(LowerStructure, Module) {
    OOClass m = lower_structure(builtin_registry().at("Module"));
    EXPECT_TRUE(m.parents.empty());
    ASSERT_EQ(m.members.size(), 4u);
    EXPECT_EQ(m.members[0].signature, "+ (A,B : Module) : Module");
    EXPECT_EQ(m.members[1].signature, "- (A,B : Module) : Module");
    EXPECT_EQ(m.members[2].signature, "- (A : Module) : Module");
    EXPECT_EQ(m.members[3].signature, "Zero : Module");
    EXPECT_EQ(first_line(emit({m})), "Module = Object;");
}

TEST(LowerStructure, Ring) {
    OOClass r = lower_structure(builtin_registry().at("Ring"));
    EXPECT_EQ(r.parents, std::vector<std::string>{"Module"});
    EXPECT_TRUE(r.find_member("*") && r.find_member("/") && r.find_member("Inversion") && r.find_member("Unit"));
    EXPECT_EQ(r.find_member("Inversion")->kind, MemberKind::function);
    EXPECT_EQ(first_line(emit({r})), "Ring = Object(Module)");
}

TEST(LowerStructure, Semigroup) {
    OOClass s = lower_structure(builtin_registry().at("Semigroup"));
    ASSERT_EQ(s.members.size(), 1u);
    EXPECT_EQ(s.members[0].kind, MemberKind::operation);
}

TEST(LowerStructure, Completeness) {
    const auto& reg = builtin_registry();
    for (const auto& k : reg.kinds()) {
        OOClass c = lower_structure(k, reg);
        for (const auto& op : k.required_ops) {
            std::string name = op.op == Op::neg ? "-/1" : std::string(op.symbol());
            EXPECT_EQ(count_members(c, name), 1u) << k.name << " " << name;
        }
        for (const auto& cn : k.required_consts) EXPECT_EQ(count_members(c, cn.name), 1u) << k.name;
        EXPECT_EQ(c.members.size(), k.required_ops.size() + k.required_consts.size());
    }
}

TEST(LowerStructure, InheritanceFidelity) {
    // Module restates the whole additive signature and is emitted as a root.
    const auto& reg = builtin_registry();
    std::string text = emit(lower_library());
    for (const auto& k : reg.kinds()) {
        std::size_t at = text.find("\n" + k.name + " = ");
        std::string header = first_line(at == std::string::npos ? text : text.substr(at + 1));
        ASSERT_EQ(header.rfind(k.name + " = Object", 0), 0u) << header;
        for (const auto& p : k.parents) {
            if (k.name == "Module") {
                EXPECT_EQ(header, "Module = Object;");
                continue;
            }
            EXPECT_NE(header.find(p), std::string::npos) << header;
        }
    }
}

TEST(LowerConcrete, Examples) {
    OOClass q = lower_concrete(TypeTag::quaternion());
    EXPECT_EQ(q.parents, std::vector<std::string>{"Algebra"});
    ASSERT_NE(q.find_field("Data"), nullptr);
    EXPECT_EQ(q.find_field("Data")->type, "array [0..3] of Number");
    EXPECT_TRUE(q.find_member("Norm") && q.find_member("+") && q.find_member("*"));

    OOClass r = lower_concrete(TypeTag::rational());
    EXPECT_EQ(r.parents, std::vector<std::string>{"Field"});
    EXPECT_TRUE(r.find_field("num") && r.find_field("den"));
    EXPECT_EQ(lower_concrete(TypeTag::integer()).parents, std::vector<std::string>{"Ring"});
}

TEST(LowerExpr, TwoNodeTree) {
    Environment env;
    env.declare("a", TypeTag::rational());
    env.declare("y", TypeTag::rational());
    Expr e = elaborate(parse_expr("a*y + 2"), env);
    auto classes = lower_expr("x", e);
    ASSERT_EQ(classes.size(), 2u);
    EXPECT_EQ(classes[0].name, "x_n1");
    EXPECT_EQ(classes[1].name, "x");
    EXPECT_EQ(detail::eval_text(std::get<Expr>(classes[0].find_member("Eval")->body)), "a * y");
    EXPECT_EQ(detail::eval_text(std::get<Expr>(classes[1].find_member("Eval")->body)), "x_n1 + 2");
    EXPECT_EQ(rebuild_expr(classes, "x"), e);
}

TEST(LowerExpr, Leaf) {
    auto classes = lower_expr("z", Expr::literal(Integer(7)));
    ASSERT_EQ(classes.size(), 1u);
    const Member* c = classes[0].find_member("c1");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(std::get<Value>(c->body), Value(Integer(7)));
    EXPECT_EQ(rebuild_expr(classes, "z"), Expr::literal(Integer(7)));
}

TEST(Emit, EmptyAndDeterministic) {
    EXPECT_EQ(emit(std::vector<OOClass>{}), "");
    EXPECT_EQ(emit(lower_library()), emit(lower_library()));
}

TEST(Emit, Golden) {
    const auto& reg = builtin_registry();
    EXPECT_EQ(emit({lower_structure(reg.at("Module"))}), golden("module.txt"));
    EXPECT_EQ(emit({lower_structure(reg.at("Ring"))}), golden("ring.txt"));
    EXPECT_EQ(emit({lower_concrete(TypeTag::quaternion())}), golden("quaternion.txt"));
}

TEST(Properties, LoweringRoundTrips) {
    Rng rng(23);
    auto names = symbol_names(3);
    for (int n = 0; n < 500; ++n) {
        TypeTag t = tree_carriers()[n % 6];
        Expr e = random_tree(t, {6, names}, rng);
        auto classes = lower_expr("r", e);
        EXPECT_EQ(classes.size(), std::max<std::size_t>(apply_count(e), 1));
        EXPECT_EQ(rebuild_expr(classes, "r"), e) << print_expr(e);
    }
}
