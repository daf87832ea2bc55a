// Uses the kernel as a library: builds a small environment, partially
// evaluates an expression, checks a law and prints the lowered classes.
#include <iostream>

#include "ca.hpp"

int main() {
    ca::Environment env;
    env.declare("q", ca::TypeTag::quaternion());
    env.declare("t", ca::TypeTag::rational());

    ca::Expr e = ca::elaborate(ca::parse_expr("Conj(q)*q + t*i"), env);
    std::cout << "type:    " << e.tag().to_string() << "\n";
    std::cout << "partial: " << ca::print_expr(ca::evaluate(e, env)) << "\n";

    env.bind("q", ca::elaborate(ca::parse_expr("1 + 2*j"), env, ca::TypeTag::quaternion()));
    env.bind("t", ca::Expr::literal(ca::Rational(ca::Integer(1), ca::Integer(3))));
    std::cout << "value:   " << ca::print_expr(ca::evaluate(e, env)) << "\n";

    for (const auto& r : ca::run_law_suite(ca::TypeTag::quaternion(), 7, 50))
        std::cout << ca::describe_report(r) << "\n";

    std::cout << ca::emit(ca::lower_expr("w", e));
}
