/*
 * Interactive session: the state behind the REPL and the batch commands.
 *
 * A session owns one Environment. Statements update it; meta-commands
 * (":type", ":eval", ":simplify", ":free", ":emit", ":laws", ":quit") inspect
 * it. Every failure becomes a one-line diagnostic and leaves the session as
 * it was before the failing statement.
 */
#pragma once

#include <cstdint>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ca/codegen.hpp"
#include "ca/expr.hpp"
#include "ca/laws.hpp"
#include "ca/parser.hpp"
#include "ca/printer.hpp"

namespace ca {

struct SessionOptions {
    std::uint64_t seed = 20240601;
    /// Echo "name = value" after every binding.
    bool echo_bindings = true;
    /// When false statements are only type-checked (the `check` command).
    bool evaluate = true;
};

struct StepResult {
    std::string output;
    std::string diagnostics;
    bool quit = false;

    bool ok() const noexcept { return diagnostics.empty(); }
};

/// "origin:line:col: kind: message", origin omitted when empty.
inline std::string format_diagnostic(const Error& e, std::string_view origin, SourcePos fallback = {}) {
    SourcePos pos = e.position().value_or(fallback);
    std::string out;
    if (!origin.empty()) out += std::string(origin) + ":";
    out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    out += std::string(e.kind_name()) + ": " + e.what();
    return out;
}

/// "Quaternion (Algebra, DivisionRing, Ring, Module, Group, Semigroup)"
inline std::string describe_type(const TypeTag& tag) {
    std::string out = tag.to_string() + " (";
    auto sat = satisfied_structures(tag);
    for (std::size_t k = 0; k < sat.size(); ++k) out += (k ? ", " : "") + sat[k];
    return out + ")";
}

inline std::string describe_report(const LawReport& r) {
    std::string line = std::string(law_name(r.law)) + ": ";
    if (r.passed()) return line + "pass (" + std::to_string(r.tuples_checked) + " tuples)";
    line += "counterexample";
    for (std::size_t k = 0; k < r.counterexample->assignment.size(); ++k) {
        const auto& [n, v] = r.counterexample->assignment[k];
        line += (k ? ", " : " ") + n + " = " + v.to_string();
    }
    return line + ": " + r.counterexample->lhs.to_string() + " /= " + r.counterexample->rhs.to_string();
}

/// One line per claimed law.
inline std::string law_suite_text(const TypeTag& tag, std::uint64_t seed, bool* all_pass = nullptr) {
    std::string out;
    bool ok = true;
    for (const auto& r : run_law_suite(tag, seed)) {
        ok = ok && r.passed();
        out += describe_report(r) + "\n";
    }
    if (all_pass) *all_pass = ok;
    return out;
}

class Session {
public:
    explicit Session(SessionOptions options = {}) : options_(options) {}

    const Environment& env() const noexcept { return env_; }
    const SessionOptions& options() const noexcept { return options_; }
    bool done() const noexcept { return done_; }

    /// Processes one input line (statements or a meta-command).
    StepResult step(std::string_view line, std::size_t line_no = 1) {
        StepResult res;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] == ':') {
            run_meta(line, first, line_no, res);
            return res;
        }
        std::vector<Statement> stmts;
        try {
            stmts = parse_program(line, {line_no, 1});
        } catch (const Error& e) {
            res.diagnostics = format_diagnostic(e, "") + "\n";
            return res;
        } catch (const std::exception& e) {
            res.diagnostics = format_diagnostic(SyntaxError(e.what(), {line_no, 1}), "") + "\n";
            return res;
        }
        for (const auto& s : stmts) {
            if (!execute_logged(s, "", res)) break;
        }
        return res;
    }

    /// Runs a whole program, stopping at the first diagnostic.
    StepResult run_program(std::string_view source, std::string_view origin) {
        StepResult res;
        std::vector<Statement> stmts;
        try {
            stmts = parse_program(source);
        } catch (const Error& e) {
            res.diagnostics = format_diagnostic(e, origin) + "\n";
            return res;
        } catch (const std::exception& e) {
            res.diagnostics = format_diagnostic(SyntaxError(e.what(), {1, 1}), origin) + "\n";
            return res;
        }
        for (const auto& s : stmts)
            if (!execute_logged(s, origin, res)) break;
        return res;
    }

    /// Executes one statement; returns the text it prints (possibly empty).
    std::string execute(const Statement& stmt) {
        if (const auto* d = std::get_if<Declaration>(&stmt.body)) {
            env_.declare(d->name, resolve_type(d->type));
            return {};
        }
        if (const auto* b = std::get_if<Binding>(&stmt.body)) {
            if (is_reserved_name(b->name)) throw TypeError("'" + b->name + "' is reserved");
            const TypeTag* declared = env_.declared(b->name);
            Expr rhs = elaborate(b->expr, env_, declared ? std::optional<TypeTag>(*declared) : std::nullopt);
            Environment next = env_.with(b->name, rhs);
            std::string out;
            if (options_.evaluate) {
                Expr shown = simplify(evaluate(rhs, next));
                if (options_.echo_bindings) out = b->name + " = " + print_expr(shown) + "\n";
            }
            env_ = std::move(next);
            return out;
        }
        const auto& es = std::get<ExprStatement>(stmt.body);
        Expr e = elaborate(es.expr, env_);
        if (!options_.evaluate) return {};
        return print_expr(simplify(evaluate(e, env_))) + "\n";
    }

    std::vector<OOClass> lowered() const { return lower_program(env_); }

private:
    bool execute_logged(const Statement& s, std::string_view origin, StepResult& res) {
        try {
            res.output += execute(s);
            return true;
        } catch (const Error& e) {
            res.diagnostics += format_diagnostic(e, origin, s.pos) + "\n";
        } catch (const std::exception& e) {
            res.diagnostics += format_diagnostic(Error(Error::Kind::type, e.what()), origin, s.pos) + "\n";
        }
        return false;
    }

    void run_meta(std::string_view line, std::size_t first, std::size_t line_no, StepResult& res) {
        std::size_t cmd_end = line.find_first_of(" \t", first);
        std::string cmd(line.substr(first, cmd_end == std::string_view::npos ? std::string_view::npos : cmd_end - first));
        std::size_t arg_at = cmd_end == std::string_view::npos ? line.size() : line.find_first_not_of(" \t", cmd_end);
        if (arg_at == std::string_view::npos) arg_at = line.size();
        std::string_view arg = line.substr(arg_at);
        SourcePos pos{line_no, arg_at + 1};
        try {
            res.output += meta(cmd, arg, pos, {line_no, first + 1}, res);
        } catch (const Error& e) {
            res.diagnostics += format_diagnostic(e, "", pos) + "\n";
        } catch (const std::exception& e) {
            res.diagnostics += format_diagnostic(Error(Error::Kind::type, e.what()), "", pos) + "\n";
        }
    }

    std::string meta(const std::string& cmd, std::string_view arg, SourcePos pos, SourcePos cmd_pos, StepResult& res) {
        auto expr_arg = [&] { return elaborate(parse_expr(arg, pos), env_); };
        if (cmd == ":quit" || cmd == ":q") {
            done_ = true;
            res.quit = true;
            return {};
        }
        if (cmd == ":type") return describe_type(expr_arg().tag()) + "\n";
        if (cmd == ":eval") return print_expr(evaluate(expr_arg(), env_)) + "\n";
        if (cmd == ":simplify") return print_expr(simplify(expr_arg())) + "\n";
        if (cmd == ":free") {
            std::string out = "{";
            bool first = true;
            for (const auto& s : free_symbols(expr_arg())) {
                out += (first ? "" : ", ") + s;
                first = false;
            }
            return out + "}\n";
        }
        if (cmd == ":emit") return emit(lowered());
        if (cmd == ":laws") {
            Parser p(tokenize(arg, pos));
            TypeExpr t = p.type();
            p.finish();
            return law_suite_text(resolve_type(t), options_.seed);
        }
        if (cmd == ":help")
            return ":type E  :eval E  :simplify E  :free E  :emit  :laws T  :quit\n";
        LookupError unknown("unknown command " + cmd);
        unknown.set_position(cmd_pos);
        throw unknown;
    }

    SessionOptions options_;
    Environment env_;
    bool done_ = false;
};

struct RunResult {
    std::string output;
    std::string diagnostics;
    int exit_code = 0;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int diagnostics = 1;
inline constexpr int io_failure = 2;
} // namespace exit_code

inline bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return !in.bad();
}

inline RunResult run_source(std::string_view source, std::string_view origin, SessionOptions options = {}) {
    Session s(options);
    StepResult r = s.run_program(source, origin);
    return {r.output, r.diagnostics, r.ok() ? exit_code::success : exit_code::diagnostics};
}

/// `ca run`: executes the file, printing expression results (and binding
/// echoes when enabled). Bindings are not echoed by default.
inline RunResult run_file(const std::string& path, SessionOptions options = {.echo_bindings = false}) {
    std::string text;
    if (!read_file(path, text)) return {"", "cannot read " + path + "\n", exit_code::io_failure};
    return run_source(text, path, options);
}

/// `ca check`: parse and type-check only.
inline RunResult check_file(const std::string& path) {
    return run_file(path, {.echo_bindings = false, .evaluate = false});
}

/// `ca emit`: lowers the library, the declared carriers and every binding.
/// An empty `out_path` means the text is returned in `output`.
inline RunResult emit_file(const std::string& path, const std::string& out_path = {}) {
    std::string text;
    if (!read_file(path, text)) return {"", "cannot read " + path + "\n", exit_code::io_failure};
    Session s({.echo_bindings = false, .evaluate = false});
    StepResult r = s.run_program(text, path);
    if (!r.ok()) return {"", r.diagnostics, exit_code::diagnostics};
    std::string program = emit(s.lowered());
    if (out_path.empty()) return {program, "", exit_code::success};
    std::ofstream out(out_path, std::ios::binary);
    out << program;
    out.close();
    if (!out) return {"", "cannot write " + out_path + "\n", exit_code::io_failure};
    return {};
}

} // namespace ca
