// Command-line front end: `ca repl`, `ca run`, `ca check`, `ca emit`, `ca laws`.
//
// Exit codes: 0 success, 1 diagnostics (including usage errors), 2 I/O failure.

#include <unistd.h>

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ca.hpp"

namespace {

int finish(const ca::RunResult& r) {
    std::cout << r.output << std::flush;
    std::cerr << r.diagnostics << std::flush;
    return r.exit_code;
}

int repl(ca::SessionOptions options) {
    ca::Session session(options);
    const bool interactive = ::isatty(0) != 0;
    std::string line;
    bool failed = false;
    for (std::size_t line_no = 1;; ++line_no) {
        if (interactive) std::cout << "ca> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        ca::StepResult r = session.step(line, line_no);
        std::cout << r.output << std::flush;
        std::cerr << r.diagnostics << std::flush;
        failed = failed || !r.ok();
        if (r.quit) break;
    }
    // Interactive sessions always end cleanly; piped scripts report failures.
    return interactive || !failed ? ca::exit_code::success : ca::exit_code::diagnostics;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Typed computer-algebra kernel with an object-oriented code generator", "ca"};
    app.require_subcommand(1);

    bool repl_quiet = false;
    std::uint64_t repl_seed = ca::SessionOptions{}.seed;
    auto* repl_cmd = app.add_subcommand("repl", "Interactive session (reads stdin)");
    repl_cmd->add_flag("-q,--quiet", repl_quiet, "Do not echo bindings");
    repl_cmd->add_option("--seed", repl_seed, "Seed for :laws sampling");

    std::string run_path;
    bool run_echo = false;
    auto* run_cmd = app.add_subcommand("run", "Execute a program and print expression results");
    run_cmd->add_option("FILE", run_path)->required();
    run_cmd->add_flag("-e,--echo", run_echo, "Echo bindings as the REPL does");

    std::string check_path;
    auto* check_cmd = app.add_subcommand("check", "Parse and type-check a program");
    check_cmd->add_option("FILE", check_path)->required();

    std::string emit_path, emit_out;
    auto* emit_cmd = app.add_subcommand("emit", "Lower a program to object-oriented classes");
    emit_cmd->add_option("FILE", emit_path)->required();
    emit_cmd->add_option("-o,--output", emit_out, "Write to this path instead of stdout");

    std::string law_type;
    std::uint64_t law_seed = ca::SessionOptions{}.seed;
    std::size_t law_samples = ca::default_law_samples;
    auto* laws_cmd = app.add_subcommand("laws", "Check every law a carrier claims on random samples");
    laws_cmd->add_option("TYPE", law_type)->required();
    laws_cmd->add_option("--seed", law_seed, "Sampling seed");
    laws_cmd->add_option("--samples", law_samples, "Number of samples")->check(CLI::Range(1, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ca::exit_code::diagnostics;
    }

    if (*repl_cmd) return repl({.seed = repl_seed, .echo_bindings = !repl_quiet});
    if (*run_cmd) return finish(ca::run_file(run_path, {.echo_bindings = run_echo}));
    if (*check_cmd) return finish(ca::check_file(check_path));
    if (*emit_cmd) return finish(ca::emit_file(emit_path, emit_out));

    try {
        ca::TypeTag tag = ca::parse_type(law_type);
        bool ok = true;
        for (const auto& r : ca::run_law_suite(tag, law_seed, law_samples)) {
            ok = ok && r.passed();
            std::cout << ca::describe_report(r) << "\n";
        }
        return ok ? ca::exit_code::success : ca::exit_code::diagnostics;
    } catch (const ca::Error& e) {
        std::cerr << ca::format_diagnostic(e, "TYPE") << "\n";
        return ca::exit_code::diagnostics;
    }
}
