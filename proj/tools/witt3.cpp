#include "witt3/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

// "--range -8..8" would otherwise be read as the short flag "-8".
std::vector<std::string> join_range_values(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--range" && i + 1 < argc) {
            args.push_back(a + "=" + argv[++i]);
        } else {
            args.push_back(std::move(a));
        }
    }
    return args;
}

int emit(const witt3::CommandOutput& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the 3-point Witt algebras Der(R) and Der(S)", "witt3"};
    app.require_subcommand(1);

    std::string alg, x, y, id, mode = "closed", suite, kind, format = "csv", range_text;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool no_timing = false;

    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two derivations");
    bracket->add_option("alg", alg, "r or s")->required()->check(CLI::IsMember({"r", "s"}));
    bracket->add_option("x", x, "first derivation")->required();
    bracket->add_option("y", y, "second derivation")->required();

    auto* cocycle = app.add_subcommand("cocycle", "Evaluate phi1, phi2 (Der(S)) or phi1bar, phi2bar (Der(R))");
    cocycle->add_option("id", id, "phi1, phi2, phi1bar or phi2bar")->required();
    cocycle->add_option("x", x, "first derivation")->required();
    cocycle->add_option("y", y, "second derivation")->required();
    cocycle->add_option("--mode", mode, "closed, pullback or both (phi1bar/phi2bar only)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify->add_option("suite", suite, "theorem, brackets, pushforward, cocycle-identity, identities, noncoboundary")
        ->required();
    verify->add_option("--range", range_text, "LO..HI")->required();
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", no_timing, "write duration_ms as 0 for byte-identical reports");

    auto* table = app.add_subcommand("table", "Tabulate phi1bar or phi2bar on basis pairs");
    table->add_option("id", id, "phi1bar or phi2bar")->required();
    table->add_option("kind", kind, "ee, ed or dd")->required();
    table->add_option("--range", range_text, "LO..HI")->required();
    table->add_option("--format", format, "csv or json");
    table->add_option("--mode", mode, "closed, pullback or both");
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto args = join_range_values(argc, argv);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bracket) return emit(witt3::cmd_bracket(alg, x, y));
        if (*cocycle) return emit(witt3::cmd_cocycle(id, x, y, mode));
        witt3::Range range = witt3::parse_range(range_text);
        if (*verify) return emit(witt3::cmd_verify(suite, range, jobs, !no_timing));
        return emit(witt3::cmd_table(id, kind, range, format, mode, jobs));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
