// Command line front end. Every run prints one JSON report to stdout and
// exits 0 (clean), 1 (a verdict failed or a precondition refused) or
// 2 (bad input). --json additionally writes the report to a file.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "phk/engine.hpp"

namespace {

const char* describe(const std::string& cmd) {
    if (cmd == "check-hopf") return "verify the Hopf axioms and the integral identities";
    if (cmd == "check-action") return "verify the partial action axioms and symmetry";
    if (cmd == "invariants") return "compute both invariant subalgebras";
    if (cmd == "smash") return "build the smash product and its corner";
    if (cmd == "frobenius") return "verify the Frobenius system of the extension";
    if (cmd == "galois") return "evaluate all Galois conditions independently";
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for partial Hopf actions"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string json_out;
    bool require_galois = false;
    std::uint64_t seed = 1;
    std::size_t count = 25;

    for (const std::string& name : phk::spec_commands()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        sub->add_option("spec", spec_path, "problem description (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--json", json_out, "also write the report to this file");
        if (name == "galois")
            sub->add_flag("--require-galois", require_galois,
                          "exit 1 unless the extension is Galois");
    }
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random stress sweep");
    fuzz->add_option("--seed", seed, "first seed of the sweep");
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--json", json_out, "also write the report to this file");

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    phk::EngineOptions opts;
    opts.seed = seed;
    opts.count = count;
    opts.require_galois = require_galois;

    phk::EngineResult result;
    if (command == "fuzz") {
        result = phk::run_fuzz(opts);
    } else {
        try {
            phk::SpecFile spec = phk::load_specfile(spec_path);
            result = phk::run_spec_command(command, spec, opts);
        } catch (const phk::Error& e) {
            result.exit_code = 2;
            result.report["command"] = command;
            result.report["error"] = e.what();
        }
    }

    const std::string text = result.report.dump(2);
    std::cout << text << "\n";
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return 2;
        }
        out << text << "\n";
    }
    return result.exit_code;
}
