// Engine dispatch: every command is run against stored problem files and
// the resulting verdicts, dimensions, exit codes and report shape are
// pinned down. The installed binary is driven through std::system at the
// end so the whole path from argv to exit code is covered.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "phk/engine.hpp"

using namespace phk;
using nlohmann::ordered_json;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(PHK_FIXTURE_DIR) + "/" + name;
}

SpecFile fixture(const std::string& name) { return load_specfile(fixture_path(name)); }

bool note_mentions(const ordered_json& rep, const std::string& frag) {
    for (const auto& n : rep["witnesses"]["notes"])
        if (n.get<std::string>().find(frag) != std::string::npos) return true;
    return false;
}

std::size_t dim_of(const ordered_json& rep, const std::string& key) {
    REQUIRE(rep["dimensions"].contains(key));
    return rep["dimensions"][key].get<std::size_t>();
}

} // namespace

TEST_CASE("check-hopf passes on every stored Hopf algebra") {
    for (const char* name : {"kc2.json", "kc3.json", "ks3.json", "kc3_dual.json",
                             "taft4.json", "e1.json"}) {
        INFO(name);
        EngineResult r = run_spec_command("check-hopf", fixture(name));
        CHECK(r.exit_code == 0);
        CHECK(r.report["command"] == "check-hopf");
        CHECK(r.report["version"] == version_string);
        CHECK(r.report["seed"].is_null());
        CHECK(r.report["verdicts"]["hopf-axioms"].get<bool>());
        CHECK(r.report["verdicts"]["integral-identities"].get<bool>());
        CHECK(dim_of(r.report, "left-integrals") == 1);
        CHECK(dim_of(r.report, "right-integrals") == 1);
        CHECK(r.report["witnesses"].contains("t"));
        CHECK(r.report["witnesses"].contains("T"));
    }
}

TEST_CASE("check-action separates valid, asymmetric and broken inputs") {
    EngineResult ok = run_spec_command("check-action", fixture("e1.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["verdicts"]["action-axioms"].get<bool>());
    CHECK(ok.report["verdicts"]["symmetric"].get<bool>());
    CHECK(dim_of(ok.report, "A") == 2);
    CHECK(dim_of(ok.report, "H") == 2);

    EngineResult lop = run_spec_command("check-action", fixture("ut2_asymmetric.json"));
    CHECK(lop.exit_code == 1);
    CHECK(lop.report["verdicts"]["action-axioms"].get<bool>());
    CHECK_FALSE(lop.report["verdicts"]["symmetric"].get<bool>());
    CHECK(note_mentions(lop.report, "PA4 at (1,1,1)"));

    EngineResult bad = run_spec_command("check-action", fixture("e3_pa4_broken.json"));
    CHECK(bad.exit_code == 1);
    CHECK_FALSE(bad.report["verdicts"]["action-axioms"].get<bool>());
    CHECK(note_mentions(bad.report, "PA4"));
}

TEST_CASE("invariants reports both sides with bases") {
    EngineResult r = run_spec_command("invariants", fixture("e1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdicts"]["sides-agree"].get<bool>());
    CHECK(dim_of(r.report, "invariants-left") == 1);
    CHECK(dim_of(r.report, "invariants-right") == 1);
    CHECK(r.report["witnesses"]["invariants-left"].get<std::string>() == "(1, 1)");

    // one-sided validity is worth reporting, not worth failing the run
    EngineResult s = run_spec_command("invariants", fixture("ut2_asymmetric.json"));
    CHECK(s.exit_code == 0);
    CHECK_FALSE(s.report["verdicts"]["sides-agree"].get<bool>());
    CHECK(dim_of(s.report, "invariants-left") == 2);
    CHECK(dim_of(s.report, "invariants-right") == 3);
}

TEST_CASE("smash reports corner size and unit sidedness") {
    EngineResult g = run_spec_command("smash", fixture("e1.json"));
    CHECK(g.exit_code == 0);
    CHECK(dim_of(g.report, "smash") == 4);
    CHECK(dim_of(g.report, "corner") == 4);
    CHECK(note_mentions(g.report, "two-sided"));

    EngineResult p = run_spec_command("smash", fixture("e2.json"));
    CHECK(p.exit_code == 0);
    CHECK(dim_of(p.report, "smash") == 2);
    CHECK(dim_of(p.report, "corner") == 1);
    CHECK(note_mentions(p.report, "left identity only"));
}

TEST_CASE("frobenius verifies the system or refuses without symmetry") {
    EngineResult r = run_spec_command("frobenius", fixture("e1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.report["verdicts"]["frobenius-identities"].get<bool>());
    CHECK(r.report["verdicts"]["projection-pair"].get<bool>());
    CHECK(dim_of(r.report, "corner") == 4);
    CHECK(dim_of(r.report, "fixed") == 2);
    CHECK(dim_of(r.report, "invariants") == 1);

    EngineResult s = run_spec_command("frobenius", fixture("ut2_asymmetric.json"));
    CHECK(s.exit_code == 1);
    REQUIRE(s.report["verdicts"].contains("precondition"));
    CHECK_FALSE(s.report["verdicts"]["precondition"].get<bool>());
    CHECK(note_mentions(s.report, "needs a symmetric action"));
}

TEST_CASE("galois reports every condition and the agreement verdict") {
    EngineResult yes = run_spec_command("galois", fixture("e1.json"));
    CHECK(yes.exit_code == 0);
    for (const char* v : {"canonical-bijective", "mu-bijective", "integral-pair-exists",
                          "end-iso-and-projective", "bracket-surjective", "module-family",
                          "agreement", "galois"}) {
        INFO(v);
        CHECK(yes.report["verdicts"][v].get<bool>());
    }
    CHECK(dim_of(yes.report, "canonical_rank") == 4);
    CHECK(yes.report["witnesses"]["integral-pairs"].get<std::string>() ==
          "(1, 0) (x) (1, 0) + (0, 1) (x) (0, 1)");

    EngineResult no = run_spec_command("galois", fixture("e3.json"));
    CHECK(no.exit_code == 0); // agreement holds, so the analysis succeeded
    for (const char* v : {"canonical-bijective", "mu-bijective", "integral-pair-exists",
                          "end-iso-and-projective", "bracket-surjective"}) {
        INFO(v);
        CHECK_FALSE(no.report["verdicts"][v].get<bool>());
    }
    CHECK(no.report["verdicts"]["module-family"].is_null());
    CHECK(no.report["verdicts"]["agreement"].get<bool>());
    CHECK_FALSE(no.report["verdicts"]["galois"].get<bool>());
    CHECK(note_mentions(no.report, "inconsistent"));

    EngineOptions strict;
    strict.require_galois = true;
    CHECK(run_spec_command("galois", fixture("e3.json"), strict).exit_code == 1);

    EngineResult bad = run_spec_command("galois", fixture("e3_pa4_broken.json"));
    CHECK(bad.exit_code == 1);
    REQUIRE(bad.report["verdicts"].contains("precondition"));
    CHECK_FALSE(bad.report["verdicts"]["precondition"].get<bool>());
}

TEST_CASE("unknown commands are bad input, not verdict failures") {
    EngineResult r = run_spec_command("frobnicate", fixture("e1.json"));
    CHECK(r.exit_code == 2);
    CHECK(note_mentions(r.report, "unknown command"));
}

TEST_CASE("reports are deterministic") {
    std::string a = run_spec_command("galois", fixture("e1.json")).report.dump();
    std::string b = run_spec_command("galois", fixture("e1.json")).report.dump();
    CHECK(a == b);

    EngineOptions opts;
    opts.seed = 7;
    opts.count = 10;
    EngineResult f1 = run_fuzz(opts);
    EngineResult f2 = run_fuzz(opts);
    CHECK(f1.report.dump() == f2.report.dump());
    CHECK(f1.exit_code == 0);
    CHECK(f1.report["seed"].get<std::uint64_t>() == 7);
    CHECK(dim_of(f1.report, "instances") == 10);
    CHECK(f1.report["verdicts"]["all-instances-pass"].get<bool>());
}

TEST_CASE("the sweep counts both outcomes and no failures") {
    EngineOptions opts;
    opts.seed = 1;
    opts.count = 12;
    EngineResult r = run_fuzz(opts);
    CHECK(r.exit_code == 0);
    CHECK(dim_of(r.report, "failures") == 0);
    CHECK(dim_of(r.report, "galois-true") + dim_of(r.report, "galois-false") == 12);
}

TEST_CASE("the command line binary exposes the same exit codes") {
    const std::string bin = std::string(PHK_BIN_DIR) + "/phk";

    auto run = [&](const std::string& args) {
        const std::string cmd = bin + " " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        REQUIRE(status != -1);
        REQUIRE(WIFEXITED(status));
        return WEXITSTATUS(status);
    };

    CHECK(run("galois " + fixture_path("e1.json")) == 0);
    CHECK(run("check-action " + fixture_path("ut2_asymmetric.json")) == 1);
    CHECK(run("galois " + fixture_path("e3_pa4_broken.json")) == 1);
    CHECK(run("galois /no/such/file.json") != 0);
    CHECK(run("fuzz --seed 3 --count 5") == 0);

    const std::string out = "/tmp/phk_engine_cli_report.json";
    CHECK(run("galois " + fixture_path("e1.json") + " --json " + out) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    ordered_json written = ordered_json::parse(in);
    CHECK(written == run_spec_command("galois", fixture("e1.json")).report);
    std::remove(out.c_str());
}
