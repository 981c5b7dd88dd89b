#pragma once

/// Command dispatch: a parsed spec goes in, a deterministic JSON report and
/// a process exit code come out. Exit 0 means every gating verdict passed,
/// exit 1 means a verdict failed or a precondition refused the analysis,
/// exit 2 means the input was malformed or an internally enforced identity
/// broke. The report shape is fixed: command, version, seed, verdicts,
/// dimensions, witnesses (with a trailing notes list).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "phk/error.hpp"
#include "phk/galois.hpp"
#include "phk/random_instances.hpp"
#include "phk/specfile.hpp"
#include "phk/version.hpp"

namespace phk {

struct EngineOptions {
    std::uint64_t seed = 1;
    std::size_t count = 25;
    bool require_galois = false;
};

struct EngineResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
};

namespace engdetail {

struct Out {
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    std::vector<std::string> notes;
    bool gate = true;
};

inline std::string finding_line(const Finding& g) {
    std::string s = g.check;
    if (!g.indices.empty()) {
        s += " at (";
        for (std::size_t i = 0; i < g.indices.size(); ++i)
            s += (i ? "," : "") + std::to_string(g.indices[i]);
        s += ")";
    }
    if (!g.detail.empty()) s += ": " + g.detail;
    return s;
}

inline void note_failures(Out& o, const Report& r) {
    for (const Finding& g : r.failures) o.notes.push_back(r.subject + ": " + finding_line(g));
}

inline void cmd_check_hopf(const SpecFile& s, Out& o) {
    HopfAlgebra h = spec_hopf(s);
    Report rep = check_hopf(h);
    o.verdicts["hopf-axioms"] = rep.ok();
    o.dims["H"] = h.dim();
    note_failures(o, rep);
    o.gate = rep.ok();
    if (!rep.ok()) return;

    o.dims["left-integrals"] = integral_space(h, Side::left).dim();
    o.dims["right-integrals"] = integral_space(h, Side::right).dim();
    try {
        IntegralPair pair = normalized_pair(h);
        Report ir = check_integral_identities(h, pair);
        o.verdicts["integral-identities"] = ir.ok();
        o.witnesses["t"] = detail::render_vec(pair.t);
        o.witnesses["T"] = detail::render_vec(pair.T);
        note_failures(o, ir);
        o.gate = o.gate && ir.ok();
    } catch (const StructuralError& e) {
        o.verdicts["integral-pairing-normalizes"] = false;
        o.notes.push_back(std::string("integral pairing: ") + e.what());
        o.gate = false;
    }
}

inline void cmd_check_action(const SpecFile& s, Out& o) {
    PartialAction pa = spec_action(s);
    Report r1 = check_pa(pa);
    Report r2 = check_symmetric(pa);
    o.verdicts["action-axioms"] = r1.ok();
    o.verdicts["symmetric"] = r2.ok();
    o.dims["A"] = pa.alg().dim();
    o.dims["H"] = pa.hopf().dim();
    note_failures(o, r1);
    note_failures(o, r2);
    o.gate = r1.ok() && r2.ok();
}

inline void cmd_invariants(const SpecFile& s, Out& o) {
    PartialAction pa = spec_action(s);
    Report r1 = check_pa(pa);
    o.verdicts["action-axioms"] = r1.ok();
    note_failures(o, r1);
    if (!r1.ok()) {
        o.gate = false;
        return;
    }
    Subspace left = invariants(pa, Side::left);
    Subspace right = invariants(pa, Side::right);
    o.verdicts["sides-agree"] = left == right;
    o.dims["A"] = pa.alg().dim();
    o.dims["invariants-left"] = left.dim();
    o.dims["invariants-right"] = right.dim();
    std::string lb, rb;
    for (std::size_t i = 0; i < left.dim(); ++i)
        lb += (i ? "; " : "") + detail::render_vec(left.basis_vector(i));
    for (std::size_t i = 0; i < right.dim(); ++i)
        rb += (i ? "; " : "") + detail::render_vec(right.basis_vector(i));
    o.witnesses["invariants-left"] = lb;
    o.witnesses["invariants-right"] = rb;
}

inline void cmd_smash(const SpecFile& s, Out& o) {
    PartialAction pa = spec_action(s);
    Report r1 = check_pa(pa);
    o.verdicts["action-axioms"] = r1.ok();
    note_failures(o, r1);
    if (!r1.ok()) {
        o.gate = false;
        return;
    }
    SmashProduct sm = smash(pa);
    PartialSmash ps = partial_smash(sm);
    o.verdicts["smash-constructed"] = true;
    o.dims["A"] = pa.alg().dim();
    o.dims["H"] = pa.hopf().dim();
    o.dims["smash"] = sm.alg.dim();
    o.dims["corner"] = ps.dim();
    o.notes.push_back(sm.unit_two_sided ? "the smash unit is two-sided: the action is global"
                                        : "the smash unit is a left identity only");
}

inline void require_symmetric(PartialAction& pa, const std::string& what) {
    Report r1 = check_pa(pa);
    if (!r1.ok())
        throw PreconditionError(what + " needs a valid action: " + r1.summary());
    Report r2 = check_symmetric(pa);
    if (!r2.ok())
        throw PreconditionError(what + " needs a symmetric action: " + r2.summary());
}

inline void cmd_frobenius(const SpecFile& s, Out& o) {
    PartialAction pa = spec_action(s);
    require_symmetric(pa, "frobenius analysis");
    IntegralPair pair = normalized_pair(pa.hopf());
    PartialSmash ps = partial_smash(smash(pa));
    FixedPart fp = fixed_part(ps, pair);
    FrobeniusSystem fro = frobenius_system(ps, pair);
    Report rep = verify_frobenius(ps, fro);
    Subspace inv = invariants(pa, Side::left);
    AlphaBeta ab = alpha_beta(ps, pair, fro);
    Report rep2 = check_alpha_beta(ps, ab, fp, inv);
    o.verdicts["frobenius-identities"] = rep.ok();
    o.verdicts["projection-pair"] = rep2.ok();
    o.dims["A"] = pa.alg().dim();
    o.dims["H"] = pa.hopf().dim();
    o.dims["corner"] = ps.dim();
    o.dims["corner-tensor"] = fro.tensor.dim();
    o.dims["fixed"] = fp.in_corner.dim();
    o.dims["invariants"] = inv.dim();
    note_failures(o, rep);
    note_failures(o, rep2);
    o.gate = rep.ok() && rep2.ok();
}

inline void cmd_galois(const SpecFile& s, const EngineOptions& opts, Out& o) {
    PartialAction pa = spec_action(s);
    GaloisResult r = galois_report(pa);
    o.verdicts["canonical-bijective"] = r.c1;
    o.verdicts["mu-bijective"] = r.c2;
    o.verdicts["integral-pair-exists"] = r.c3;
    o.verdicts["end-iso-and-projective"] = r.c45;
    o.verdicts["bracket-surjective"] = r.c7;
    if (r.c6)
        o.verdicts["module-family"] = *r.c6;
    else
        o.verdicts["module-family"] = nullptr;
    o.verdicts["agreement"] = r.agreement;
    o.verdicts["galois"] = r.galois;
    for (const auto& [k, v] : r.dims) o.dims[k] = v;
    for (const auto& [k, v] : r.witnesses) o.witnesses[k] = v;
    for (const std::string& n : r.notes) o.notes.push_back(n);
    o.gate = r.agreement && (!opts.require_galois || r.galois);
}

inline void cmd_fuzz(const EngineOptions& opts, Out& o) {
    std::size_t galois_yes = 0, galois_no = 0, failures = 0;
    for (std::size_t i = 0; i < opts.count; ++i) {
        const std::uint64_t seed = opts.seed + i;
        RandomInstance inst = random_instance(seed);
        bool bad = false;
        try {
            IntegralPair pair = normalized_pair(inst.action.hopf());
            PartialSmash ps = partial_smash(smash(inst.action));
            FrobeniusSystem fro = frobenius_system(ps, pair);
            Report rep = verify_frobenius(ps, fro);
            if (!rep.ok()) {
                bad = true;
                o.notes.push_back("seed " + std::to_string(seed) + " (" + inst.label +
                                  "): " + rep.summary());
            }
            GaloisResult gr = galois_report(inst.action);
            if (!gr.agreement) {
                bad = true;
                o.notes.push_back("seed " + std::to_string(seed) + " (" + inst.label +
                                  "): condition disagreement");
            } else {
                (gr.galois ? galois_yes : galois_no) += 1;
            }
        } catch (const Error& e) {
            bad = true;
            o.notes.push_back("seed " + std::to_string(seed) + " (" + inst.label +
                              "): " + e.what());
        }
        if (bad) {
            ++failures;
            if (!o.witnesses.contains("reproducing-spec"))
                o.witnesses["reproducing-spec"] =
                    specfile_to_json(to_specfile(inst)).dump();
        }
    }
    o.verdicts["all-instances-pass"] = failures == 0;
    o.dims["instances"] = opts.count;
    o.dims["galois-true"] = galois_yes;
    o.dims["galois-false"] = galois_no;
    o.dims["failures"] = failures;
    o.gate = failures == 0;
}

inline nlohmann::ordered_json assemble(const std::string& command, const Out& o,
                                       bool with_seed, std::uint64_t seed) {
    nlohmann::ordered_json rep;
    rep["command"] = command;
    rep["version"] = version_string;
    if (with_seed)
        rep["seed"] = seed;
    else
        rep["seed"] = nullptr;
    rep["verdicts"] = o.verdicts;
    rep["dimensions"] = o.dims;
    rep["witnesses"] = o.witnesses;
    rep["witnesses"]["notes"] = o.notes;
    return rep;
}

} // namespace engdetail

inline const std::vector<std::string>& spec_commands() {
    static const std::vector<std::string> cmds = {"check-hopf", "check-action",
                                                  "invariants", "smash",
                                                  "frobenius",  "galois"};
    return cmds;
}

/// Run one spec-consuming command.
inline EngineResult run_spec_command(const std::string& command, const SpecFile& spec,
                                     const EngineOptions& opts = {}) {
    engdetail::Out o;
    int code = 0;
    try {
        if (command == "check-hopf")
            engdetail::cmd_check_hopf(spec, o);
        else if (command == "check-action")
            engdetail::cmd_check_action(spec, o);
        else if (command == "invariants")
            engdetail::cmd_invariants(spec, o);
        else if (command == "smash")
            engdetail::cmd_smash(spec, o);
        else if (command == "frobenius")
            engdetail::cmd_frobenius(spec, o);
        else if (command == "galois")
            engdetail::cmd_galois(spec, opts, o);
        else
            throw ParseError("unknown command: " + command);
        code = o.gate ? 0 : 1;
    } catch (const PreconditionError& e) {
        o.verdicts["precondition"] = false;
        o.notes.push_back(e.what());
        code = 1;
    } catch (const TheoremViolationError& e) {
        o.notes.push_back(std::string("internal identity failed: ") + e.what());
        code = 2;
    } catch (const Error& e) {
        o.notes.push_back(e.what());
        code = 2;
    }
    return EngineResult{code, engdetail::assemble(command, o, false, 0)};
}

/// Run the seeded stress sweep (no spec input).
inline EngineResult run_fuzz(const EngineOptions& opts) {
    engdetail::Out o;
    int code = 0;
    try {
        engdetail::cmd_fuzz(opts, o);
        code = o.gate ? 0 : 1;
    } catch (const Error& e) {
        o.notes.push_back(e.what());
        code = 2;
    }
    return EngineResult{code, engdetail::assemble("fuzz", o, true, opts.seed)};
}

} // namespace phk
