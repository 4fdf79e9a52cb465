// mcsl command-line front end. Talks to the library only through mcsl.h.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "mcsl/mcsl.h"

namespace {

struct Common {
    bool json = false;
    mcsl_guard guard = mcsl_guard_defaults();
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "Machine-readable JSON output");
    cmd->add_option("--guard-carrier", c.guard.carrier, "Largest carrier quantified over by subsets")
        ->capture_default_str();
    cmd->add_option("--guard-enum-semilattice", c.guard.enum_semilattice, "Largest enumerated semilattice")
        ->capture_default_str();
    cmd->add_option("--guard-enum-nonzero", c.guard.enum_nonzero,
                    "Largest number of nonzero elements for multicontact enumeration")
        ->capture_default_str();
    cmd->add_option("--guard-powerset-points", c.guard.powerset_points, "Largest finite space for powersets")
        ->capture_default_str();
    cmd->add_option("--guard-enum-expansion", c.guard.enum_expansion,
                    "Largest number of nonzero elements for expansion enumeration")
        ->capture_default_str();
}

int error_exit() {
    std::fprintf(stderr, "mcsl: %s\n", mcsl_last_error());
    return 2;
}

// 0 pass, 1 some check false, 2 error.
int finish(mcsl_status s, mcsl_result* r, bool json) {
    if (s != MCSL_OK && s != MCSL_FALSE) return error_exit();
    std::fputs(json ? mcsl_result_json(r) : mcsl_result_text(r), stdout);
    const int verdict = mcsl_result_verdict(r);
    mcsl_result_free(r);
    return verdict;
}

mcsl_document* load(const std::string& source) {
    mcsl_document* doc = nullptr;
    if (mcsl_document_load(source.c_str(), &doc) != MCSL_OK) return nullptr;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multicontact semilattices: checks, canonical embeddings and exhaustive enumeration"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mcsl_version()));

    Common common;
    std::string file;

    auto* check = app.add_subcommand("check", "Axioms and the additivity/embedding conditions, with witnesses");
    int m1_plus_rows = 2, m2_rows = 2;
    check->add_option("file", file, "DSL file or catalog:<name>")->required();
    check->add_option("--m1-plus-rows", m1_plus_rows, "Row bound for the bounded M1+ check")
        ->capture_default_str()
        ->check(CLI::Range(1, 6));
    check->add_option("--m2-rows", m2_rows, "Row bound for the bounded M2 check")
        ->capture_default_str()
        ->check(CLI::Range(2, 6));
    add_common(check, common);

    auto* embed = app.add_subcommand("embed", "Canonical embedding into a powerset, verified");
    std::string mode = "overlap";
    bool bounded = false;
    embed->add_option("file", file, "DSL file or catalog:<name>")->required();
    embed->add_option("--mode", mode, "overlap or smallest")
        ->capture_default_str()
        ->check(CLI::IsMember({"overlap", "smallest"}));
    embed->add_flag("--bounded", bounded, "Also require the top to be preserved");
    add_common(embed, common);

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration of small structures");
    std::string kind, base;
    int size = 0;
    bool up_to_iso = false;
    enumerate->add_option("--kind", kind, "semilattices, multicontacts, weak-contacts, preclosures, event-structures, expansions")
        ->required()
        ->check(CLI::IsMember(
            {"semilattices", "multicontacts", "weak-contacts", "preclosures", "event-structures", "expansions"}));
    enumerate->add_option("--base", base, "DSL file or catalog:<name> supplying the base");
    enumerate->add_option("--size", size, "Number of elements (events for event structures)")->check(CLI::Range(0, 16));
    enumerate->add_flag("--up-to-iso", up_to_iso, "One semilattice per isomorphism class");
    add_common(enumerate, common);

    auto* catalog = app.add_subcommand("catalog", "List, print or emit the built-in structures");
    std::string name;
    bool emit = false;
    catalog->add_option("name", name, "Entry name; omit to list");
    catalog->add_flag("--emit", emit, "Print only the DSL source");
    add_common(catalog, common);

    auto* theorems = app.add_subcommand("verify-theorems", "Exhaustive oracle harness over small structures");
    int max_n = 4, threads = 1;
    std::string theorem;
    theorems->add_option("--max", max_n, "Largest semilattice size")->capture_default_str()->check(CLI::Range(1, 6));
    theorems->add_option("--theorem", theorem, "Run one harness (see the README for identifiers)");
    theorems->add_option("--threads", threads, "Worker threads, 0 for one per hardware thread")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    theorems->add_flag("--up-to-iso", up_to_iso, "One semilattice per isomorphism class");
    add_common(theorems, common);

    auto* convert = app.add_subcommand("convert", "Translate between multicontacts and event structures");
    std::string to;
    convert->add_option("file", file, "DSL file or catalog:<name>")->required();
    convert->add_option("--to", to, "event-structure or multicontact")
        ->required()
        ->check(CLI::IsMember({"event-structure", "multicontact"}));
    add_common(convert, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    mcsl_result* r = nullptr;
    const mcsl_guard* g = &common.guard;
    if (check->parsed() || embed->parsed() || convert->parsed()) {
        mcsl_document* doc = load(file);
        if (!doc) return error_exit();
        mcsl_status s;
        if (check->parsed())
            s = mcsl_check(doc, m1_plus_rows, m2_rows, g, &r);
        else if (embed->parsed())
            s = mcsl_embed(doc, mode == "overlap" ? MCSL_MODE_OVERLAP : MCSL_MODE_SMALLEST, bounded, g, &r);
        else
            s = mcsl_convert(doc, to.c_str(), &r);
        mcsl_document_free(doc);
        return finish(s, r, common.json);
    }
    if (enumerate->parsed()) {
        mcsl_document* doc = nullptr;
        if (!base.empty() && !(doc = load(base))) return error_exit();
        const mcsl_status s = mcsl_enumerate(kind.c_str(), size, doc, up_to_iso, g, &r);
        mcsl_document_free(doc);
        return finish(s, r, common.json);
    }
    mcsl_status s;
    if (catalog->parsed())
        s = mcsl_catalog(name.empty() ? nullptr : name.c_str(), emit, &r);
    else
        s = mcsl_verify_theorems(theorem.empty() ? nullptr : theorem.c_str(), max_n, up_to_iso, threads, g, &r);
    return finish(s, r, common.json);
}
