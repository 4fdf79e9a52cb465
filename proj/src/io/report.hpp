#pragma once

#include <string>

#include <json.hpp>

#include "core/embedding.hpp"
#include "explore/explorer.hpp"
#include "io/dsl.hpp"

namespace mcsl::report {

inline constexpr const char* kVersion = "0.1.0";

/// Rendered result of one command. verdict: 0 every check passed, 1 some failed.
struct Output {
    int verdict = 0;
    nlohmann::ordered_json json;
    std::string text;
};

/// A path, or "catalog:<name>" for a named structure.
dsl::Document load_document(const std::string& source);

struct CheckOptions {
    int m1_plus_rows = 2;
    int m2_rows = 2;
    Guard guard;
};
Output check(const dsl::Document& doc, const CheckOptions& options);

struct EmbedOptions {
    EmbeddingMode mode = EmbeddingMode::overlap;
    bool bounded = false;
    Guard guard;
};
Output embed(const dsl::Document& doc, const EmbedOptions& options);

/// Kinds: semilattices, multicontacts, weak-contacts, preclosures,
/// event-structures, expansions. Sized kinds use `size`; the rest read the
/// first matching block of `base` (multicontacts and weak-contacts accept either).
struct EnumerateOptions {
    std::string kind;
    int size = 0;
    const dsl::Document* base = nullptr;
    bool up_to_iso = false;
    Guard guard;
};
Output enumerate(const EnumerateOptions& options);

/// Without a name: the list of entries. With `emit`, the text is the DSL source.
Output catalog(const std::string& name, bool emit);

struct TheoremOptions {
    HarnessOptions harness;
    std::string theorem;  // empty: every harness plus the catalog regressions
};
Output verify_theorems(const TheoremOptions& options);

/// to: "event-structure" or "multicontact".
Output convert(const dsl::Document& doc, const std::string& to);

std::string render_json(const Output& out);

}  // namespace mcsl::report
