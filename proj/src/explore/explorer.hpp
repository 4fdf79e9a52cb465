#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/contact.hpp"
#include "core/order.hpp"

namespace mcsl {

// Enumerations are labeled, exhaustive and duplicate-free, in a fixed order.

/// Partial orders on n labeled points as up-set tables (no minimum required).
std::vector<std::vector<ElementSet>> enumerate_orders(int n);

/// Join semilattices with 0 on n labeled elements. With up_to_iso, only the
/// first structure of each isomorphism class is kept.
std::vector<JoinSemilattice> enumerate_semilattices(int n, bool up_to_iso = false, const Guard& guard = {});

/// Isomorphism-invariant code of a poset: the least up-set table over all relabelings.
std::vector<ElementSet> canonical_code(const Poset& p);

/// Every multicontact on p. The first one is the overlap multicontact.
std::vector<Multicontact> enumerate_multicontacts(const Poset& p, const Guard& guard = {});
std::vector<WeakContact> enumerate_weak_contacts(const Poset& p, const Guard& guard = {});
/// Multicontacts whose binary reduct is w.
std::vector<Multicontact> enumerate_expansions(const WeakContact& w, const Guard& guard = {});
/// Normal isotone maps.
std::vector<PreClosure> enumerate_preclosures(const Poset& p, const Guard& guard = {});
/// Event structures on `events` labeled events e1, e2, ...
std::vector<EventStructure> enumerate_event_structures(int events, const Guard& guard = {});

struct Discrepancy {
    std::string structure;  // replayable DSL text
    std::string expected;
    std::string got;

    bool operator==(const Discrepancy&) const = default;
    bool operator<(const Discrepancy& o) const;
};

struct HarnessReport {
    std::string id;
    std::string description;
    long examined = 0;
    std::vector<Discrepancy> discrepancies;  // sorted
    double elapsed_ms = 0;                   // text output only

    bool ok() const { return discrepancies.empty(); }
};

struct HarnessOptions {
    int max_n = 4;
    bool up_to_iso = false;
    int threads = 1;  // 0: one per hardware thread
    Guard guard;
};

/// Harness identifiers in run order.
const std::vector<std::string>& theorem_ids();
std::string theorem_description(std::string_view id);

/// Throws an input error for an unknown id.
HarnessReport verify_theorem(std::string_view id, const HarnessOptions& options = {});

/// Replays every catalog entry against its recorded verdicts.
HarnessReport run_catalog_regressions(const Guard& guard = {});

/// Evaluates one recorded check (see structures::Expectation) on a catalog entry.
bool evaluate_expectation(std::string_view entry, const std::string& check, const Guard& guard = {});

/// Replayable DSL text for a semilattice with an optional multicontact.
std::string encode_structure(const Poset& p, const Multicontact* d = nullptr);

}  // namespace mcsl
