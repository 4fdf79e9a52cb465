#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/contact.hpp"
#include "core/order.hpp"

namespace mcsl::dsl {

enum class BlockType { semilattice, poset, multicontact, weakcontact, preclosure, eventstructure };
const char* to_string(BlockType t);

using LabelPair = std::pair<std::string, std::string>;
using LabelSet = std::vector<std::string>;

/// One declaration. Parsing normalizes it: order holds the cover pairs, zero
/// is filled in, sets and pairs are sorted by element position and deduplicated.
struct Block {
    BlockType type = BlockType::semilattice;
    std::string name;
    int line = 0;

    std::vector<std::string> elements;  // events for an event structure
    std::string zero;
    std::vector<LabelPair> order;

    std::string base;
    std::string kind;                 // multicontact only
    std::vector<LabelSet> sets;       // multicontact sets, event structure con
    std::vector<LabelPair> pairs;     // weak contact
    bool explicit_pairs = false;
    std::vector<LabelPair> map;       // pre-closure, one entry per element

    bool operator==(const Block& o) const;
};

struct Document {
    std::vector<Block> blocks;

    const Block* find(std::string_view name) const;
    bool operator==(const Document&) const = default;
};

/// Syntax errors and label errors carry "line N:".
Document parse(std::string_view text);
std::string serialize(const Document& doc);

/// Labels: letters, digits and _ . + '
bool valid_label(std::string_view s);

// Resolved structures, keyed by block name.

struct Base {
    Poset poset;
    std::optional<JoinSemilattice> semilattice;
};

struct ResolvedMulticontact {
    std::string base;
    Multicontact delta;
};

struct ResolvedWeakContact {
    std::string base;
    WeakContact delta;
};

struct ResolvedPreClosure {
    std::string base;
    PreClosure k;
};

struct Model {
    std::vector<std::string> order;  // block names in declaration order
    std::map<std::string, Base> bases;
    std::map<std::string, ResolvedMulticontact> multicontacts;
    std::map<std::string, ResolvedWeakContact> weak_contacts;
    std::map<std::string, ResolvedPreClosure> preclosures;
    std::map<std::string, EventStructure> event_structures;

    const Base& base_of(const std::string& contact_base) const { return bases.at(contact_base); }
};

/// Builds every declared structure. Explicit blocks are validated strictly; a
/// violated axiom is an input error naming the axiom and its witness.
Model resolve(const Document& doc, const Guard& guard = {});

// Blocks from structures, for emitting.

Block order_block(const std::string& name, const Poset& p, bool semilattice);
/// kind=generators with the maximal antichain generators.
Block generators_block(const std::string& name, const std::string& base, const Multicontact& d);
/// kind=explicit with every nonempty member.
Block explicit_block(const std::string& name, const std::string& base, const Multicontact& d);
/// explicit-pairs with every related pair off the diagonal.
Block weak_contact_block(const std::string& name, const std::string& base, const WeakContact& d);
Block preclosure_block(const std::string& name, const std::string& base, const PreClosure& k);
Block event_structure_block(const std::string& name, const EventStructure& e);

}  // namespace mcsl::dsl
