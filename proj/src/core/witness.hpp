#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/bits.hpp"

namespace mcsl {

/// One named component of a counterexample: an element, a set of elements,
/// or a list of sets (a row system).
struct WitnessItem {
    std::string role;
    std::variant<int, ElementSet, std::vector<ElementSet>> value;

    bool operator==(const WitnessItem&) const = default;
};

using Witness = std::vector<WitnessItem>;

inline WitnessItem element_item(std::string role, int e) { return {std::move(role), e}; }
inline WitnessItem set_item(std::string role, ElementSet s) { return {std::move(role), s}; }
inline WitnessItem rows_item(std::string role, std::vector<ElementSet> rows) {
    return {std::move(role), std::move(rows)};
}

const WitnessItem* find_item(const Witness& w, const std::string& role);
int witness_element(const Witness& w, const std::string& role);
ElementSet witness_set(const Witness& w, const std::string& role);
const std::vector<ElementSet>& witness_rows(const Witness& w, const std::string& role);

/// Labels of the elements of `s`, in index order.
std::vector<std::string> labels_of(ElementSet s, const std::vector<std::string>& labels);
/// "a=x, F={y,z}" with element labels.
std::string format_witness(const Witness& w, const std::vector<std::string>& labels);

enum class Completeness {
    complete,          // exhaustive over the full quantifier range
    bounded,           // exhaustive up to a stated bound only
};

/// Verdict of one condition or axiom. When `holds` is false the witness is a
/// concrete violation.
struct ConditionReport {
    std::string condition;
    bool holds = true;
    std::optional<Witness> witness;
    int bound = 0;  // row or cardinality bound, 0 when unbounded
    Completeness completeness = Completeness::complete;

    bool operator==(const ConditionReport&) const = default;
};

}  // namespace mcsl
