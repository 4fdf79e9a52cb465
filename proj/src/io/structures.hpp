#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcsl::structures {

/// A recorded verdict. Checks are evaluated on the multicontact block "D"
/// (and the weak contact "w" for expansions):
///   Add, M1, Modular          plain conditions
///   M1[n<=k]                  M1 restricted to non-members of size <= k
///   embedding:overlap|smallest canonical embedding verifies
///   member:{x,y}              the set is a member
///   expansions:M1|Add         every expansion of w satisfies it (true) or none does (false)
struct Expectation {
    std::string check;
    bool value = true;
};

struct Entry {
    std::string name;
    std::string description;
    std::string text;  // DSL source
    std::vector<Expectation> expected;
};

/// Fixed entries in listing order.
const std::vector<Entry>& entries();
/// Fixed entries plus the M<r>-D<h> family (r >= h + 2).
std::optional<Entry> find(std::string_view name);

}  // namespace mcsl::structures
