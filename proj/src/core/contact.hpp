#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/order.hpp"
#include "core/witness.hpp"

namespace mcsl {

/// A multicontact on a finite poset: a membership oracle over finite sets of
/// elements, with an optional explicit family and lazily materialized table.
///
/// contains() applies the conventions uniformly: {} is a member and any set
/// holding 0 is not. raw_contains() exposes the underlying family unmodified,
/// which is what validation inspects.
class Multicontact {
public:
    using Oracle = std::function<bool(ElementSet)>;

    Multicontact(std::shared_ptr<const Poset> base, Oracle raw, std::string kind);

    /// Explicit family, taken as given (no closure). {} is always added.
    static Multicontact from_family(const Poset& base, std::vector<ElementSet> family,
                                    std::string kind = "explicit");

    const Poset& base() const { return *base_; }
    const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
    const std::string& kind() const { return kind_; }

    bool contains(ElementSet f) const;
    bool raw_contains(ElementSet f) const;

    /// Nonempty members, sorted. Materializes the table on first use; throws a
    /// guard error when the nonzero carrier exceeds kMaxMaterialized.
    const std::vector<ElementSet>& members() const;
    /// Forces the membership table; later contains() calls are lookups.
    void materialize() const;

    const std::optional<std::vector<ElementSet>>& explicit_family() const { return explicit_; }

    /// Antichain members that determine this multicontact by generation.
    const std::optional<std::vector<ElementSet>>& antichain_form() const { return antichains_; }
    Multicontact with_antichain_form(std::vector<ElementSet> antichains) const;

private:
    struct Table;

    std::shared_ptr<const Poset> base_;
    Oracle raw_;
    std::string kind_;
    std::optional<std::vector<ElementSet>> explicit_;
    std::optional<std::vector<ElementSet>> antichains_;
    std::shared_ptr<Table> table_;
};

/// Membership comparison over every subset of the carrier.
bool same_membership(const Multicontact& a, const Multicontact& b);
/// Every member of `a` is a member of `b`.
bool included(const Multicontact& a, const Multicontact& b);

struct ValidationReport {
    std::vector<ConditionReport> checks;
    bool valid() const;
    const ConditionReport& get(const std::string& name) const;
};

/// Emp, Sub, Mon, Ref plus the derived Ov, Cof, Ext, each with a witness on
/// failure.
ValidationReport validate_multicontact(const Multicontact& d);

/// Symmetric reflexive relation on nonzero elements closed under (Ext).
class WeakContact {
public:
    /// Pairs are unordered. With `close`, the relation is closed under
    /// reflexivity on nonzero elements and (Ext); otherwise it is taken as
    /// given apart from symmetry and reflexivity. Pairs touching 0 are rejected.
    static WeakContact from_pairs(const Poset& base, std::span<const std::pair<int, int>> pairs, bool close);
    static WeakContact overlap(const Poset& base);
    /// Rows as given; row[a] holds the elements related to a.
    static WeakContact from_rows(const Poset& base, std::vector<ElementSet> rows);

    const Poset& base() const { return *base_; }
    const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
    bool related(int a, int b) const { return has(rows_[a], b); }
    ElementSet row(int a) const { return rows_[a]; }
    /// Related unordered pairs a < b (index order), excluding the diagonal.
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const WeakContact& o) const { return rows_ == o.rows_; }

private:
    std::shared_ptr<const Poset> base_;
    std::vector<ElementSet> rows_;
};

/// Reflexive, Symmetric, Ext, and Zero (nothing related to 0).
ValidationReport validate_weak_contact(const WeakContact& d);

/// a d (b + c) implies a d b or a d c; witness (a, b, c).
ConditionReport weak_contact_additive(const WeakContact& d, const JoinSemilattice& s);

/// Normal isotone unary map on a poset.
class PreClosure {
public:
    /// Throws ErrorKind::input unless K(0) = 0 and K is isotone.
    static PreClosure make(const Poset& base, std::vector<int> k);

    const Poset& base() const { return *base_; }
    int operator()(int a) const { return k_[a]; }
    const std::vector<int>& table() const { return k_; }

    bool is_extensive() const { return extensive_; }
    bool is_weakly_extensive() const { return weakly_extensive_; }
    bool is_idempotent() const { return idempotent_; }
    /// K(x + y) = Kx + Ky; unknown when the base lacks binary joins.
    Tri is_additive() const { return additive_; }

private:
    std::shared_ptr<const Poset> base_;
    std::vector<int> k_;
    bool extensive_ = false;
    bool weakly_extensive_ = false;
    bool idempotent_ = false;
    Tri additive_ = Tri::unknown;
};

/// Events with a partial order and a consistency family. `con` holds the
/// nonempty consistent sets; {} is implied.
struct EventStructure {
    std::vector<std::string> events;
    std::vector<ElementSet> up;  // up[e]: events above e, reflexive and transitive
    std::vector<ElementSet> con;

    /// Validates the order and the consistency axioms (singletons, subsets,
    /// and (Mon) for the converse order).
    static EventStructure make(std::vector<std::string> events, std::span<const std::pair<int, int>> order,
                               std::vector<ElementSet> con);

    int size() const { return static_cast<int>(events.size()); }
    bool leq(int a, int b) const { return has(up[a], b); }
    bool operator==(const EventStructure&) const = default;
};

// Constructions.

Multicontact overlap_multicontact(const Poset& p);

/// Least multicontact containing the generators: a set is a member when some
/// generator or nonzero singleton Cof-dominates it.
Multicontact generate_multicontact(const Poset& p, std::span<const ElementSet> generators);

/// Least multicontact containing every nonzero set of size <= n.
Multicontact delta_n(const Poset& p, int n);

/// Pairwise related sets.
Multicontact from_weak_contact_largest(const WeakContact& d);
/// Sets covered by the up-sets of a related pair (p, q), p = q allowed.
Multicontact from_weak_contact_smallest(const WeakContact& d);

WeakContact binary_reduct(const Multicontact& d);

/// Sets x for which some y in delta_a has every element of x above an atom of y.
/// Requires an atomic base and a subset-closed delta_a with all atom singletons.
Multicontact atom_generated(const Poset& p, std::span<const ElementSet> delta_a);

/// Sets whose K-images share a nonzero lower bound. Requires K weakly extensive.
Multicontact preclosure_multicontact(const PreClosure& k);

/// Finite space given by point closures; the closure of a set is the union of
/// the closures of its points.
struct FiniteSpace {
    std::vector<std::string> points;
    std::vector<ElementSet> closure;  // closure[x] contains x

    static FiniteSpace make(std::vector<std::string> points, std::vector<ElementSet> closure);
    static FiniteSpace discrete(std::vector<std::string> points);
    int size() const { return static_cast<int>(points.size()); }
    ElementSet closure_of(ElementSet x) const;
};

/// The closures of all sets in the family meet. The empty family is a member.
bool topological_member(const FiniteSpace& x, std::span<const ElementSet> family);

/// The powerset semilattice of the points with the closure-intersection
/// multicontact. Element index of a subset is its bitmask.
std::pair<JoinSemilattice, Multicontact> topological_multicontact(const FiniteSpace& x,
                                                                  const Guard& guard = {});

/// Reverse the order, adjoin a bottom, and take con as the members.
std::pair<Poset, Multicontact> to_multicontact(const EventStructure& e);
/// Inverse of to_multicontact: drop 0 and reverse the order.
EventStructure to_event_structure(const Multicontact& d);

/// Nonempty antichain members.
std::vector<ElementSet> antichain_generators(const Multicontact& d);
/// Antichain members not Cof-dominated by a different antichain member.
std::vector<ElementSet> maximal_generators(const Multicontact& d);

/// Inclusion-minimal nonempty non-member subsets of the nonzero elements, in
/// increasing bitmask order. Empty exactly when every nonzero set is a member.
std::vector<ElementSet> minimal_non_members(const Multicontact& d, const Guard& guard = {});

}  // namespace mcsl
