#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/bits.hpp"

namespace mcsl {

/// Finite poset with a minimum element. Elements are dense indices 0..n-1.
class Poset {
public:
    /// Builds the reflexive-transitive closure of `pairs` (each (lo, hi) means
    /// lo <= hi). Throws ErrorKind::input on a cycle, a missing minimum, or a
    /// zero_hint that is not the minimum.
    static Poset from_relation(int n, std::span<const std::pair<int, int>> pairs,
                               std::optional<int> zero_hint = std::nullopt,
                               std::vector<std::string> labels = {});

    /// Builds from rows where up[a] is the set of elements >= a (already closed).
    static Poset from_up_sets(std::vector<ElementSet> up, std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(up_.size()); }
    bool leq(int a, int b) const { return has(up_[a], b); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    ElementSet up(int a) const { return up_[a]; }
    ElementSet down(int a) const { return down_[a]; }
    int zero() const { return zero_; }
    std::optional<int> top() const { return top_; }
    ElementSet carrier() const { return full_set(size()); }
    ElementSet nonzero() const { return carrier() & ~bit(zero_); }

    /// Common lower bounds of every element of f (the whole carrier for f = {}).
    ElementSet lower_bounds(ElementSet f) const;
    /// Common upper bounds of every element of f.
    ElementSet upper_bounds(ElementSet f) const;
    /// Union of the principal up-sets of f: the sets Cof-dominated by f are its subsets.
    ElementSet up_closure(ElementSet f) const;
    ElementSet down_closure(ElementSet f) const;

    bool is_antichain(ElementSet f) const;
    /// Cover pairs (lo, hi), lo < hi with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> find(std::string_view label) const;

    bool operator==(const Poset& o) const { return up_ == o.up_ && labels_ == o.labels_; }
    /// Equality of the order only, ignoring labels.
    bool same_order(const Poset& o) const { return up_ == o.up_; }

private:
    Poset() = default;
    void finish();

    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<std::string> labels_;
    int zero_ = 0;
    std::optional<int> top_;
};

/// Join semilattice with 0; the join table is materialized eagerly.
class JoinSemilattice {
public:
    /// Throws ErrorKind::input naming the first pair without a least upper bound.
    static JoinSemilattice from_poset(Poset p);

    const Poset& poset() const { return poset_; }
    int size() const { return poset_.size(); }
    int zero() const { return poset_.zero(); }
    bool leq(int a, int b) const { return poset_.leq(a, b); }
    int join(int a, int b) const { return join_[a * size() + b]; }
    /// Join of a set; the join of {} is 0.
    int join_of(ElementSet f) const;
    /// Join of every element of `from` with x, as a set.
    ElementSet join_each(ElementSet from, int x) const;
    /// Greatest common lower bound of a nonempty set, if one exists.
    std::optional<int> meet_of(ElementSet f) const;
    const std::string& label(int a) const { return poset_.label(a); }

    bool operator==(const JoinSemilattice& o) const { return poset_ == o.poset_; }

private:
    explicit JoinSemilattice(Poset p) : poset_(std::move(p)) {}

    Poset poset_;
    std::vector<int> join_;
};

enum class Tri { unknown, no, yes };

inline Tri tri(bool b) { return b ? Tri::yes : Tri::no; }
const char* to_string(Tri t);

struct StructureFlags {
    Tri is_lattice = Tri::unknown;
    Tri is_distributive_lattice = Tri::unknown;
    Tri is_modular_lattice = Tri::unknown;
    Tri is_semidistributive_at_zero = Tri::unknown;
    Tri is_distributive_join_semilattice = Tri::unknown;
};

/// All five structural predicates. Semidistributivity at 0 quantifies over
/// subsets and is left unknown beyond guard.carrier.
StructureFlags structural_predicates(const JoinSemilattice& s, const Guard& guard = {});

bool is_lattice(const JoinSemilattice& s);
bool is_distributive_lattice(const JoinSemilattice& s);
bool is_modular_lattice(const JoinSemilattice& s);
bool is_semidistributive_at_zero(const JoinSemilattice& s, const Guard& guard = {});
bool is_distributive_join_semilattice(const JoinSemilattice& s);

struct AtomInfo {
    ElementSet atoms = 0;
    /// Every nonzero element dominates some atom.
    bool atomic = true;
};

AtomInfo atoms(const Poset& p);

namespace catalog {

/// 0 < a < b < ... with k elements.
JoinSemilattice chain(int k);
/// Boolean lattice with k atoms. k = 2 is labeled 0 a b 1; k = 3 is labeled
/// 0 a1 a2 a3 c1 c2 c3 1 with c_i the join of the two other atoms.
JoinSemilattice boolean(int k);
/// Height-two modular lattice with r atoms a1..ar.
JoinSemilattice modular(int r);
/// Pentagon 0 < a < b < 1, 0 < d < 1.
JoinSemilattice n5();
/// Subsets of points x1..xk under union; element index = subset bitmask.
JoinSemilattice powerset(int k);
/// Product of chains with the given lengths, componentwise order.
JoinSemilattice product(std::span<const int> lengths);

/// Named lookup: chain, boolean, M, N5, powerset, product.
JoinSemilattice by_name(std::string_view name, std::span<const int> params);

}  // namespace catalog

}  // namespace mcsl
