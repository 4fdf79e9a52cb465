#pragma once

#include <span>
#include <vector>

#include "core/contact.hpp"
#include "core/order.hpp"
#include "core/witness.hpp"

namespace mcsl {

// Every checker quantifies over sets rather than sequences: membership and
// joins depend only on the underlying set of a tuple. Witnesses are the first
// violation in the documented loop order, which makes output deterministic.
// None of them claim global minimality.

/// Nonempty rows, each a non-member. Duplicate rows are allowed.
class RowSystem {
public:
    static RowSystem make(const Multicontact& d, std::vector<ElementSet> rows);
    const std::vector<ElementSet>& rows() const { return rows_; }

private:
    std::vector<ElementSet> rows_;
};

/// Joins of one element chosen from each row, over every compatible choice,
/// each joined with `start`.
ElementSet selection_sums(const JoinSemilattice& s, std::span<const ElementSet> rows, int start);

/// (Add): {p+q} u R member implies {p} u R or {q} u R member.
/// Loop order: R by increasing bitmask, then p, then q. Witness (p, q, rest).
ConditionReport check_additivity(const JoinSemilattice& s, const Multicontact& d, const Guard& guard = {});

/// (M1): b <= a + x for every x in a non-member F implies b <= a.
/// Loop order: a, b, then F by increasing bitmask. Witness (a, b, F).
ConditionReport check_m1(const JoinSemilattice& s, const Multicontact& d, const Guard& guard = {});

/// (M1) restricted to |F| <= n_max.
ConditionReport check_m1_restricted(const JoinSemilattice& s, const Multicontact& d, int n_max,
                                    const Guard& guard = {});

/// (M1+) for row systems of at most n_max rows. Witness (a, b, rows).
ConditionReport check_m1_plus(const JoinSemilattice& s, const Multicontact& d, int n_max,
                              const Guard& guard = {});

/// (M2) for row systems of at most n_max rows, n_max >= 2. Witness (target, rows).
ConditionReport check_m2(const JoinSemilattice& s, const Multicontact& d, int n_max, const Guard& guard = {});

struct ClaimVerdict {
    bool some_row_member = false;   // clause (1)
    bool sums_member = false;       // clause (2)
    ElementSet sums = 0;
    bool equivalent() const { return some_row_member == sums_member; }
};

/// Evaluates both sides of the selection-sum claim for arbitrary rows.
ClaimVerdict check_selection_claim(const JoinSemilattice& s, const Multicontact& d,
                                   std::span<const ElementSet> rows);

/// Necessary condition for embedding into a modular lattice:
/// {d, a+c} non-member, b <= a+c and b <= a+d imply b <= a.
/// Loop order: a, b, c, d. Witness (a, b, c, d).
ConditionReport check_modular_condition(const JoinSemilattice& s, const Multicontact& d, const Guard& guard = {});
/// Binary form: d not related to a+c.
ConditionReport check_modular_condition(const JoinSemilattice& s, const WeakContact& d);

}  // namespace mcsl
