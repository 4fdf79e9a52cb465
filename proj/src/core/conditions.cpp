#include "core/conditions.hpp"

#include <algorithm>

namespace mcsl {

namespace {

ConditionReport pass(std::string name, int bound = 0, Completeness c = Completeness::complete) {
    return ConditionReport{std::move(name), true, std::nullopt, bound, c};
}

void require_semilattice_guard(const JoinSemilattice& s, const Multicontact& d, const Guard& guard) {
    if (d.base().size() != s.size() || !d.base().same_order(s.poset()))
        throw Error(ErrorKind::input, "multicontact is not defined on this semilattice");
    require_guard(s.size() <= guard.carrier, "condition check needs carrier <= " + std::to_string(guard.carrier));
    d.materialize();
}

// Nondecreasing index tuples of length 1..max_rows over `count` rows, in
// order of length then lexicographic.
template <class F>
bool for_each_row_system(int count, int max_rows, F&& f) {
    std::vector<int> idx;
    for (int k = 1; k <= max_rows; ++k) {
        if (count == 0) return false;
        idx.assign(k, 0);
        while (true) {
            if (f(idx)) return true;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == count - 1) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k; ++j) idx[j] = idx[pos];
        }
    }
    return false;
}

void guard_row_systems(std::size_t rows, int n_max) {
    // Multisets of size <= n_max drawn from `rows` candidates.
    double total = 0, term = 1;
    for (int k = 1; k <= n_max; ++k) {
        term = term * static_cast<double>(rows + k - 1) / k;
        total += term;
    }
    require_guard(total <= 2e7, "row systems exceed 2e7; lower the row bound");
}

std::vector<ElementSet> pick(const std::vector<ElementSet>& rows, const std::vector<int>& idx) {
    std::vector<ElementSet> out;
    for (int i : idx) out.push_back(rows[i]);
    return out;
}

}  // namespace

RowSystem RowSystem::make(const Multicontact& d, std::vector<ElementSet> rows) {
    for (ElementSet r : rows) {
        if (r == 0) throw Error(ErrorKind::input, "row system has an empty row");
        if (d.contains(r)) throw Error(ErrorKind::input, "row system row is a member");
    }
    RowSystem rs;
    rs.rows_ = std::move(rows);
    return rs;
}

ElementSet selection_sums(const JoinSemilattice& s, std::span<const ElementSet> rows, int start) {
    ElementSet sums = bit(start);
    for (ElementSet row : rows) {
        ElementSet next = 0;
        for (int x : elements_of(sums)) next |= s.join_each(row, x);
        sums = next;
    }
    return sums;
}

ConditionReport check_additivity(const JoinSemilattice& s, const Multicontact& d, const Guard& guard) {
    require_semilattice_guard(s, d, guard);
    const int n = s.size();
    const ElementSet nz = s.poset().nonzero();
    for (ElementSet rest = 0;; rest = (rest - nz) & nz) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (d.contains(bit(s.join(p, q)) | rest) && !d.contains(bit(p) | rest) && !d.contains(bit(q) | rest))
                    return ConditionReport{"Add", false,
                                           Witness{element_item("p", p), element_item("q", q), set_item("rest", rest)}};
        if (rest == nz) break;
    }
    return pass("Add");
}

namespace {

ConditionReport m1_scan(const JoinSemilattice& s, const Multicontact& d, int n_max, std::string name) {
    const int n = s.size();
    const ElementSet nz = s.poset().nonzero();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (s.leq(b, a)) continue;
            // Elements x with b <= a + x; F ranges over their nonempty subsets.
            ElementSet candidates = 0;
            for (int x : elements_of(nz))
                if (s.leq(b, s.join(a, x))) candidates |= bit(x);
            std::optional<ElementSet> found;
            for_each_subset(candidates, [&](ElementSet f) {
                if (!found && f != 0 && popcount(f) <= n_max && !d.contains(f)) found = f;
            });
            if (found)
                return ConditionReport{name, false,
                                       Witness{element_item("a", a), element_item("b", b), set_item("F", *found)},
                                       n_max >= popcount(nz) ? 0 : n_max,
                                       n_max >= popcount(nz) ? Completeness::complete : Completeness::bounded};
        }
    const bool full = n_max >= popcount(nz);
    return pass(std::move(name), full ? 0 : n_max, full ? Completeness::complete : Completeness::bounded);
}

}  // namespace

ConditionReport check_m1(const JoinSemilattice& s, const Multicontact& d, const Guard& guard) {
    require_semilattice_guard(s, d, guard);
    return m1_scan(s, d, kMaxCarrier, "M1");
}

ConditionReport check_m1_restricted(const JoinSemilattice& s, const Multicontact& d, int n_max, const Guard& guard) {
    if (n_max < 1) throw Error(ErrorKind::input, "restricted M1 needs n_max >= 1");
    require_semilattice_guard(s, d, guard);
    return m1_scan(s, d, n_max, "M1");
}

ConditionReport check_m1_plus(const JoinSemilattice& s, const Multicontact& d, int n_max, const Guard& guard) {
    if (n_max < 1) throw Error(ErrorKind::input, "M1+ needs a row bound >= 1");
    require_semilattice_guard(s, d, guard);
    // Shrinking a row to a non-member subset removes selections and so only
    // weakens the premise: minimal non-members are enough as rows.
    const auto rows = minimal_non_members(d, guard);
    guard_row_systems(rows.size(), n_max);
    const Poset& p = s.poset();
    const int n = s.size();
    for (int a = 0; a < n; ++a) {
        int best_b = n;
        std::vector<int> best_idx;
        for_each_row_system(static_cast<int>(rows.size()), n_max, [&](const std::vector<int>& idx) {
            const auto system = pick(rows, idx);
            ElementSet below = p.carrier();
            for (int sum : elements_of(selection_sums(s, system, a))) below &= p.down(sum);
            const ElementSet violating = below & ~p.down(a);
            if (violating && lowest(violating) < best_b) {
                best_b = lowest(violating);
                best_idx = idx;
            }
            return false;
        });
        if (best_b < n)
            return ConditionReport{"M1+", false,
                                   Witness{element_item("a", a), element_item("b", best_b),
                                           rows_item("rows", pick(rows, best_idx))},
                                   n_max, Completeness::bounded};
    }
    return pass("M1+", n_max, Completeness::bounded);
}

ConditionReport check_m2(const JoinSemilattice& s, const Multicontact& d, int n_max, const Guard& guard) {
    if (n_max < 2) throw Error(ErrorKind::input, "M2 needs a row bound >= 2");
    require_semilattice_guard(s, d, guard);
    // As for M1+, minimal non-member rows are enough.
    const auto rows = minimal_non_members(d, guard);
    guard_row_systems(rows.size(), n_max);
    const Poset& p = s.poset();
    const auto& members = d.members();
    std::optional<ConditionReport> violation;
    for_each_row_system(static_cast<int>(rows.size()), n_max, [&](const std::vector<int>& idx) {
        const auto system = pick(rows, idx);
        const auto sums = elements_of(selection_sums(s, system, s.zero()));
        for (ElementSet target : members) {
            const bool premise = std::all_of(sums.begin(), sums.end(),
                                             [&](int sum) { return (target & p.down(sum)) != 0; });
            if (premise) {
                violation = ConditionReport{"M2", false,
                                            Witness{set_item("target", target), rows_item("rows", system)},
                                            n_max, Completeness::bounded};
                return true;
            }
        }
        return false;
    });
    return violation ? *violation : pass("M2", n_max, Completeness::bounded);
}

ClaimVerdict check_selection_claim(const JoinSemilattice& s, const Multicontact& d, std::span<const ElementSet> rows) {
    ClaimVerdict v;
    v.some_row_member = std::any_of(rows.begin(), rows.end(), [&](ElementSet r) { return d.contains(r); });
    v.sums = selection_sums(s, rows, s.zero());
    v.sums_member = d.contains(v.sums);
    return v;
}

namespace {

template <class NotInContact>
ConditionReport modular_scan(const JoinSemilattice& s, NotInContact&& apart) {
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (s.leq(b, a)) continue;
            for (int c = 0; c < n; ++c) {
                const int ac = s.join(a, c);
                if (!s.leq(b, ac)) continue;
                for (int e = 0; e < n; ++e)
                    if (s.leq(b, s.join(a, e)) && apart(e, ac))
                        return ConditionReport{"Modular", false,
                                               Witness{element_item("a", a), element_item("b", b),
                                                       element_item("c", c), element_item("d", e)}};
            }
        }
    return pass("Modular");
}

}  // namespace

ConditionReport check_modular_condition(const JoinSemilattice& s, const Multicontact& d, const Guard& guard) {
    require_semilattice_guard(s, d, guard);
    return modular_scan(s, [&](int e, int ac) { return !d.contains(bit(e) | bit(ac)); });
}

ConditionReport check_modular_condition(const JoinSemilattice& s, const WeakContact& d) {
    if (!d.base().same_order(s.poset())) throw Error(ErrorKind::input, "weak contact is not defined on this semilattice");
    return modular_scan(s, [&](int e, int ac) { return !d.related(e, ac); });
}

}  // namespace mcsl
