#include <doctest.h>

#include <vector>

#include "core/conditions.hpp"
#include "oracles.hpp"

using namespace mcsl;

namespace {

ElementSet set_of(const Poset& p, std::initializer_list<const char*> labels) {
    ElementSet s = 0;
    for (const char* l : labels) s |= bit(*p.find(l));
    return s;
}

int el(const Poset& p, const char* l) { return *p.find(l); }

// Definition replays.

bool additivity_violated(const JoinSemilattice& s, const Multicontact& d, int p, int q, ElementSet rest) {
    return d.contains(rest | bit(s.join(p, q))) && !d.contains(rest | bit(p)) && !d.contains(rest | bit(q));
}

bool m1_violated(const JoinSemilattice& s, const Multicontact& d, int a, int b, ElementSet f) {
    if (d.contains(f) || s.leq(b, a)) return false;
    for (int x : elements_of(f))
        if (!s.leq(b, s.join(a, x))) return false;
    return true;
}

bool oracle_additive(const JoinSemilattice& s, const Multicontact& d) {
    const ElementSet nz = s.poset().nonzero();
    for (ElementSet r = 0; r <= nz; ++r) {
        if (r & ~nz) continue;
        for (int p = 0; p < s.size(); ++p)
            for (int q = 0; q < s.size(); ++q)
                if (additivity_violated(s, d, p, q, r)) return false;
    }
    return true;
}

bool oracle_m1(const JoinSemilattice& s, const Multicontact& d) {
    const ElementSet nz = s.poset().nonzero();
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
            for (ElementSet f = 1; f <= nz; ++f)
                if (!(f & ~nz) && m1_violated(s, d, a, b, f)) return false;
    return true;
}

std::vector<JoinSemilattice> sweep_bases() {
    return {catalog::chain(3), catalog::chain(4), catalog::boolean(2), catalog::modular(3), catalog::n5()};
}

}  // namespace

TEST_CASE("additivity counterexamples replay") {
    const JoinSemilattice m3 = catalog::modular(3);
    const Poset& p3 = m3.poset();
    const Multicontact o3 = overlap_multicontact(p3);
    const auto r = check_additivity(m3, o3);
    REQUIRE_FALSE(r.holds);
    CHECK(additivity_violated(m3, o3, witness_element(*r.witness, "p"), witness_element(*r.witness, "q"),
                              witness_set(*r.witness, "rest")));
    // b + c = 1 meets a, while neither b nor c does.
    CHECK(additivity_violated(m3, o3, el(p3, "a2"), el(p3, "a3"), set_of(p3, {"a1"})));

    const JoinSemilattice m4 = catalog::modular(4);
    const Poset& p4 = m4.poset();
    std::vector<std::pair<int, int>> all_pairs;
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) all_pairs.emplace_back(x, y);
    const Multicontact ds = from_weak_contact_smallest(WeakContact::from_pairs(p4, all_pairs, true));
    CHECK_FALSE(check_additivity(m4, ds).holds);
    CHECK(additivity_violated(m4, ds, el(p4, "a3"), el(p4, "a4"), set_of(p4, {"a1", "a2"})));

    const JoinSemilattice b8 = catalog::boolean(3);
    const Poset& p8 = b8.poset();
    const Multicontact dl = from_weak_contact_largest(WeakContact::overlap(p8));
    CHECK_FALSE(check_additivity(b8, dl).holds);
    CHECK(additivity_violated(b8, dl, el(p8, "a2"), el(p8, "a3"), set_of(p8, {"c2", "c3"})));
}

TEST_CASE("M1 counterexamples replay") {
    const JoinSemilattice m3 = catalog::modular(3);
    const Poset& p3 = m3.poset();
    const Multicontact o3 = overlap_multicontact(p3);
    const auto r = check_m1(m3, o3);
    REQUIRE_FALSE(r.holds);
    CHECK(m1_violated(m3, o3, witness_element(*r.witness, "a"), witness_element(*r.witness, "b"),
                      witness_set(*r.witness, "F")));
    CHECK(m1_violated(m3, o3, el(p3, "a1"), el(p3, "a2"), set_of(p3, {"a2", "a3"})));

    const JoinSemilattice m4 = catalog::modular(4);
    const Poset& p4 = m4.poset();
    const Multicontact d2 = delta_n(p4, 2);
    CHECK_FALSE(check_m1(m4, d2).holds);
    CHECK(m1_violated(m4, d2, el(p4, "a4"), el(p4, "a1"), set_of(p4, {"a1", "a2", "a3"})));
    CHECK(check_m1_restricted(m4, d2, 2).holds);
    CHECK_FALSE(check_m1_restricted(m4, d2, 3).holds);
    CHECK(check_m1_restricted(m4, d2, 2).completeness == Completeness::bounded);
    CHECK(check_m1_restricted(m4, d2, 5).completeness == Completeness::complete);
}

TEST_CASE("additivity and M1 agree with the definitions on every multicontact of small bases") {
    int additive = 0, non_additive = 0, m1 = 0, non_m1 = 0;
    for (const JoinSemilattice& s : sweep_bases()) {
        for (const auto& fam : oracle::all_multicontacts(s.poset())) {
            const Multicontact d = Multicontact::from_family(s.poset(), fam);
            const bool add = oracle_additive(s, d), ok1 = oracle_m1(s, d);
            CHECK(check_additivity(s, d).holds == add);
            CHECK(check_m1(s, d).holds == ok1);
            CHECK(check_m1_restricted(s, d, 16).holds == ok1);
            CHECK(check_m1_plus(s, d, 1).holds == ok1);
            if (ok1) CHECK(check_m1_plus(s, d, 3).holds);
            CHECK(check_m2(s, d, 2).holds == add);
            CHECK(check_m2(s, d, 3).holds == add);
            (add ? additive : non_additive)++;
            (ok1 ? m1 : non_m1)++;
        }
    }
    // Both verdicts occur, so the sweep is not vacuous.
    CHECK(additive > 0);
    CHECK(non_additive > 0);
    CHECK(m1 > 0);
    CHECK(non_m1 > 0);
}

TEST_CASE("distributive lattices satisfy M1 for every multicontact") {
    for (const JoinSemilattice& s : {catalog::chain(4), catalog::boolean(2)})
        for (const auto& fam : oracle::all_multicontacts(s.poset()))
            CHECK(check_m1(s, Multicontact::from_family(s.poset(), fam)).holds);
}

TEST_CASE("bounded M1+ and M2 witnesses replay") {
    const JoinSemilattice m3 = catalog::modular(3);
    const Multicontact o3 = overlap_multicontact(m3.poset());
    const auto plus = check_m1_plus(m3, o3, 2);
    REQUIRE_FALSE(plus.holds);
    const int a = witness_element(*plus.witness, "a"), b = witness_element(*plus.witness, "b");
    const auto& rows = witness_rows(*plus.witness, "rows");
    CHECK_FALSE(m3.leq(b, a));
    for (ElementSet row : rows) CHECK_FALSE(o3.contains(row));
    for (int x : elements_of(selection_sums(m3, rows, a))) CHECK(m3.leq(b, x));

    const auto m2 = check_m2(m3, o3, 2);
    REQUIRE_FALSE(m2.holds);
    const ElementSet target = witness_set(*m2.witness, "target");
    CHECK(o3.contains(target));
    const ElementSet sums = selection_sums(m3, witness_rows(*m2.witness, "rows"), m3.zero());
    for (int x : elements_of(sums)) CHECK((m3.poset().down(x) & target) != 0);

    CHECK_THROWS_AS(check_m2(m3, o3, 1), Error);
}

TEST_CASE("selection-sum claim") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Poset& p = b2.poset();
    const Multicontact o = overlap_multicontact(p);
    const ElementSet ab = set_of(p, {"a", "b"});
    const std::vector<ElementSet> non_members{ab, ab};
    const auto v = check_selection_claim(b2, o, non_members);
    CHECK_FALSE(v.some_row_member);
    CHECK_FALSE(v.sums_member);
    CHECK(v.sums == (set_of(p, {"a", "b", "1"})));

    const std::vector<ElementSet> one_member{ab, set_of(p, {"a", "1"})};
    const auto w = check_selection_claim(b2, o, one_member);
    CHECK(w.some_row_member);
    CHECK(w.sums_member);

    // Exhaustive on additive multicontacts of small bases, arbitrary rows.
    for (const JoinSemilattice& s : {catalog::chain(3), catalog::boolean(2)}) {
        const ElementSet nz = s.poset().nonzero();
        for (const auto& fam : oracle::all_multicontacts(s.poset())) {
            const Multicontact d = Multicontact::from_family(s.poset(), fam);
            if (!check_additivity(s, d).holds) continue;
            for (ElementSet r1 = 1; r1 <= nz; ++r1)
                for (ElementSet r2 = r1; r2 <= nz; ++r2) {
                    if ((r1 | r2) & ~nz) continue;
                    const std::vector<ElementSet> rows{r1, r2};
                    CHECK(check_selection_claim(s, d, rows).equivalent());
                }
        }
    }
}

TEST_CASE("row systems reject members") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Multicontact o = overlap_multicontact(b2.poset());
    CHECK_THROWS_AS(RowSystem::make(o, {set_of(b2.poset(), {"a"})}), Error);
    CHECK(RowSystem::make(o, {set_of(b2.poset(), {"a", "b"})}).rows().size() == 1);
}

TEST_CASE("modular embedding condition") {
    const JoinSemilattice n5 = catalog::n5();
    const auto r = check_modular_condition(n5, overlap_multicontact(n5.poset()));
    REQUIRE_FALSE(r.holds);
    const Witness& w = *r.witness;
    const int a = witness_element(w, "a"), b = witness_element(w, "b"), c = witness_element(w, "c"),
              d = witness_element(w, "d");
    CHECK_FALSE(overlap_multicontact(n5.poset()).contains(bit(d) | bit(n5.join(a, c))));
    CHECK(n5.leq(b, n5.join(a, c)));
    CHECK(n5.leq(b, n5.join(a, d)));
    CHECK_FALSE(n5.leq(b, a));
    CHECK_FALSE(check_modular_condition(n5, WeakContact::overlap(n5.poset())).holds);

    const JoinSemilattice m3 = catalog::modular(3);
    CHECK(check_modular_condition(m3, overlap_multicontact(m3.poset())).holds);
}

TEST_CASE("size guards") {
    const JoinSemilattice m4 = catalog::modular(4);
    Guard tight;
    tight.carrier = 4;
    try {
        check_additivity(m4, overlap_multicontact(m4.poset()), tight);
        FAIL("expected a guard error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::guard);
    }
}
