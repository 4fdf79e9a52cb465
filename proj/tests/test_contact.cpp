#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core/contact.hpp"
#include "oracles.hpp"

using namespace mcsl;

namespace {

ElementSet set_of(const Poset& p, std::initializer_list<const char*> labels) {
    ElementSet s = 0;
    for (const char* l : labels) s |= bit(*p.find(l));
    return s;
}

// Least family satisfying the axioms and containing `gens`: the intersection
// of every brute-force multicontact that contains them.
std::vector<ElementSet> least_containing(const Poset& p, const std::vector<ElementSet>& gens) {
    std::vector<ElementSet> best;
    bool first = true;
    for (const auto& fam : oracle::all_multicontacts(p)) {
        if (!std::all_of(gens.begin(), gens.end(),
                         [&](ElementSet g) { return std::find(fam.begin(), fam.end(), g) != fam.end(); }))
            continue;
        if (first) {
            best = fam;
            first = false;
        } else {
            std::erase_if(best, [&](ElementSet s) { return std::find(fam.begin(), fam.end(), s) == fam.end(); });
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace

TEST_CASE("overlap multicontact membership") {
    const Poset b2 = catalog::boolean(2).poset();
    const Multicontact d = overlap_multicontact(b2);
    CHECK(d.contains(set_of(b2, {"a", "1"})));
    CHECK_FALSE(d.contains(set_of(b2, {"a", "b"})));
    CHECK(d.contains(0));
    CHECK_FALSE(d.contains(set_of(b2, {"0", "a"})));

    const Poset b8 = catalog::boolean(3).poset();
    CHECK_FALSE(overlap_multicontact(b8).contains(set_of(b8, {"c1", "c2", "c3"})));

    const Poset m3 = catalog::modular(3).poset();
    const Multicontact o3 = overlap_multicontact(m3);
    CHECK(o3.contains(set_of(m3, {"a1", "1"})));
    CHECK_FALSE(o3.contains(set_of(m3, {"a1", "a2"})));
    CHECK(validate_multicontact(o3).valid());
}

TEST_CASE("explicit families are validated with witnesses") {
    const Poset b2 = catalog::boolean(2).poset();
    const ElementSet a = set_of(b2, {"a"}), b = set_of(b2, {"b"}), one = set_of(b2, {"1"});

    const auto missing_a = validate_multicontact(Multicontact::from_family(b2, {b, one, b | one}));
    CHECK_FALSE(missing_a.get("Ref").holds);
    CHECK(witness_element(*missing_a.get("Ref").witness, "p") == *b2.find("a"));

    const auto with_zero = validate_multicontact(Multicontact::from_family(b2, {a, b, one, bit(0) | a}));
    CHECK_FALSE(with_zero.get("Emp").holds);
    CHECK(witness_set(*with_zero.get("Emp").witness, "set") == (bit(0) | a));

    const auto full = validate_multicontact(
        Multicontact::from_family(b2, {a, b, one, a | one, b | one, a | b, a | b | one}));
    CHECK(full.valid());
}

TEST_CASE("generation gives the least closed family") {
    const Poset b2 = catalog::boolean(2).poset();
    const ElementSet ab = set_of(b2, {"a", "b"});
    const Multicontact g = generate_multicontact(b2, std::vector<ElementSet>{ab});
    CHECK(g.members() == least_containing(b2, {ab}));
    CHECK(g.contains(ab | set_of(b2, {"1"})));

    CHECK(generate_multicontact(b2, std::vector<ElementSet>{}).members() == overlap_multicontact(b2).members());

    const Poset m4 = catalog::modular(4).poset();
    const Multicontact g3 = generate_multicontact(m4, std::vector<ElementSet>{set_of(m4, {"a1", "a2", "a3"})});
    CHECK(g3.contains(set_of(m4, {"a1", "a2", "a3", "1"})));
    CHECK_FALSE(g3.contains(set_of(m4, {"a1", "a2", "a3", "a4"})));

    const ElementSet bad = bit(0) | set_of(b2, {"a"});
    CHECK_THROWS_AS(generate_multicontact(b2, std::vector<ElementSet>{bad}), Error);
}

TEST_CASE("delta_n") {
    for (const JoinSemilattice& s : {catalog::boolean(2), catalog::boolean(3), catalog::modular(3), catalog::n5()})
        CHECK(same_membership(delta_n(s.poset(), 1), overlap_multicontact(s.poset())));
    const Poset m4 = catalog::modular(4).poset();
    const ElementSet a123 = set_of(m4, {"a1", "a2", "a3"});
    CHECK_FALSE(delta_n(m4, 2).contains(a123));
    CHECK(delta_n(m4, 3).contains(a123));
}

TEST_CASE("largest and smallest expansions of a weak contact") {
    const Poset b8 = catalog::boolean(3).poset();
    const WeakContact ov = WeakContact::overlap(b8);
    CHECK(validate_weak_contact(ov).valid());
    const Multicontact dl = from_weak_contact_largest(ov);
    CHECK(dl.contains(set_of(b8, {"c1", "c2", "c3"})));
    CHECK_FALSE(dl.contains(set_of(b8, {"a2", "c2", "c3"})));
    CHECK(dl.contains(set_of(b8, {"a1"})));

    const Multicontact ds = from_weak_contact_smallest(ov);
    CHECK(same_membership(ds, overlap_multicontact(b8)));
    CHECK(binary_reduct(dl) == ov);
    CHECK(binary_reduct(ds) == ov);
    CHECK(included(ds, dl));
}

TEST_CASE("weak contact closure and validation") {
    const Poset m3 = catalog::modular(3).poset();
    const int a1 = *m3.find("a1"), a2 = *m3.find("a2"), top = *m3.find("1");
    const std::vector<std::pair<int, int>> pairs{{a1, a2}};
    const WeakContact closed = WeakContact::from_pairs(m3, pairs, true);
    CHECK(closed.related(a2, a1));
    CHECK(closed.related(a1, top));
    CHECK(validate_weak_contact(closed).valid());

    // Without closure, (Ext) is violated: a1 ~ a2 but the pair is not lifted.
    std::vector<ElementSet> rows(m3.size(), 0);
    for (int x = 1; x < m3.size(); ++x) rows[x] = bit(x);
    rows[a1] |= bit(a2);
    rows[a2] |= bit(a1);
    const auto report = validate_weak_contact(WeakContact::from_rows(m3, rows));
    CHECK_FALSE(report.get("Ext").holds);
    const std::vector<std::pair<int, int>> with_zero{{0, a1}};
    CHECK_THROWS_AS(WeakContact::from_pairs(m3, with_zero, true), Error);
}

TEST_CASE("weak contact additivity") {
    const JoinSemilattice b2 = catalog::boolean(2);
    CHECK(weak_contact_additive(WeakContact::overlap(b2.poset()), b2).holds);
    const JoinSemilattice m3 = catalog::modular(3);
    const auto r = weak_contact_additive(WeakContact::overlap(m3.poset()), m3);
    CHECK_FALSE(r.holds);
}

TEST_CASE("pre-closures") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Poset& p = b2.poset();
    std::vector<int> id(p.size());
    for (int i = 0; i < p.size(); ++i) id[i] = i;
    const PreClosure k = PreClosure::make(p, id);
    CHECK(k.is_extensive());
    CHECK(k.is_idempotent());
    CHECK(k.is_additive() == Tri::yes);
    CHECK(same_membership(preclosure_multicontact(k), overlap_multicontact(p)));

    // Everything nonzero to the top: weakly extensive, every nonzero set a member.
    std::vector<int> to_top(p.size(), *p.top());
    to_top[0] = 0;
    const PreClosure t = PreClosure::make(p, to_top);
    CHECK(t.is_weakly_extensive());
    CHECK(preclosure_multicontact(t).contains(set_of(p, {"a", "b"})));

    std::vector<int> not_normal = id;
    not_normal[0] = 1;
    CHECK_THROWS_AS(PreClosure::make(p, not_normal), Error);
}

TEST_CASE("atom-generated multicontacts") {
    const Poset b2 = catalog::boolean(2).poset();
    const ElementSet a = set_of(b2, {"a"}), b = set_of(b2, {"b"});
    CHECK(same_membership(atom_generated(b2, std::vector<ElementSet>{0, a, b}), overlap_multicontact(b2)));
    const Multicontact all = atom_generated(b2, std::vector<ElementSet>{0, a, b, a | b});
    CHECK(all.contains(a | b));
    CHECK(validate_multicontact(all).valid());
}

TEST_CASE("topological multicontact on a discrete space is the overlap multicontact of the powerset") {
    const auto [s, d] = topological_multicontact(FiniteSpace::discrete({"x1", "x2", "x3"}));
    CHECK(same_membership(d, overlap_multicontact(s.poset())));

    // x2 in the closure of x1: {x1} and {x2} are in contact.
    const FiniteSpace sp = FiniteSpace::make({"x1", "x2"}, {0b11, 0b10});
    const std::vector<ElementSet> family{0b01, 0b10};
    CHECK(topological_member(sp, family));
    CHECK(validate_multicontact(topological_multicontact(sp).second).valid());
}

TEST_CASE("event structure round trip") {
    const std::vector<std::pair<int, int>> order{{0, 1}};
    const EventStructure e = EventStructure::make({"e1", "e2", "e3"}, order, {0b001, 0b010, 0b100, 0b011, 0b101});
    const auto [p, d] = to_multicontact(e);
    CHECK(p.size() == 4);
    CHECK(validate_multicontact(d).valid());
    CHECK(to_event_structure(d) == e);

    // The singleton {e2} is missing.
    const std::vector<std::pair<int, int>> none;
    CHECK_THROWS_AS(EventStructure::make({"e1", "e2"}, none, {0b01}), Error);
}

TEST_CASE("minimal non-members") {
    const Poset b2 = catalog::boolean(2).poset();
    CHECK(minimal_non_members(overlap_multicontact(b2)) == std::vector<ElementSet>{set_of(b2, {"a", "b"})});
    const Poset m3 = catalog::modular(3).poset();
    CHECK(minimal_non_members(overlap_multicontact(m3)) ==
          std::vector<ElementSet>{set_of(m3, {"a1", "a2"}), set_of(m3, {"a1", "a3"}), set_of(m3, {"a2", "a3"})});
    CHECK(minimal_non_members(delta_n(b2, 2)).empty());
}

TEST_CASE("antichain generators") {
    const Poset b2 = catalog::boolean(2).poset();
    const ElementSet ab = set_of(b2, {"a", "b"});
    const Multicontact g = generate_multicontact(b2, std::vector<ElementSet>{ab});
    CHECK(maximal_generators(g) == std::vector<ElementSet>{ab});
    const auto anti = antichain_generators(g);
    CHECK(std::find(anti.begin(), anti.end(), ab) != anti.end());
}
