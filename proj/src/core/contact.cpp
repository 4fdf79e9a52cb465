#include "core/contact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace mcsl {

struct Multicontact::Table {
    std::once_flag once;
    std::atomic<bool> ready{false};
    std::vector<bool> bits;
    std::vector<ElementSet> members;
};

Multicontact::Multicontact(std::shared_ptr<const Poset> base, Oracle raw, std::string kind)
    : base_(std::move(base)), raw_(std::move(raw)), kind_(std::move(kind)), table_(std::make_shared<Table>()) {}

Multicontact Multicontact::from_family(const Poset& base, std::vector<ElementSet> family, std::string kind) {
    const ElementSet carrier = base.carrier();
    for (ElementSet f : family)
        if (!subset_of(f, carrier)) throw Error(ErrorKind::input, "family set outside the carrier");
    family.push_back(0);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto shared = std::make_shared<const std::vector<ElementSet>>(family);
    Multicontact d(std::make_shared<const Poset>(base),
                   [shared](ElementSet f) { return std::binary_search(shared->begin(), shared->end(), f); },
                   std::move(kind));
    d.explicit_ = std::move(family);
    return d;
}

Multicontact Multicontact::with_antichain_form(std::vector<ElementSet> antichains) const {
    Multicontact d = *this;
    std::sort(antichains.begin(), antichains.end());
    d.antichains_ = std::move(antichains);
    return d;
}

bool Multicontact::contains(ElementSet f) const {
    if (f == 0) return true;
    if (has(f, base_->zero())) return false;
    if (table_->ready.load(std::memory_order_acquire)) return table_->bits[f];
    return raw_(f);
}

bool Multicontact::raw_contains(ElementSet f) const { return f == 0 || raw_(f); }

void Multicontact::materialize() const {
    const int n = base_->size();
    require_guard(n - 1 <= kMaxMaterialized,
                  "membership table needs at most " + std::to_string(kMaxMaterialized) + " nonzero elements");
    std::call_once(table_->once, [&] {
        const ElementSet nz = base_->nonzero();
        std::vector<bool> bits(std::size_t{1} << n, false);
        std::vector<ElementSet> members;
        bits[0] = true;
        for_each_subset(nz, [&](ElementSet f) {
            if (f != 0 && raw_(f)) {
                bits[f] = true;
                members.push_back(f);
            }
        });
        std::sort(members.begin(), members.end());
        table_->bits = std::move(bits);
        table_->members = std::move(members);
        table_->ready.store(true, std::memory_order_release);
    });
}

const std::vector<ElementSet>& Multicontact::members() const {
    materialize();
    return table_->members;
}

bool same_membership(const Multicontact& a, const Multicontact& b) {
    return a.base().size() == b.base().size() && a.members() == b.members();
}

bool included(const Multicontact& a, const Multicontact& b) {
    if (a.base().size() != b.base().size()) return false;
    b.materialize();
    for (ElementSet f : a.members())
        if (!b.contains(f)) return false;
    return true;
}

bool ValidationReport::valid() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

const ConditionReport& ValidationReport::get(const std::string& name) const {
    for (const auto& c : checks)
        if (c.condition == name) return c;
    throw Error(ErrorKind::input, "no check named " + name);
}

namespace {

ConditionReport pass(std::string name) { return ConditionReport{std::move(name), true, std::nullopt}; }

ConditionReport fail(std::string name, Witness w) { return ConditionReport{std::move(name), false, std::move(w)}; }

}  // namespace

ValidationReport validate_multicontact(const Multicontact& d) {
    const Poset& p = d.base();
    const int n = p.size();
    std::vector<ElementSet> raw;
    if (d.explicit_family()) {
        raw = *d.explicit_family();
    } else {
        require_guard(n <= kMaxMaterialized + 1, "validation enumerates every subset of the carrier");
        for_each_subset(p.carrier(), [&](ElementSet f) {
            if (d.raw_contains(f)) raw.push_back(f);
        });
    }
    std::sort(raw.begin(), raw.end());
    auto in = [&](ElementSet f) { return f == 0 || std::binary_search(raw.begin(), raw.end(), f); };
    const ElementSet z = bit(p.zero());

    ValidationReport r;
    auto emp = pass("Emp");
    for (ElementSet f : raw)
        if (f & z) {
            emp = fail("Emp", {set_item("set", f)});
            break;
        }
    r.checks.push_back(emp);

    auto sub = pass("Sub");
    for (ElementSet f : raw) {
        for (int x : elements_of(f))
            if (!in(f & ~bit(x))) {
                sub = fail("Sub", {set_item("member", f), set_item("subset", f & ~bit(x))});
                break;
            }
        if (!sub.holds) break;
    }
    r.checks.push_back(sub);

    auto mon = pass("Mon");
    for (ElementSet f : raw) {
        for (int a : elements_of(f)) {
            for (int b : elements_of(p.up(a)))
                if (!in(f | bit(b))) {
                    mon = fail("Mon", {set_item("member", f), element_item("a", a), element_item("b", b)});
                    break;
                }
            if (!mon.holds) break;
        }
        if (!mon.holds) break;
    }
    r.checks.push_back(mon);

    auto ref = pass("Ref");
    for (int x : elements_of(p.nonzero()))
        if (!in(bit(x))) {
            ref = fail("Ref", {element_item("p", x)});
            break;
        }
    r.checks.push_back(ref);

    auto ov = pass("Ov");
    for (int x : elements_of(p.nonzero())) {
        for_each_subset(p.up(x), [&](ElementSet g) {
            if (ov.holds && !in(g)) ov = fail("Ov", {element_item("p", x), set_item("set", g)});
        });
        if (!ov.holds) break;
    }
    r.checks.push_back(ov);

    auto cof = pass("Cof");
    for (ElementSet f : raw) {
        const ElementSet dominated = p.up_closure(f);
        if (!in(dominated)) {
            cof = fail("Cof", {set_item("member", f), set_item("dominated", dominated)});
        } else if (!sub.holds) {
            for_each_subset(dominated, [&](ElementSet g) {
                if (cof.holds && !in(g)) cof = fail("Cof", {set_item("member", f), set_item("dominated", g)});
            });
        }
        if (!cof.holds) break;
    }
    r.checks.push_back(cof);

    auto ext = pass("Ext");
    for (ElementSet f : raw) {
        for (int a : elements_of(f)) {
            for (int b : elements_of(p.up(a)))
                if (!in((f & ~bit(a)) | bit(b))) {
                    ext = fail("Ext", {set_item("member", f), element_item("a", a), element_item("b", b)});
                    break;
                }
            if (!ext.holds) break;
        }
        if (!ext.holds) break;
    }
    r.checks.push_back(ext);
    return r;
}

WeakContact WeakContact::from_pairs(const Poset& base, std::span<const std::pair<int, int>> pairs, bool close) {
    const int n = base.size();
    std::vector<ElementSet> rows(n, 0);
    for (int x : elements_of(base.nonzero())) rows[x] |= bit(x);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorKind::input, "weak contact pair out of range");
        if (a == base.zero() || b == base.zero())
            throw Error(ErrorKind::input, "weak contact pair involves the zero element");
        rows[a] |= bit(b);
        rows[b] |= bit(a);
    }
    if (close) {
        // (Ext) closure in one step: x ~ y iff some a <= x, b <= y with a ~ b.
        std::vector<ElementSet> closed(n, 0);
        for (int x = 0; x < n; ++x) {
            ElementSet partners = 0;
            for (int a : elements_of(base.down(x))) partners |= rows[a];
            closed[x] = base.up_closure(partners);
        }
        rows = std::move(closed);
    }
    return from_rows(base, std::move(rows));
}

WeakContact WeakContact::overlap(const Poset& base) {
    std::vector<ElementSet> rows(base.size(), 0);
    const ElementSet nz = base.nonzero();
    for (int a : elements_of(nz))
        for (int b : elements_of(nz))
            if (base.lower_bounds(bit(a) | bit(b)) & nz) rows[a] |= bit(b);
    return from_rows(base, std::move(rows));
}

WeakContact WeakContact::from_rows(const Poset& base, std::vector<ElementSet> rows) {
    if (static_cast<int>(rows.size()) != base.size()) throw Error(ErrorKind::input, "weak contact row count mismatch");
    WeakContact d;
    d.base_ = std::make_shared<const Poset>(base);
    d.rows_ = std::move(rows);
    return d;
}

std::vector<std::pair<int, int>> WeakContact::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < base().size(); ++a)
        for (int b : elements_of(rows_[a]))
            if (a < b) out.emplace_back(a, b);
    return out;
}

ValidationReport validate_weak_contact(const WeakContact& d) {
    const Poset& p = d.base();
    const int z = p.zero();
    ValidationReport r;

    auto zero = pass("Zero");
    for (int a = 0; a < p.size() && zero.holds; ++a)
        if (d.related(a, z)) zero = fail("Zero", {element_item("a", a)});
    r.checks.push_back(zero);

    auto refl = pass("Reflexive");
    for (int a : elements_of(p.nonzero()))
        if (!d.related(a, a)) {
            refl = fail("Reflexive", {element_item("a", a)});
            break;
        }
    r.checks.push_back(refl);

    auto sym = pass("Symmetric");
    for (int a = 0; a < p.size() && sym.holds; ++a)
        for (int b : elements_of(d.row(a)))
            if (!d.related(b, a)) {
                sym = fail("Symmetric", {element_item("a", a), element_item("b", b)});
                break;
            }
    r.checks.push_back(sym);

    auto ext = pass("Ext");
    for (int a = 0; a < p.size() && ext.holds; ++a)
        for (int b : elements_of(d.row(a))) {
            for (int a1 : elements_of(p.up(a))) {
                const ElementSet missing = p.up(b) & ~d.row(a1);
                if (missing) {
                    ext = fail("Ext", {element_item("a", a), element_item("b", b), element_item("a1", a1),
                                       element_item("b1", lowest(missing))});
                    break;
                }
            }
            if (!ext.holds) break;
        }
    r.checks.push_back(ext);
    return r;
}

ConditionReport weak_contact_additive(const WeakContact& d, const JoinSemilattice& s) {
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (d.related(a, s.join(b, c)) && !d.related(a, b) && !d.related(a, c))
                    return fail("Add", {element_item("a", a), element_item("b", b), element_item("c", c)});
    return pass("Add");
}

PreClosure PreClosure::make(const Poset& base, std::vector<int> k) {
    const int n = base.size();
    if (static_cast<int>(k.size()) != n) throw Error(ErrorKind::input, "pre-closure table size mismatch");
    for (int v : k)
        if (v < 0 || v >= n) throw Error(ErrorKind::input, "pre-closure value out of range");
    if (k[base.zero()] != base.zero()) throw Error(ErrorKind::input, "pre-closure is not normal: K(0) != 0");
    for (int x = 0; x < n; ++x)
        for (int y : elements_of(base.up(x)))
            if (!base.leq(k[x], k[y]))
                throw Error(ErrorKind::input, "pre-closure is not isotone at ('" + base.label(x) + "', '" +
                                                  base.label(y) + "')");
    PreClosure c;
    c.base_ = std::make_shared<const Poset>(base);
    c.k_ = std::move(k);
    c.extensive_ = c.weakly_extensive_ = c.idempotent_ = true;
    for (int x = 0; x < n; ++x) {
        if (!base.leq(x, c.k_[x])) c.extensive_ = false;
        if (x != base.zero() && c.k_[x] == base.zero()) c.weakly_extensive_ = false;
        if (c.k_[c.k_[x]] != c.k_[x]) c.idempotent_ = false;
    }
    bool joins = true;
    bool additive = true;
    auto lub = [&](int a, int b) -> std::optional<int> {
        const ElementSet ub = base.up(a) & base.up(b);
        for (int u : elements_of(ub))
            if (subset_of(ub, base.up(u))) return u;
        return std::nullopt;
    };
    for (int x = 0; x < n && joins; ++x)
        for (int y = x; y < n; ++y) {
            auto xy = lub(x, y);
            auto kk = lub(c.k_[x], c.k_[y]);
            if (!xy || !kk) {
                joins = false;
                break;
            }
            if (c.k_[*xy] != *kk) additive = false;
        }
    c.additive_ = joins ? tri(additive) : Tri::unknown;
    return c;
}

EventStructure EventStructure::make(std::vector<std::string> events, std::span<const std::pair<int, int>> order,
                                    std::vector<ElementSet> con) {
    const int n = static_cast<int>(events.size());
    if (n < 0 || n >= kMaxCarrier) throw Error(ErrorKind::input, "too many events");
    EventStructure e;
    e.events = std::move(events);
    e.up.assign(n, 0);
    for (int i = 0; i < n; ++i) e.up[i] = bit(i);
    for (auto [lo, hi] : order) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n) throw Error(ErrorKind::input, "event order pair out of range");
        e.up[lo] |= bit(hi);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (has(e.up[i], k)) e.up[i] |= e.up[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has(e.up[i], j) && has(e.up[j], i))
                throw Error(ErrorKind::input, "event order has a cycle through '" + e.events[i] + "' and '" +
                                                  e.events[j] + "'");
    const ElementSet all = full_set(n);
    std::erase(con, ElementSet{0});
    std::sort(con.begin(), con.end());
    con.erase(std::unique(con.begin(), con.end()), con.end());
    auto in = [&](ElementSet f) { return f == 0 || std::binary_search(con.begin(), con.end(), f); };
    for (ElementSet f : con)
        if (!subset_of(f, all)) throw Error(ErrorKind::input, "consistent set outside the events");
    for (int x = 0; x < n; ++x)
        if (!in(bit(x))) throw Error(ErrorKind::input, "con is missing the singleton {" + e.events[x] + "}");
    for (ElementSet f : con)
        for (int x : elements_of(f)) {
            if (!in(f & ~bit(x))) throw Error(ErrorKind::input, "con is not closed under subsets");
            for (int below = 0; below < n; ++below)
                if (e.leq(below, x) && !in(f | bit(below)))
                    throw Error(ErrorKind::input, "con is not closed under adding causes (Mon for the converse order)");
        }
    e.con = std::move(con);
    return e;
}

Multicontact overlap_multicontact(const Poset& p) {
    auto base = std::make_shared<const Poset>(p);
    return Multicontact(base, [base](ElementSet f) { return (base->lower_bounds(f) & base->nonzero()) != 0; },
                        "overlap");
}

Multicontact generate_multicontact(const Poset& p, std::span<const ElementSet> generators) {
    // Domination is transitive and subset-stable, and (Mon) is an instance of
    // (Cof), so one closure step yields the least multicontact.
    std::vector<ElementSet> reach;
    for (ElementSet g : generators) {
        if (!subset_of(g, p.carrier())) throw Error(ErrorKind::input, "generator outside the carrier");
        if (has(g, p.zero())) throw Error(ErrorKind::input, "generator contains the zero element");
        reach.push_back(p.up_closure(g));
    }
    auto base = std::make_shared<const Poset>(p);
    return Multicontact(
        base,
        [base, reach = std::move(reach)](ElementSet f) {
            if (has(f, base->zero())) return false;
            if (base->lower_bounds(f) & base->nonzero()) return true;
            return std::any_of(reach.begin(), reach.end(), [f](ElementSet r) { return subset_of(f, r); });
        },
        "generated");
}

namespace {

// Can f be covered by at most `budget` principal up-sets of nonzero elements?
bool coverable(const Poset& p, ElementSet f, int budget) {
    if (f == 0) return true;
    if (budget == 0) return false;
    if (popcount(f) <= budget) return true;
    const int y = lowest(f);
    for (int x : elements_of(p.down(y) & p.nonzero()))
        if (coverable(p, f & ~p.up(x), budget - 1)) return true;
    return false;
}

}  // namespace

Multicontact delta_n(const Poset& p, int n) {
    if (n < 1) throw Error(ErrorKind::input, "delta_n needs n >= 1");
    auto base = std::make_shared<const Poset>(p);
    return Multicontact(
        base, [base, n](ElementSet f) { return !has(f, base->zero()) && coverable(*base, f, n); },
        "cardinality:" + std::to_string(n));
}

Multicontact from_weak_contact_largest(const WeakContact& d) {
    auto rel = std::make_shared<const WeakContact>(d);
    return Multicontact(
        d.base_ptr(),
        [rel](ElementSet f) {
            for (ElementSet g = f; g != 0; g &= g - 1)
                if (!subset_of(f, rel->row(lowest(g)))) return false;
            return true;
        },
        "largest");
}

Multicontact from_weak_contact_smallest(const WeakContact& d) {
    auto rel = std::make_shared<const WeakContact>(d);
    return Multicontact(
        d.base_ptr(),
        [rel](ElementSet f) {
            const Poset& p = rel->base();
            if (has(f, p.zero())) return false;
            for (int a : elements_of(p.nonzero()))
                for (int b : elements_of(rel->row(a)))
                    if (subset_of(f, p.up(a) | p.up(b))) return true;
            return false;
        },
        "smallest");
}

WeakContact binary_reduct(const Multicontact& d) {
    const Poset& p = d.base();
    std::vector<ElementSet> rows(p.size(), 0);
    for (int a : elements_of(p.nonzero()))
        for (int b : elements_of(p.nonzero()))
            if (d.contains(bit(a) | bit(b))) rows[a] |= bit(b);
    return WeakContact::from_rows(p, std::move(rows));
}

Multicontact atom_generated(const Poset& p, std::span<const ElementSet> delta_a) {
    const AtomInfo info = atoms(p);
    if (!info.atomic) throw Error(ErrorKind::precondition, "base is not atomic");
    std::vector<ElementSet> family(delta_a.begin(), delta_a.end());
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto in = [&](ElementSet y) { return y == 0 || std::binary_search(family.begin(), family.end(), y); };
    for (ElementSet y : family) {
        if (!subset_of(y, info.atoms)) throw Error(ErrorKind::precondition, "atom family holds a non-atom");
        for (int x : elements_of(y))
            if (!in(y & ~bit(x))) throw Error(ErrorKind::precondition, "atom family is not closed under subsets");
    }
    for (int a : elements_of(info.atoms))
        if (!in(bit(a))) throw Error(ErrorKind::precondition, "atom family is missing a singleton");
    std::vector<ElementSet> reach;
    for (ElementSet y : family) reach.push_back(p.up_closure(y));
    auto base = std::make_shared<const Poset>(p);
    return Multicontact(
        base,
        [base, reach = std::move(reach)](ElementSet f) {
            if (has(f, base->zero())) return false;
            return std::any_of(reach.begin(), reach.end(), [f](ElementSet r) { return subset_of(f, r); });
        },
        "atoms");
}

Multicontact preclosure_multicontact(const PreClosure& k) {
    if (!k.is_weakly_extensive())
        throw Error(ErrorKind::precondition, "pre-closure sends a nonzero element to 0");
    auto kp = std::make_shared<const PreClosure>(k);
    return Multicontact(
        std::make_shared<const Poset>(k.base()),
        [kp](ElementSet f) {
            const Poset& p = kp->base();
            ElementSet image = 0;
            for (; f != 0; f &= f - 1) image |= bit((*kp)(lowest(f)));
            return (p.lower_bounds(image) & p.nonzero()) != 0;
        },
        "preclosure");
}

FiniteSpace FiniteSpace::make(std::vector<std::string> points, std::vector<ElementSet> closure) {
    const int k = static_cast<int>(points.size());
    if (static_cast<int>(closure.size()) != k) throw Error(ErrorKind::input, "closure count mismatch");
    if (k >= kMaxCarrier) throw Error(ErrorKind::input, "too many points");
    for (int x = 0; x < k; ++x) {
        if (!has(closure[x], x)) throw Error(ErrorKind::input, "point '" + points[x] + "' is not in its closure");
        if (!subset_of(closure[x], full_set(k))) throw Error(ErrorKind::input, "closure outside the space");
    }
    return FiniteSpace{std::move(points), std::move(closure)};
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
    std::vector<ElementSet> closure;
    for (int x = 0; x < static_cast<int>(points.size()); ++x) closure.push_back(bit(x));
    return make(std::move(points), std::move(closure));
}

ElementSet FiniteSpace::closure_of(ElementSet x) const {
    ElementSet out = 0;
    for (; x != 0; x &= x - 1) out |= closure[lowest(x)];
    return out;
}

bool topological_member(const FiniteSpace& x, std::span<const ElementSet> family) {
    ElementSet common = full_set(x.size());
    for (ElementSet a : family) common &= x.closure_of(a);
    return family.empty() || common != 0;
}

std::pair<JoinSemilattice, Multicontact> topological_multicontact(const FiniteSpace& x, const Guard& guard) {
    require_guard(x.size() <= guard.powerset_points,
                  "powerset construction needs at most " + std::to_string(guard.powerset_points) + " points");
    JoinSemilattice s = catalog::powerset(x.size());
    auto space = std::make_shared<const FiniteSpace>(x);
    Multicontact d(std::make_shared<const Poset>(s.poset()),
                   [space](ElementSet f) {
                       // Element index of a subset is its bitmask.
                       const auto family = elements_of(f);
                       std::vector<ElementSet> subsets(family.begin(), family.end());
                       return topological_member(*space, subsets);
                   },
                   "topological");
    return {std::move(s), std::move(d)};
}

std::pair<Poset, Multicontact> to_multicontact(const EventStructure& e) {
    const int k = e.size();
    std::string bottom = "0";
    while (std::find(e.events.begin(), e.events.end(), bottom) != e.events.end()) bottom += "_";
    std::vector<std::string> labels{bottom};
    labels.insert(labels.end(), e.events.begin(), e.events.end());
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k; ++x) {
        pairs.emplace_back(0, x + 1);
        for (int y : elements_of(e.up[x])) pairs.emplace_back(y + 1, x + 1);  // converse order
    }
    Poset p = Poset::from_relation(k + 1, pairs, 0, std::move(labels));
    std::vector<ElementSet> family;
    for (ElementSet f : e.con) family.push_back(f << 1);
    Multicontact d = Multicontact::from_family(p, std::move(family), "event-structure");
    return {std::move(p), std::move(d)};
}

EventStructure to_event_structure(const Multicontact& d) {
    const Poset& p = d.base();
    const int z = p.zero();
    std::vector<int> index(p.size(), -1);
    std::vector<std::string> events;
    for (int x = 0; x < p.size(); ++x)
        if (x != z) {
            index[x] = static_cast<int>(events.size());
            events.push_back(p.label(x));
        }
    std::vector<std::pair<int, int>> order;
    for (int x = 0; x < p.size(); ++x)
        for (int y : elements_of(p.up(x)))
            if (x != z && y != z && x != y) order.emplace_back(index[y], index[x]);
    std::vector<ElementSet> con;
    for (ElementSet f : d.members()) {
        ElementSet g = 0;
        for (int x : elements_of(f)) g |= bit(index[x]);
        con.push_back(g);
    }
    return EventStructure::make(std::move(events), order, std::move(con));
}

std::vector<ElementSet> antichain_generators(const Multicontact& d) {
    std::vector<ElementSet> out;
    for (ElementSet f : d.members())
        if (d.base().is_antichain(f)) out.push_back(f);
    return out;
}

std::vector<ElementSet> maximal_generators(const Multicontact& d) {
    const Poset& p = d.base();
    const auto all = antichain_generators(d);
    std::vector<ElementSet> out;
    for (ElementSet f : all) {
        const bool dominated = std::any_of(all.begin(), all.end(), [&](ElementSet g) {
            return g != f && subset_of(f, p.up_closure(g));
        });
        if (!dominated) out.push_back(f);
    }
    return out;
}

std::vector<ElementSet> minimal_non_members(const Multicontact& d, const Guard& guard) {
    const Poset& p = d.base();
    require_guard(p.size() <= guard.carrier, "non-member scan needs carrier <= " + std::to_string(guard.carrier));
    d.materialize();
    // A non-member with a non-member proper subset contains a minimal one,
    // and proper subsets come earlier in bitmask order.
    std::vector<ElementSet> out;
    for_each_subset(p.nonzero(), [&](ElementSet f) {
        if (f == 0 || d.contains(f)) return;
        const bool minimal =
            std::none_of(out.begin(), out.end(), [f](ElementSet m) { return subset_of(m, f); });
        if (minimal) out.push_back(f);
    });
    return out;
}

}  // namespace mcsl
