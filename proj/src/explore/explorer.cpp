#include "explore/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "core/conditions.hpp"
#include "core/embedding.hpp"
#include "io/dsl.hpp"
#include "io/structures.hpp"

namespace mcsl {

std::vector<std::vector<ElementSet>> enumerate_orders(int n) {
    if (n < 0 || n > 6) throw Error(ErrorKind::input, "order enumeration supports 0..6 points");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) slots.emplace_back(i, j);
    std::vector<std::vector<ElementSet>> out;
    const std::uint64_t limit = std::uint64_t{1} << slots.size();
    std::vector<ElementSet> up(n);
    for (std::uint64_t rel = 0; rel < limit; ++rel) {
        for (int i = 0; i < n; ++i) up[i] = bit(i);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((rel >> s) & 1u) up[slots[s].first] |= bit(slots[s].second);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j : elements_of(up[i] & ~bit(i))) {
                if (!subset_of(up[j], up[i]) || has(up[j], i)) {
                    ok = false;
                    break;
                }
            }
        if (ok) out.push_back(up);
    }
    return out;
}

namespace {

bool has_all_joins(const std::vector<ElementSet>& up) {
    const int n = static_cast<int>(up.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const ElementSet ub = up[a] & up[b];
            bool least = false;
            for (int c : elements_of(ub))
                if (subset_of(ub, up[c])) least = true;
            if (!least) return false;
        }
    return true;
}

}  // namespace

std::vector<ElementSet> canonical_code(const Poset& p) {
    const int n = p.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<ElementSet> best;
    do {
        std::vector<ElementSet> code(n);
        for (int i = 0; i < n; ++i) {
            ElementSet m = 0;
            for (int j : elements_of(p.up(i))) m |= bit(perm[j]);
            code[perm[i]] = m;
        }
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<JoinSemilattice> enumerate_semilattices(int n, bool up_to_iso, const Guard& guard) {
    if (n < 1) throw Error(ErrorKind::input, "semilattice enumeration needs at least one element");
    require_guard(n <= guard.enum_semilattice,
                  "semilattice enumeration needs at most " + std::to_string(guard.enum_semilattice) + " elements");
    const auto orders = enumerate_orders(n - 1);
    std::vector<JoinSemilattice> out;
    std::set<std::vector<ElementSet>> seen;
    for (int z = 0; z < n; ++z) {
        std::vector<int> others;
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i) {
            if (i != z) others.push_back(i);
            labels[i] = i == z ? "0" : "e" + std::to_string(i);
        }
        for (const auto& order : orders) {
            std::vector<ElementSet> up(n);
            up[z] = full_set(n);
            for (int i = 0; i < n - 1; ++i)
                for (int j : elements_of(order[i])) up[others[i]] |= bit(others[j]);
            if (!has_all_joins(up)) continue;
            Poset p = Poset::from_up_sets(up, labels);
            if (up_to_iso && !seen.insert(canonical_code(p)).second) continue;
            out.push_back(JoinSemilattice::from_poset(std::move(p)));
        }
    }
    return out;
}

namespace {

// Subsets C of {0..k-1} with implied[i] inside C whenever i is in C. `implied`
// must be transitive. Exclusion is tried first, so the empty set comes first.
std::vector<std::vector<int>> closed_sets(int k, const std::vector<std::vector<int>>& implied) {
    std::vector<std::vector<int>> implied_by(k);
    for (int i = 0; i < k; ++i)
        for (int j : implied[i]) implied_by[j].push_back(i);
    std::vector<std::vector<int>> out;
    std::vector<signed char> state(k, 0);  // 0 open, 1 in, -1 out
    std::function<void(int)> rec = [&](int i) {
        while (i < k && state[i] != 0) ++i;
        if (i == k) {
            std::vector<int> chosen;
            for (int j = 0; j < k; ++j)
                if (state[j] == 1) chosen.push_back(j);
            out.push_back(std::move(chosen));
            return;
        }
        std::vector<int> trail;
        // Out: everything implying i goes out too; none of it can be in yet.
        state[i] = -1;
        trail.push_back(i);
        for (int j : implied_by[i])
            if (state[j] == 0) {
                state[j] = -1;
                trail.push_back(j);
            }
        rec(i + 1);
        for (int j : trail) state[j] = 0;
        trail.clear();
        // In: everything implied goes in, unless something is already out.
        bool ok = true;
        for (int j : implied[i])
            if (state[j] == -1) ok = false;
        if (!ok) return;
        state[i] = 1;
        trail.push_back(i);
        for (int j : implied[i])
            if (state[j] == 0) {
                state[j] = 1;
                trail.push_back(j);
            }
        rec(i + 1);
        for (int j : trail) state[j] = 0;
    };
    rec(0);
    return out;
}

std::vector<ElementSet> nonzero_antichains(const Poset& p) {
    std::vector<ElementSet> out;
    for_each_subset(p.nonzero(), [&](ElementSet a) {
        if (a != 0 && p.is_antichain(a)) out.push_back(a);
    });
    return out;
}

// implied[i]: the candidates Cof-dominated by candidate i.
std::vector<std::vector<int>> domination(const Poset& p, const std::vector<ElementSet>& cands) {
    const int k = static_cast<int>(cands.size());
    std::vector<std::vector<int>> implied(k);
    for (int i = 0; i < k; ++i) {
        const ElementSet reach = p.up_closure(cands[i]);
        for (int j = 0; j < k; ++j)
            if (i != j && subset_of(cands[j], reach)) implied[i].push_back(j);
    }
    return implied;
}

}  // namespace

std::vector<Multicontact> enumerate_multicontacts(const Poset& p, const Guard& guard) {
    require_guard(popcount(p.nonzero()) <= guard.enum_nonzero,
                  "multicontact enumeration needs at most " + std::to_string(guard.enum_nonzero) +
                      " nonzero elements");
    // A multicontact is fixed by its antichain members. Those with a nonzero
    // lower bound are forced; the rest form an up-closed choice under domination.
    std::vector<ElementSet> optional;
    for (ElementSet a : nonzero_antichains(p))
        if (!(p.lower_bounds(a) & p.nonzero())) optional.push_back(a);
    std::vector<Multicontact> out;
    for (const auto& chosen : closed_sets(static_cast<int>(optional.size()), domination(p, optional))) {
        std::vector<ElementSet> gens;
        for (int i : chosen) gens.push_back(optional[i]);
        Multicontact d = generate_multicontact(p, gens).with_antichain_form(gens);
        d.materialize();
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<WeakContact> enumerate_weak_contacts(const Poset& p, const Guard& guard) {
    require_guard(popcount(p.nonzero()) <= guard.enum_nonzero,
                  "weak contact enumeration needs at most " + std::to_string(guard.enum_nonzero) +
                      " nonzero elements");
    std::vector<std::pair<int, int>> optional;
    for (int a : elements_of(p.nonzero()))
        for (int b : elements_of(p.nonzero()))
            if (a < b && !(p.down(a) & p.down(b) & p.nonzero())) optional.emplace_back(a, b);
    const int k = static_cast<int>(optional.size());
    std::vector<std::vector<int>> implied(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const auto [a, b] = optional[i];
            const auto [c, d] = optional[j];
            if (i != j && ((p.leq(a, c) && p.leq(b, d)) || (p.leq(a, d) && p.leq(b, c)))) implied[i].push_back(j);
        }
    std::vector<WeakContact> out;
    for (const auto& chosen : closed_sets(k, implied)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i : chosen) pairs.push_back(optional[i]);
        out.push_back(WeakContact::from_pairs(p, pairs, true));
    }
    return out;
}

std::vector<Multicontact> enumerate_expansions(const WeakContact& w, const Guard& guard) {
    const Poset& p = w.base();
    require_guard(popcount(p.nonzero()) <= guard.enum_expansion,
                  "expansion enumeration needs at most " + std::to_string(guard.enum_expansion) +
                      " nonzero elements");
    const Multicontact largest = from_weak_contact_largest(w);
    const Multicontact smallest = from_weak_contact_smallest(w);
    // Pairs are fixed by w, so the free choices are antichains of three or
    // more elements lying between the smallest and the largest expansion.
    std::vector<ElementSet> forced, optional;
    for (ElementSet a : nonzero_antichains(p)) {
        if (smallest.contains(a))
            forced.push_back(a);
        else if (largest.contains(a))
            optional.push_back(a);
    }
    std::vector<Multicontact> out;
    for (const auto& chosen : closed_sets(static_cast<int>(optional.size()), domination(p, optional))) {
        std::vector<ElementSet> gens = forced;
        std::vector<ElementSet> extra;
        for (int i : chosen) extra.push_back(optional[i]);
        gens.insert(gens.end(), extra.begin(), extra.end());
        Multicontact d = generate_multicontact(p, gens).with_antichain_form(gens);
        d.materialize();
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<PreClosure> enumerate_preclosures(const Poset& p, const Guard& guard) {
    const int n = p.size();
    require_guard(n <= guard.enum_semilattice,
                  "pre-closure enumeration needs at most " + std::to_string(guard.enum_semilattice) + " elements");
    std::vector<PreClosure> out;
    std::vector<int> k(n, -1);
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(PreClosure::make(p, k));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (x == p.zero() && v != p.zero()) continue;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                if (p.leq(x, y) && !p.leq(v, k[y])) ok = false;
                if (p.leq(y, x) && !p.leq(k[y], v)) ok = false;
            }
            if (!ok) continue;
            k[x] = v;
            rec(x + 1);
        }
        k[x] = -1;
    };
    rec(0);
    return out;
}

std::vector<EventStructure> enumerate_event_structures(int events, const Guard& guard) {
    require_guard(events <= guard.enum_nonzero,
                  "event structure enumeration needs at most " + std::to_string(guard.enum_nonzero) + " events");
    std::vector<EventStructure> out;
    std::vector<std::string> labels{"0"};
    for (int i = 1; i <= events; ++i) labels.push_back("e" + std::to_string(i));
    for (const auto& order : enumerate_orders(events)) {
        // Reverse the order and put a bottom below everything.
        std::vector<ElementSet> up(events + 1, 0);
        up[0] = full_set(events + 1);
        for (int i = 0; i < events; ++i) {
            up[i + 1] = bit(i + 1);
            for (int j = 0; j < events; ++j)
                if (has(order[j], i)) up[i + 1] |= bit(j + 1);
        }
        const Poset p = Poset::from_up_sets(up, labels);
        for (const auto& d : enumerate_multicontacts(p, guard)) out.push_back(to_event_structure(d));
    }
    return out;
}

bool Discrepancy::operator<(const Discrepancy& o) const {
    return std::tie(structure, expected, got) < std::tie(o.structure, o.expected, o.got);
}

std::string encode_structure(const Poset& p, const Multicontact* d) {
    dsl::Document doc;
    doc.blocks.push_back(dsl::order_block("S", p, true));
    if (d) doc.blocks.push_back(dsl::generators_block("D", "S", *d));
    return dsl::serialize(doc);
}

namespace {

struct Outcome {
    long examined = 0;
    std::vector<Discrepancy> found;

    void expect(bool ok, const std::string& structure, std::string expected, std::string got) {
        if (!ok) found.push_back({structure, std::move(expected), std::move(got)});
    }
};

using Task = std::function<Outcome()>;

std::string tf(bool b) { return b ? "true" : "false"; }

std::vector<Outcome> run_tasks(const std::vector<Task>& tasks, int threads) {
    std::vector<Outcome> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, static_cast<int>(tasks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::vector<JoinSemilattice> sweep(const HarnessOptions& o, int max_n) {
    std::vector<JoinSemilattice> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& s : enumerate_semilattices(n, o.up_to_iso, o.guard)) out.push_back(std::move(s));
    return out;
}

// Semilattices named in the catalog, deduplicated by name.
std::vector<std::pair<JoinSemilattice, std::vector<Multicontact>>> catalog_structures(const Guard& guard) {
    std::vector<std::pair<JoinSemilattice, std::vector<Multicontact>>> out;
    std::set<std::string> seen;
    for (const auto& entry : structures::entries()) {
        const dsl::Model m = dsl::resolve(dsl::parse(entry.text), guard);
        for (const auto& [name, base] : m.bases) {
            if (!base.semilattice) continue;
            std::vector<Multicontact> ds;
            for (const auto& [dn, d] : m.multicontacts)
                if (d.base == name) ds.push_back(d.delta);
            if (seen.insert(name).second) {
                out.emplace_back(*base.semilattice, ds);
            } else {
                for (auto& [s, existing] : out)
                    if (s.poset() == base.semilattice->poset())
                        existing.insert(existing.end(), ds.begin(), ds.end());
            }
        }
    }
    return out;
}

std::string first_failure(const ValidationReport& v, const Poset& p) {
    for (const auto& c : v.checks)
        if (!c.holds) return c.condition + " fails: " + format_witness(*c.witness, p.labels());
    return "valid";
}

// Both embedding theorems share this shape; `expected` is the predicted verdict.
void embedding_case(Outcome& out, const JoinSemilattice& s, const Multicontact& d, EmbeddingMode mode,
                    bool expected, const Guard& guard) {
    const std::string str = encode_structure(s.poset(), &d);
    const std::string exp = std::string(mode == EmbeddingMode::overlap ? "Add and M1" : "M1") + " = " + tf(expected);
    const CanonicalEmbedding e = canonical_embedding(s, d, mode, false, guard);
    const EmbeddingVerdict v = verify_embedding(e, guard);
    out.expect(v.is_embedding() == expected, str, exp, std::string(to_string(mode)) + " embedding = " + tf(v.is_embedding()));
    const CanonicalEmbedding eb = canonical_embedding(s, d, mode, true, guard);
    const EmbeddingVerdict vb = verify_embedding(eb, guard);
    out.expect(vb.is_embedding() == expected, str, exp,
               std::string("bounded ") + to_string(mode) + " embedding = " + tf(vb.is_embedding()));
    out.expect(v.preserves_join.holds && v.preserves_zero.holds, str, "kappa preserves joins and 0",
               "join " + tf(v.preserves_join.holds) + ", zero " + tf(v.preserves_zero.holds));
    if (popcount(e.t) <= guard.powerset_points) {
        const MaterializedTarget mt = materialize_target(e, guard);
        const bool generic = verify_embedding(mt.kappa, s, d, mt.target, mt.delta, guard).is_embedding();
        out.expect(generic == v.is_embedding(), str, "materialized target agrees: " + tf(v.is_embedding()),
                   "materialized verification = " + tf(generic));
        if (mode == EmbeddingMode::overlap)
            out.expect(check_m1(mt.target, mt.delta, guard).holds, str, "overlap target satisfies M1", "false");
    }
    if (mode == EmbeddingMode::smallest && expected)
        out.expect(v.order_embedding.holds, str, "M1 gives an injective, order-reflecting kappa",
                   "order embedding fails");
}

std::vector<Task> per_semilattice(const HarnessOptions& o, int max_n,
                                  std::function<void(Outcome&, const JoinSemilattice&)> body) {
    std::vector<Task> tasks;
    for (auto& s : sweep(o, max_n))
        tasks.push_back([s, body] {
            Outcome out;
            body(out, s);
            return out;
        });
    return tasks;
}

std::vector<Task> overlap_embedding_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        for (const auto& d : enumerate_multicontacts(s.poset(), g)) {
            ++out.examined;
            const bool expected = check_additivity(s, d, g).holds && check_m1(s, d, g).holds;
            embedding_case(out, s, d, EmbeddingMode::overlap, expected, g);
        }
    });
}

std::vector<Task> general_embedding_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        for (const auto& d : enumerate_multicontacts(s.poset(), g)) {
            ++out.examined;
            embedding_case(out, s, d, EmbeddingMode::smallest, check_m1(s, d, g).holds, g);
        }
    });
}

std::vector<Task> additivity_m2_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        for (const auto& d : enumerate_multicontacts(s.poset(), g)) {
            ++out.examined;
            const bool add = check_additivity(s, d, g).holds;
            const std::string str = encode_structure(s.poset(), &d);
            for (int rows : {2, 3}) {
                const bool m2 = check_m2(s, d, rows, g).holds;
                out.expect(m2 == add, str, "Add = " + tf(add), "M2 with " + std::to_string(rows) + " rows = " + tf(m2));
            }
        }
    });
}

std::vector<Task> m1_plus_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        for (const auto& d : enumerate_multicontacts(s.poset(), g)) {
            ++out.examined;
            if (!check_m1(s, d, g).holds) continue;
            const bool plus = check_m1_plus(s, d, 3, g).holds;
            out.expect(plus, encode_structure(s.poset(), &d), "M1 implies M1+ (3 rows)", "M1+ = false");
        }
    });
}

std::vector<Task> with_catalog(std::vector<Task> tasks, const Guard& g,
                               std::function<void(Outcome&, const JoinSemilattice&, const std::vector<Multicontact>&)> body) {
    tasks.push_back([g, body] {
        Outcome out;
        for (const auto& [s, ds] : catalog_structures(g)) body(out, s, ds);
        return out;
    });
    return tasks;
}

void semidistributive_case(Outcome& out, const JoinSemilattice& s, const Guard& g) {
    if (!is_semidistributive_at_zero(s, g)) return;
    ++out.examined;
    const Multicontact d = overlap_multicontact(s.poset());
    out.expect(check_additivity(s, d, g).holds, encode_structure(s.poset(), &d),
               "semidistributive at 0 with overlap is additive", "Add = false");
}

std::vector<Task> semidistributive_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    auto tasks = per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) { semidistributive_case(out, s, g); });
    return with_catalog(std::move(tasks), g, [g](Outcome& out, const JoinSemilattice& s, const std::vector<Multicontact>&) {
        semidistributive_case(out, s, g);
    });
}

std::vector<Task> preclosure_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        if (!is_semidistributive_at_zero(s, g)) return;
        for (const auto& k : enumerate_preclosures(s.poset(), g)) {
            if (!k.is_weakly_extensive() || k.is_additive() != Tri::yes) continue;
            ++out.examined;
            const Multicontact d = preclosure_multicontact(k);
            std::string str = encode_structure(s.poset(), &d);
            str += "\n" + dsl::serialize({{dsl::preclosure_block("K", "S", k)}});
            out.expect(check_additivity(s, d, g).holds, str, "additive pre-closure gives additive multicontact",
                       "Add = false");
        }
    });
}

void distributive_case(Outcome& out, const JoinSemilattice& s, const std::vector<Multicontact>& ds, const Guard& g) {
    if (!is_distributive_lattice(s)) return;
    for (const auto& d : ds) {
        ++out.examined;
        out.expect(check_m1(s, d, g).holds, encode_structure(s.poset(), &d), "distributive lattice satisfies M1",
                   "M1 = false");
    }
}

std::vector<Task> distributive_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    auto tasks = per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        if (is_distributive_lattice(s)) distributive_case(out, s, enumerate_multicontacts(s.poset(), g), g);
    });
    return with_catalog(std::move(tasks), g,
                        [g](Outcome& out, const JoinSemilattice& s, const std::vector<Multicontact>& ds) {
                            distributive_case(out, s, ds, g);
                        });
}

std::vector<Task> overlap_m1_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    auto body = [g](Outcome& out, const JoinSemilattice& s) {
        ++out.examined;
        const Multicontact d = overlap_multicontact(s.poset());
        if (check_m1(s, d, g).holds)
            out.expect(check_additivity(s, d, g).holds, encode_structure(s.poset(), &d), "overlap with M1 is additive",
                       "Add = false");
    };
    auto tasks = per_semilattice(o, o.max_n, body);
    return with_catalog(std::move(tasks), g,
                        [body](Outcome& out, const JoinSemilattice& s, const std::vector<Multicontact>&) { body(out, s); });
}

std::vector<Task> expansion_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    return per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        const Poset& p = s.poset();
        const std::string base = encode_structure(p);
        const Multicontact overlap = overlap_multicontact(p);
        out.expect(same_membership(from_weak_contact_smallest(WeakContact::overlap(p)), overlap), base,
                   "smallest expansion of overlap = overlap", "differs");
        out.expect(same_membership(delta_n(p, 1), overlap), base, "sets of size 1 generate overlap", "differs");
        for (const auto& w : enumerate_weak_contacts(p, g)) {
            ++out.examined;
            const std::string str = base + "\n" + dsl::serialize({{dsl::weak_contact_block("w", "S", w)}});
            const Multicontact largest = from_weak_contact_largest(w);
            const Multicontact smallest = from_weak_contact_smallest(w);
            out.expect(binary_reduct(largest) == w, str, "reduct of largest expansion = w", "differs");
            out.expect(binary_reduct(smallest) == w, str, "reduct of smallest expansion = w", "differs");
            bool saw_smallest = false, saw_largest = false;
            for (const auto& e : enumerate_expansions(w, g)) {
                const auto v = validate_multicontact(e);
                out.expect(v.valid(), str, "expansion is a multicontact", first_failure(v, p));
                out.expect(binary_reduct(e) == w, str, "expansion reduct = w", "differs");
                out.expect(included(smallest, e) && included(e, largest), str, "smallest <= expansion <= largest",
                           "outside the bounds");
                saw_smallest = saw_smallest || same_membership(e, smallest);
                saw_largest = saw_largest || same_membership(e, largest);
            }
            out.expect(saw_smallest && saw_largest, str, "bounds are attained",
                       "smallest " + tf(saw_smallest) + ", largest " + tf(saw_largest));
        }
    });
}

// Order-preserving maps sending exactly 0 to 0.
std::vector<std::vector<int>> zero_reflecting_maps(const Poset& src, const Poset& dst) {
    std::vector<std::vector<int>> out;
    const int n = src.size();
    std::vector<int> k(n, -1);
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            out.push_back(k);
            return;
        }
        for (int v = 0; v < dst.size(); ++v) {
            if ((x == src.zero()) != (v == dst.zero())) continue;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                if (src.leq(x, y) && !dst.leq(v, k[y])) ok = false;
                if (src.leq(y, x) && !dst.leq(k[y], v)) ok = false;
            }
            if (!ok) continue;
            k[x] = v;
            rec(x + 1);
        }
    };
    rec(0);
    return out;
}

ElementSet image(const std::vector<int>& k, ElementSet f) {
    ElementSet out = 0;
    for (int a : elements_of(f)) out |= bit(k[a]);
    return out;
}

std::vector<Task> extension_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    auto sources = std::make_shared<std::vector<std::pair<JoinSemilattice, Multicontact>>>();
    for (const auto& s : sweep(o, std::min(3, o.max_n)))
        for (const auto& d : enumerate_multicontacts(s.poset(), g)) sources->emplace_back(s, d);
    return per_semilattice(o, o.max_n, [g, sources](Outcome& out, const JoinSemilattice& q) {
        const Poset& qp = q.poset();
        const auto targets = enumerate_multicontacts(qp, g);
        for (const auto& [s, d] : *sources) {
            const Poset& sp = s.poset();
            for (const auto& k : zero_reflecting_maps(sp, qp)) {
                ++out.examined;
                const Multicontact e = smallest_extension(k, qp, d);
                std::string str = encode_structure(sp, &d) + "\n" + encode_structure(qp) + "\nmap";
                for (int a = 0; a < sp.size(); ++a) str += " " + sp.label(a) + "->" + qp.label(k[a]);
                const auto v = validate_multicontact(e);
                out.expect(v.valid(), str, "smallest extension is a multicontact", first_failure(v, qp));
                const auto hom_into = [&](const Multicontact& t) {
                    bool ok = true;
                    for_each_subset(sp.carrier(), [&](ElementSet f) {
                        if (d.contains(f) && !t.contains(image(k, f))) ok = false;
                    });
                    return ok;
                };
                out.expect(hom_into(e), str, "map is a homomorphism into the extension", "false");
                bool listed = false;
                for (const auto& t : targets) {
                    if (hom_into(t)) out.expect(included(e, t), str, "extension below every admissible multicontact", "not included");
                    listed = listed || same_membership(e, t);
                }
                out.expect(listed, str, "extension is among the enumerated multicontacts", "missing");
                // Reflection when non-members have images meeting at 0.
                bool order_embedding = true;
                for (int a = 0; a < sp.size(); ++a)
                    for (int b = 0; b < sp.size(); ++b)
                        if (sp.leq(a, b) != qp.leq(k[a], k[b])) order_embedding = false;
                bool meets_zero = true;
                for_each_subset(sp.nonzero(), [&](ElementSet f) {
                    if (f == 0 || d.contains(f)) return;
                    const auto m = q.meet_of(image(k, f));
                    if (!m || *m != qp.zero()) meets_zero = false;
                });
                if (order_embedding && meets_zero) {
                    bool reflects = true;
                    for_each_subset(sp.carrier(), [&](ElementSet f) {
                        if (e.contains(image(k, f)) && !d.contains(f)) reflects = false;
                    });
                    out.expect(reflects, str, "extension reflects non-members", "false");
                }
            }
        }
    });
}

void validate_into(Outcome& out, const Multicontact& d, const std::string& what) {
    ++out.examined;
    const auto v = validate_multicontact(d);
    out.expect(v.valid(), encode_structure(d.base(), &d), what + " is a multicontact", first_failure(v, d.base()));
}

std::vector<Task> axiom_tasks(const HarnessOptions& o) {
    const Guard g = o.guard;
    auto tasks = per_semilattice(o, o.max_n, [g](Outcome& out, const JoinSemilattice& s) {
        const Poset& p = s.poset();
        validate_into(out, overlap_multicontact(p), "overlap");
        for (const auto& d : enumerate_multicontacts(p, g)) validate_into(out, d, "enumerated family");
        for (ElementSet a : nonzero_antichains(p)) {
            const ElementSet gens[] = {a};
            validate_into(out, generate_multicontact(p, gens), "generated");
        }
        for (int n = 1; n <= 3; ++n) validate_into(out, delta_n(p, n), "size-bounded generation");
        for (const auto& w : enumerate_weak_contacts(p, g)) {
            validate_into(out, from_weak_contact_largest(w), "largest expansion");
            validate_into(out, from_weak_contact_smallest(w), "smallest expansion");
        }
        const AtomInfo info = atoms(p);
        if (info.atomic) {
            // Subset-closed families of atom sets holding every atom singleton.
            std::vector<ElementSet> big;
            for_each_subset(info.atoms, [&](ElementSet x) {
                if (popcount(x) >= 2) big.push_back(x);
            });
            if (big.size() <= 16) {
                for (std::uint32_t choice = 0; choice < (1u << big.size()); ++choice) {
                    std::set<ElementSet> fam;
                    for (int a : elements_of(info.atoms)) fam.insert(bit(a));
                    for (std::size_t i = 0; i < big.size(); ++i)
                        if ((choice >> i) & 1u) fam.insert(big[i]);
                    bool closed = true;
                    for (ElementSet x : fam)
                        for (int y : elements_of(x))
                            if (popcount(x) > 1 && !fam.count(x & ~bit(y))) closed = false;
                    if (!closed) continue;
                    std::vector<ElementSet> family(fam.begin(), fam.end());
                    validate_into(out, atom_generated(p, family), "atom-generated");
                }
            }
        }
        for (const auto& k : enumerate_preclosures(p, g))
            if (k.is_weakly_extensive()) validate_into(out, preclosure_multicontact(k), "pre-closure");
    });
    tasks.push_back([g] {
        Outcome out;
        for (int k = 1; k <= std::min(3, g.powerset_points); ++k) {
            std::vector<std::string> points;
            for (int i = 1; i <= k; ++i) points.push_back("p" + std::to_string(i));
            // Every closure table with x in closure[x]: point i picks any set of other points.
            const int per = 1 << (k - 1);
            int total = 1;
            for (int i = 0; i < k; ++i) total *= per;
            for (int code = 0; code < total; ++code) {
                std::vector<ElementSet> closure(k);
                int rest = code;
                for (int i = 0; i < k; ++i) {
                    const ElementSet others = full_set(k) & ~bit(i);
                    const auto pick = elements_of(others);
                    const int choice = rest % per;
                    rest /= per;
                    closure[i] = bit(i);
                    for (std::size_t j = 0; j < pick.size(); ++j)
                        if ((choice >> j) & 1) closure[i] |= bit(pick[j]);
                }
                const auto [s, d] = topological_multicontact(FiniteSpace::make(points, closure), g);
                validate_into(out, d, "topological");
            }
        }
        for (int m = 0; m <= std::min(3, g.enum_nonzero); ++m)
            for (const auto& e : enumerate_event_structures(m, g)) {
                const auto [p, d] = to_multicontact(e);
                validate_into(out, d, "event-structure import");
            }
        for (const auto& [s, ds] : catalog_structures(g))
            for (const auto& d : ds) validate_into(out, d, "catalog");
        return out;
    });
    return tasks;
}

struct TheoremDef {
    const char* id;
    const char* description;
    std::vector<Task> (*tasks)(const HarnessOptions&);
};

const std::vector<TheoremDef>& defs() {
    static const std::vector<TheoremDef> all{
        {"axioms", "every construction yields a multicontact", axiom_tasks},
        {"overlap-embedding", "Add and M1 iff the overlap-mode canonical embedding verifies", overlap_embedding_tasks},
        {"general-embedding", "M1 iff the smallest-mode canonical embedding verifies", general_embedding_tasks},
        {"additivity-m2", "Add iff M2 (2 and 3 rows)", additivity_m2_tasks},
        {"m1-plus", "M1 implies M1+ (3 rows)", m1_plus_tasks},
        {"semidistributive-additive", "semidistributive at 0 with overlap implies Add", semidistributive_tasks},
        {"preclosure-additive", "semidistributive base with additive pre-closure implies Add", preclosure_tasks},
        {"distributive-m1", "distributive lattices satisfy M1 for every multicontact", distributive_tasks},
        {"overlap-m1-additive", "overlap with M1 implies Add", overlap_m1_tasks},
        {"expansion-bounds", "expansions lie between the smallest and largest, with matching reducts", expansion_tasks},
        {"extension-minimal", "the smallest extension is a minimal homomorphic multicontact", extension_tasks},
    };
    return all;
}

const TheoremDef& def(std::string_view id) {
    for (const auto& d : defs())
        if (d.id == id) return d;
    throw Error(ErrorKind::input, "unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& d : defs()) out.push_back(d.id);
        return out;
    }();
    return ids;
}

std::string theorem_description(std::string_view id) { return def(id).description; }

HarnessReport verify_theorem(std::string_view id, const HarnessOptions& options) {
    const TheoremDef& d = def(id);
    if (options.max_n < 1) throw Error(ErrorKind::input, "--max must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_tasks(d.tasks(options), options.threads);
    HarnessReport report{d.id, d.description};
    for (const auto& r : results) {
        report.examined += r.examined;
        report.discrepancies.insert(report.discrepancies.end(), r.found.begin(), r.found.end());
    }
    std::sort(report.discrepancies.begin(), report.discrepancies.end());
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool evaluate_expectation(std::string_view entry_name, const std::string& check, const Guard& guard) {
    const auto entry = structures::find(entry_name);
    if (!entry) throw Error(ErrorKind::input, "unknown catalog entry '" + std::string(entry_name) + "'");
    const dsl::Model m = dsl::resolve(dsl::parse(entry->text), guard);
    const auto& rd = m.multicontacts.at("D");
    const JoinSemilattice& s = *m.bases.at(rd.base).semilattice;
    const Multicontact& d = rd.delta;
    const auto holds_on = [&](const std::string& cond, const Multicontact& x) {
        if (cond == "Add") return check_additivity(s, x, guard).holds;
        if (cond == "M1") return check_m1(s, x, guard).holds;
        throw Error(ErrorKind::input, "unknown expansion check '" + cond + "'");
    };
    if (check == "Add" || check == "M1") return holds_on(check, d);
    if (check == "Modular") return check_modular_condition(s, d, guard).holds;
    if (check.rfind("M1[n<=", 0) == 0) return check_m1_restricted(s, d, std::stoi(check.substr(6)), guard).holds;
    if (check == "embedding:overlap" || check == "embedding:smallest") {
        const auto mode = check == "embedding:overlap" ? EmbeddingMode::overlap : EmbeddingMode::smallest;
        return verify_embedding(canonical_embedding(s, d, mode, false, guard), guard).is_embedding();
    }
    if (check.rfind("member:{", 0) == 0 && check.back() == '}') {
        ElementSet f = 0;
        std::string body = check.substr(8, check.size() - 9);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const std::string l = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const auto x = s.poset().find(l);
            if (!x) throw Error(ErrorKind::input, "unknown label '" + l + "' in check " + check);
            f |= bit(*x);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return d.contains(f);
    }
    if (check.rfind("expansions:", 0) == 0) {
        const std::string cond = check.substr(11);
        const auto expansions = enumerate_expansions(m.weak_contacts.at("w").delta, guard);
        // true: every expansion satisfies cond; false: none does.
        const bool all = std::all_of(expansions.begin(), expansions.end(), [&](const auto& x) { return holds_on(cond, x); });
        const bool none = std::none_of(expansions.begin(), expansions.end(), [&](const auto& x) { return holds_on(cond, x); });
        if (all) return true;
        if (none) return false;
        throw Error(ErrorKind::precondition, "expansions disagree on " + cond);
    }
    throw Error(ErrorKind::input, "unknown check '" + check + "'");
}

HarnessReport run_catalog_regressions(const Guard& guard) {
    const auto start = std::chrono::steady_clock::now();
    HarnessReport report{"catalog-regressions", "named structures reproduce their recorded verdicts"};
    std::vector<structures::Entry> all = structures::entries();
    all.push_back(*structures::find("M5-D3"));
    for (const auto& entry : all)
        for (const auto& e : entry.expected) {
            ++report.examined;
            std::string got;
            try {
                got = tf(evaluate_expectation(entry.name, e.check, guard));
            } catch (const Error& err) {
                got = std::string("error: ") + err.what();
            }
            if (got != tf(e.value)) report.discrepancies.push_back({entry.name, e.check + " = " + tf(e.value), got});
        }
    std::sort(report.discrepancies.begin(), report.discrepancies.end());
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace mcsl
