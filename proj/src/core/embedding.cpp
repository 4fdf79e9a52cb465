#include "core/embedding.hpp"

#include <algorithm>

namespace mcsl {

ElementSet phi(const JoinSemilattice& s, int a) {
    return s.poset().carrier() & ~s.poset().up(a);
}

const char* to_string(EmbeddingMode m) {
    return m == EmbeddingMode::overlap ? "overlap" : "smallest";
}

namespace {

// Packs the bits of `mask` that lie in `domain` into consecutive low bits.
ElementSet compress(ElementSet mask, ElementSet domain) {
    ElementSet out = 0;
    int i = 0;
    for (int x : elements_of(domain)) {
        if (has(mask, x)) out |= bit(i);
        ++i;
    }
    return out;
}

// Clause (b) of the smallest extension: some member of the source has, below
// every b, the image of one of its elements. `below[i]` is the set of source
// elements whose image lies below the i-th b.
bool dominated_by_member(const std::vector<ElementSet>& members, const std::vector<ElementSet>& below) {
    return std::any_of(members.begin(), members.end(), [&](ElementSet m) {
        return std::all_of(below.begin(), below.end(), [m](ElementSet u) { return (m & u) != 0; });
    });
}

Multicontact extension_oracle(std::vector<int> kappa, const Poset& target, const Multicontact& d, std::string kind) {
    auto base = std::make_shared<const Poset>(target);
    const auto members = d.members();
    return Multicontact(
        base,
        [base, kappa = std::move(kappa), members](ElementSet f) {
            if (base->lower_bounds(f) & base->nonzero()) return true;
            std::vector<ElementSet> below;
            for (int b : elements_of(f)) {
                ElementSet u = 0;
                for (std::size_t a = 0; a < kappa.size(); ++a)
                    if (base->leq(kappa[a], b)) u |= bit(static_cast<int>(a));
                below.push_back(u);
            }
            return dominated_by_member(members, below);
        },
        std::move(kind));
}

}  // namespace

bool CanonicalEmbedding::target_contains(std::span<const ElementSet> family) const {
    ElementSet common = t;
    for (ElementSet x : family) {
        if (x == 0) return false;  // a family holding the bottom is never a member
        common &= x;
    }
    if (family.empty() || common != 0) return true;
    if (mode == EmbeddingMode::overlap) return false;
    std::vector<ElementSet> below;
    for (ElementSet x : family) {
        ElementSet u = 0;
        for (int a = 0; a < source.size(); ++a)
            if (subset_of(kappa[a], x)) u |= bit(a);
        below.push_back(u);
    }
    return dominated_by_member(delta.members(), below);
}

CanonicalEmbedding canonical_embedding(const JoinSemilattice& s, const Multicontact& d, EmbeddingMode mode,
                                       bool bounded, const Guard& guard) {
    if (!d.base().same_order(s.poset())) throw Error(ErrorKind::input, "multicontact is not defined on this semilattice");
    require_guard(s.size() <= guard.carrier, "canonical embedding needs carrier <= " + std::to_string(guard.carrier));
    CanonicalEmbedding e{s, d};
    e.mode = mode;
    e.bounded = bounded;
    e.base_set = s.poset().carrier();
    if (bounded) {
        const auto top = s.poset().top();
        if (!top) throw Error(ErrorKind::precondition, "bounded mode needs a top element");
        e.base_set &= ~bit(*top);
    }
    e.minimal_non_members = minimal_non_members(d, guard);
    for (ElementSet f : e.minimal_non_members) {
        ElementSet meet = e.base_set;
        for (int c : elements_of(f)) meet &= phi(s, c);
        e.g |= meet;
    }
    e.t = e.base_set & ~e.g;
    for (int a = 0; a < s.size(); ++a) e.kappa.push_back(phi(s, a) & e.t);
    return e;
}

Multicontact smallest_extension(std::span<const int> kappa, const Poset& target, const Multicontact& d) {
    const Poset& src = d.base();
    if (static_cast<int>(kappa.size()) != src.size()) throw Error(ErrorKind::input, "map is not total on the source");
    for (int a = 0; a < src.size(); ++a) {
        if (kappa[a] < 0 || kappa[a] >= target.size())
            throw Error(ErrorKind::input, "map sends " + src.label(a) + " outside the target");
        if ((kappa[a] == target.zero()) != (a == src.zero()))
            throw Error(ErrorKind::precondition, "map must send exactly 0 to 0; fails at " + src.label(a));
    }
    for (int a = 0; a < src.size(); ++a)
        for (int b = 0; b < src.size(); ++b)
            if (src.leq(a, b) && !target.leq(kappa[a], kappa[b]))
                throw Error(ErrorKind::precondition,
                            "map is not order-preserving at " + src.label(a) + " <= " + src.label(b));
    return extension_oracle(std::vector<int>(kappa.begin(), kappa.end()), target, d, "smallest-extension");
}

bool EmbeddingVerdict::is_embedding() const {
    const auto all = flags();
    return std::all_of(all.begin(), all.end(), [](const ConditionReport* r) { return r->holds; });
}

std::vector<const ConditionReport*> EmbeddingVerdict::flags() const {
    std::vector<const ConditionReport*> out{&order_embedding, &preserves_join, &preserves_zero, &delta_only_if,
                                            &delta_if};
    if (preserves_top) out.push_back(&*preserves_top);
    return out;
}

namespace {

void fail(ConditionReport& r, Witness w) {
    if (!r.holds) return;  // keep the first witness
    r.holds = false;
    r.witness = std::move(w);
}

// Shared checks; Target supplies leq, join, is_zero, contains(image of F) and top().
template <class Target, class Kappa>
EmbeddingVerdict verify_with(const JoinSemilattice& s, const Multicontact& d, const Kappa& kappa,
                             const Target& target) {
    EmbeddingVerdict v;
    const int n = s.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (s.leq(a, b) != target.leq(kappa[a], kappa[b]))
                fail(v.order_embedding, {element_item("a", a), element_item("b", b)});
            if (kappa[s.join(a, b)] != target.join(kappa[a], kappa[b]))
                fail(v.preserves_join, {element_item("a", a), element_item("b", b)});
        }
    if (!target.is_zero(kappa[s.zero()])) fail(v.preserves_zero, {element_item("zero", s.zero())});
    for_each_subset(s.poset().carrier(), [&](ElementSet f) {
        const bool source = d.contains(f);
        const bool image = target.contains(f);
        if (source && !image) fail(v.delta_only_if, {set_item("F", f)});
        if (!source && image) fail(v.delta_if, {set_item("F", f)});
    });
    if (auto top = target.top()) {
        v.preserves_top = ConditionReport{"top"};
        const auto src_top = s.poset().top();
        if (!src_top || kappa[*src_top] != *top)
            fail(*v.preserves_top, {element_item("top", src_top.value_or(s.zero()))});
    }
    return v;
}

struct GenericTarget {
    const JoinSemilattice& t;
    const Multicontact& d;
    std::span<const int> kappa;

    bool leq(int x, int y) const { return t.leq(x, y); }
    int join(int x, int y) const { return t.join(x, y); }
    bool is_zero(int x) const { return x == t.zero(); }
    bool contains(ElementSet f) const {
        ElementSet image = 0;
        for (int a : elements_of(f)) image |= bit(kappa[a]);
        return d.contains(image);
    }
    std::optional<int> top() const { return std::nullopt; }
};

struct PowersetTarget {
    const CanonicalEmbedding& e;

    bool leq(ElementSet x, ElementSet y) const { return subset_of(x, y); }
    ElementSet join(ElementSet x, ElementSet y) const { return x | y; }
    bool is_zero(ElementSet x) const { return x == 0; }
    bool contains(ElementSet f) const {
        std::vector<ElementSet> family;
        for (int a : elements_of(f)) family.push_back(e.kappa[a]);
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        return e.target_contains(family);
    }
    std::optional<ElementSet> top() const { return e.bounded ? std::optional<ElementSet>(e.t) : std::nullopt; }
};

}  // namespace

EmbeddingVerdict verify_embedding(std::span<const int> kappa, const JoinSemilattice& s, const Multicontact& d,
                                  const JoinSemilattice& target, const Multicontact& target_delta,
                                  const Guard& guard) {
    require_guard(s.size() <= guard.carrier, "embedding check needs carrier <= " + std::to_string(guard.carrier));
    if (static_cast<int>(kappa.size()) != s.size()) throw Error(ErrorKind::input, "map is not total on the source");
    for (int x : kappa)
        if (x < 0 || x >= target.size()) throw Error(ErrorKind::input, "map leaves the target carrier");
    if (!d.base().same_order(s.poset()) || !target_delta.base().same_order(target.poset()))
        throw Error(ErrorKind::input, "multicontact is not defined on its semilattice");
    return verify_with(s, d, kappa, GenericTarget{target, target_delta, kappa});
}

EmbeddingVerdict verify_embedding(const CanonicalEmbedding& e, const Guard& guard) {
    require_guard(e.source.size() <= guard.carrier,
                  "embedding check needs carrier <= " + std::to_string(guard.carrier));
    return verify_with(e.source, e.delta, e.kappa, PowersetTarget{e});
}

MaterializedTarget materialize_target(const CanonicalEmbedding& e, const Guard& guard) {
    const int k = popcount(e.t);
    require_guard(k <= guard.powerset_points,
                  "materialized target needs at most " + std::to_string(guard.powerset_points) + " points");
    JoinSemilattice target = catalog::powerset(k);
    std::vector<int> kappa;
    for (ElementSet x : e.kappa) kappa.push_back(static_cast<int>(compress(x, e.t)));
    Multicontact delta = e.mode == EmbeddingMode::overlap
                             ? overlap_multicontact(target.poset())
                             : extension_oracle(kappa, target.poset(), e.delta, "smallest-extension");
    return MaterializedTarget{std::move(target), std::move(delta), std::move(kappa)};
}

TopologicalModel as_topological_model(const CanonicalEmbedding& e, const Guard& guard) {
    if (e.mode != EmbeddingMode::overlap)
        throw Error(ErrorKind::precondition, "topological model needs an overlap-mode embedding");
    const EmbeddingVerdict v = verify_embedding(e, guard);
    for (const ConditionReport* r : v.flags())
        if (!r->holds)
            throw Error(ErrorKind::precondition, "canonical embedding does not verify: " + r->condition + " fails");
    std::vector<std::string> points;
    for (int x : elements_of(e.t)) points.push_back(e.source.label(x));
    TopologicalModel m{FiniteSpace::discrete(std::move(points)), {}, true};
    for (ElementSet x : e.kappa) m.images.push_back(compress(x, e.t));
    for_each_subset(e.source.poset().carrier(), [&](ElementSet f) {
        std::vector<ElementSet> family;
        for (int a : elements_of(f)) family.push_back(m.images[a]);
        if (topological_member(m.space, family) != e.delta.contains(f)) m.agrees = false;
    });
    return m;
}

}  // namespace mcsl
