#include "core/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mcsl {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

void check_labels(const std::vector<std::string>& labels, int n) {
    if (static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::input, "label count does not match element count");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw Error(ErrorKind::input, "empty element label");
        if (!seen.insert(l).second) throw Error(ErrorKind::input, "duplicate element label '" + l + "'");
    }
}

}  // namespace

Poset Poset::from_relation(int n, std::span<const std::pair<int, int>> pairs,
                           std::optional<int> zero_hint, std::vector<std::string> labels) {
    if (n < 1 || n > kMaxCarrier)
        throw Error(ErrorKind::input, "element count must be in 1.." + std::to_string(kMaxCarrier));
    if (labels.empty()) labels = default_labels(n);
    check_labels(labels, n);

    std::vector<ElementSet> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [lo, hi] : pairs) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw Error(ErrorKind::input, "order pair index out of range");
        up[lo] |= bit(hi);
    }
    // Warshall on rows: if k is above i, everything above k is above i.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (has(up[i], k)) up[i] |= up[k];

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has(up[i], j) && has(up[j], i))
                throw Error(ErrorKind::input,
                            "order has a cycle through '" + labels[i] + "' and '" + labels[j] + "'");

    Poset p;
    p.up_ = std::move(up);
    p.labels_ = std::move(labels);
    p.finish();
    if (zero_hint && *zero_hint != p.zero_)
        throw Error(ErrorKind::input, "'" + p.labels_.at(*zero_hint) + "' is not the minimum element");
    return p;
}

Poset Poset::from_up_sets(std::vector<ElementSet> up, std::vector<std::string> labels) {
    const int n = static_cast<int>(up.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j : elements_of(up[i])) pairs.emplace_back(i, j);
    return from_relation(n, pairs, std::nullopt, std::move(labels));
}

void Poset::finish() {
    const int n = size();
    down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : elements_of(up_[i])) down_[j] |= bit(i);
    const ElementSet all = carrier();
    std::optional<int> zero;
    for (int i = 0; i < n; ++i) {
        if (up_[i] == all) zero = i;
        if (down_[i] == all) top_ = i;
    }
    if (!zero) throw Error(ErrorKind::input, "poset has no minimum element");
    zero_ = *zero;
}

ElementSet Poset::lower_bounds(ElementSet f) const {
    ElementSet out = carrier();
    for (; f != 0; f &= f - 1) out &= down_[lowest(f)];
    return out;
}

ElementSet Poset::upper_bounds(ElementSet f) const {
    ElementSet out = carrier();
    for (; f != 0; f &= f - 1) out &= up_[lowest(f)];
    return out;
}

ElementSet Poset::up_closure(ElementSet f) const {
    ElementSet out = 0;
    for (; f != 0; f &= f - 1) out |= up_[lowest(f)];
    return out;
}

ElementSet Poset::down_closure(ElementSet f) const {
    ElementSet out = 0;
    for (; f != 0; f &= f - 1) out |= down_[lowest(f)];
    return out;
}

bool Poset::is_antichain(ElementSet f) const {
    for (ElementSet g = f; g != 0; g &= g - 1)
        if ((up_[lowest(g)] & f) != bit(lowest(g))) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int lo = 0; lo < size(); ++lo) {
        const ElementSet above = up_[lo] & ~bit(lo);
        for (int hi : elements_of(above)) {
            const ElementSet between = above & down_[hi] & ~bit(hi);
            if (between == 0) out.emplace_back(lo, hi);
        }
    }
    return out;
}

std::optional<int> Poset::find(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

JoinSemilattice JoinSemilattice::from_poset(Poset p) {
    JoinSemilattice s(std::move(p));
    const int n = s.size();
    const Poset& q = s.poset_;
    s.join_.assign(n * n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const ElementSet ub = q.up(a) & q.up(b);
            std::optional<int> least;
            for (int u : elements_of(ub))
                if (subset_of(ub, q.up(u))) least = u;
            if (!least) {
                const std::string why = ub == 0 ? "no upper bound" : "no least upper bound";
                throw Error(ErrorKind::input,
                            "pair ('" + q.label(a) + "', '" + q.label(b) + "') has " + why);
            }
            s.join_[a * n + b] = s.join_[b * n + a] = *least;
        }
    }
    return s;
}

int JoinSemilattice::join_of(ElementSet f) const {
    int acc = zero();
    for (; f != 0; f &= f - 1) acc = join(acc, lowest(f));
    return acc;
}

ElementSet JoinSemilattice::join_each(ElementSet from, int x) const {
    ElementSet out = 0;
    for (; from != 0; from &= from - 1) out |= bit(join(lowest(from), x));
    return out;
}

std::optional<int> JoinSemilattice::meet_of(ElementSet f) const {
    const ElementSet lb = poset_.lower_bounds(f);
    for (int l : elements_of(lb))
        if (subset_of(lb, poset_.down(l))) return l;
    return std::nullopt;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        default: return "unknown";
    }
}

bool is_lattice(const JoinSemilattice& s) {
    for (int a = 0; a < s.size(); ++a)
        for (int b = a + 1; b < s.size(); ++b)
            if (!s.meet_of(bit(a) | bit(b))) return false;
    return true;
}

namespace {

// Meet table of a lattice; -1 where the meet is missing.
std::vector<int> meet_table(const JoinSemilattice& s) {
    const int n = s.size();
    std::vector<int> m(n * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (auto x = s.meet_of(bit(a) | bit(b))) m[a * n + b] = *x;
    return m;
}

}  // namespace

bool is_distributive_lattice(const JoinSemilattice& s) {
    if (!is_lattice(s)) return false;
    const int n = s.size();
    const auto m = meet_table(s);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m[a * n + s.join(b, c)] != s.join(m[a * n + b], m[a * n + c])) return false;
    return true;
}

bool is_modular_lattice(const JoinSemilattice& s) {
    if (!is_lattice(s)) return false;
    const int n = s.size();
    const auto m = meet_table(s);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (!s.leq(a, c)) continue;
            for (int b = 0; b < n; ++b)
                if (s.join(a, m[b * n + c]) != m[s.join(a, b) * n + c]) return false;
        }
    return true;
}

bool is_semidistributive_at_zero(const JoinSemilattice& s, const Guard& guard) {
    const Poset& p = s.poset();
    const int n = s.size();
    require_guard(n <= guard.carrier, "semidistributivity at 0 needs carrier <= " +
                                          std::to_string(guard.carrier));
    // The meet of a set is 0 exactly when its only common lower bound is 0.
    const ElementSet z = bit(s.zero());
    for (ElementSet rest = 0;; ++rest) {
        const ElementSet lb = p.lower_bounds(rest);
        for (int a = 0; a < n; ++a) {
            if ((lb & p.down(a)) != z) continue;
            for (int b = a + 1; b < n; ++b) {
                if ((lb & p.down(b)) != z) continue;
                if ((lb & p.down(s.join(a, b))) != z) return false;
            }
        }
        if (rest == s.poset().carrier()) break;
    }
    return true;
}

bool is_distributive_join_semilattice(const JoinSemilattice& s) {
    const Poset& p = s.poset();
    const int n = s.size();
    for (int b = 0; b < n; ++b)
        for (int c = b; c < n; ++c) {
            // Joins b* + c* with b* <= b and c* <= c.
            ElementSet reachable = 0;
            for (int bs : elements_of(p.down(b)))
                for (int cs : elements_of(p.down(c))) reachable |= bit(s.join(bs, cs));
            if (!subset_of(p.down(s.join(b, c)), reachable)) return false;
        }
    return true;
}

StructureFlags structural_predicates(const JoinSemilattice& s, const Guard& guard) {
    StructureFlags f;
    f.is_lattice = tri(is_lattice(s));
    f.is_distributive_lattice = tri(is_distributive_lattice(s));
    f.is_modular_lattice = tri(is_modular_lattice(s));
    if (s.size() <= guard.carrier) f.is_semidistributive_at_zero = tri(is_semidistributive_at_zero(s, guard));
    f.is_distributive_join_semilattice = tri(is_distributive_join_semilattice(s));
    return f;
}

AtomInfo atoms(const Poset& p) {
    AtomInfo info;
    const ElementSet nz = p.nonzero();
    for (int x : elements_of(nz))
        if ((p.down(x) & nz) == bit(x)) info.atoms |= bit(x);
    for (int x : elements_of(nz))
        if ((p.down(x) & info.atoms) == 0) info.atomic = false;
    return info;
}

namespace catalog {

namespace {

JoinSemilattice build(int n, const std::vector<std::pair<int, int>>& pairs, std::vector<std::string> labels) {
    return JoinSemilattice::from_poset(Poset::from_relation(n, pairs, 0, std::move(labels)));
}

void require_range(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::input, "catalog parameter out of range: " + what);
}

}  // namespace

JoinSemilattice chain(int k) {
    require_range(k >= 1 && k <= 27, "chain length must be in 1..27");
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < k; ++i) {
        labels.emplace_back(1, static_cast<char>('a' + i - 1));
        pairs.emplace_back(i - 1, i);
    }
    return build(k, pairs, labels);
}

JoinSemilattice boolean(int k) {
    require_range(k >= 0 && k <= 5, "boolean atom count must be in 0..5");
    const int n = 1 << k;
    std::vector<std::string> labels(n);
    for (int m = 0; m < n; ++m) {
        if (m == 0) {
            labels[m] = "0";
        } else if (m == n - 1 && k >= 1) {
            labels[m] = "1";
        } else if (k == 2) {
            labels[m] = m == 1 ? "a" : "b";
        } else if (k == 3 && popcount(m) == 2) {
            labels[m] = "c" + std::to_string(lowest(~m & 7) + 1);
        } else {
            std::string l;
            for (int i : elements_of(m)) l += (l.empty() ? "a" : "+a") + std::to_string(i + 1);
            labels[m] = l;
        }
    }
    // Index order: 0, atoms, then the rest by subset size.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [](int x, int y) { return popcount(x) < popcount(y); });
    std::vector<int> index(n);
    for (int i = 0; i < n; ++i) index[order[i]] = i;
    std::vector<std::string> sorted_labels(n);
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < n; ++m) {
        sorted_labels[index[m]] = labels[m];
        for (int j = 0; j < k; ++j)
            if (!has(m, j)) pairs.emplace_back(index[m], index[m | bit(j)]);
    }
    return build(n, pairs, sorted_labels);
}

JoinSemilattice modular(int r) {
    require_range(r >= 1 && r <= 29, "M(r) needs 1 <= r <= 29");
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= r; ++i) {
        labels.push_back("a" + std::to_string(i));
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, r + 1);
    }
    labels.push_back("1");
    return build(r + 2, pairs, labels);
}

JoinSemilattice n5() {
    // 0 a b d 1
    return build(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"0", "a", "b", "d", "1"});
}

JoinSemilattice powerset(int k) {
    require_range(k >= 0 && k <= 5, "powerset point count must be in 0..5");
    const int n = 1 << k;
    std::vector<std::string> labels(n);
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < n; ++m) {
        if (m == 0) labels[m] = "0";
        for (int i : elements_of(m)) labels[m] += "x" + std::to_string(i + 1);
        for (int j = 0; j < k; ++j)
            if (!has(m, j)) pairs.emplace_back(m, m | bit(j));
    }
    return build(n, pairs, labels);
}

JoinSemilattice product(std::span<const int> lengths) {
    require_range(!lengths.empty(), "product needs at least one factor");
    long total = 1;
    for (int len : lengths) {
        require_range(len >= 1, "product factor lengths must be positive");
        total *= len;
        require_range(total <= kMaxCarrier, "product too large");
    }
    const int n = static_cast<int>(total);
    auto coords = [&](int idx) {
        std::vector<int> c(lengths.size());
        for (std::size_t f = 0; f < lengths.size(); ++f) {
            c[f] = idx % lengths[f];
            idx /= lengths[f];
        }
        return c;
    };
    std::vector<std::string> labels(n);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        const auto c = coords(i);
        std::string l = "v";
        for (std::size_t f = 0; f < c.size(); ++f) l += (f ? "_" : "") + std::to_string(c[f]);
        labels[i] = l;
        int stride = 1;
        for (std::size_t f = 0; f < c.size(); ++f) {
            if (c[f] + 1 < lengths[f]) pairs.emplace_back(i, i + stride);
            stride *= lengths[f];
        }
    }
    return build(n, pairs, labels);
}

JoinSemilattice by_name(std::string_view name, std::span<const int> params) {
    auto one = [&](const char* what) {
        if (params.size() != 1) throw Error(ErrorKind::input, std::string(what) + " takes one parameter");
        return params[0];
    };
    if (name == "chain") return chain(one("chain"));
    if (name == "boolean") return boolean(one("boolean"));
    if (name == "M") return modular(one("M"));
    if (name == "powerset") return powerset(one("powerset"));
    if (name == "product") return product(params);
    if (name == "N5") {
        if (!params.empty()) throw Error(ErrorKind::input, "N5 takes no parameters");
        return n5();
    }
    throw Error(ErrorKind::input, "unknown catalog structure '" + std::string(name) + "'");
}

}  // namespace catalog

}  // namespace mcsl
