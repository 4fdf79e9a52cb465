#pragma once
// Brute-force reference implementations used only by tests. They follow the
// textbook definitions directly and share no code with the library.

#include <vector>

#include "core/order.hpp"

namespace oracle {

using mcsl::ElementSet;

inline bool leq(const mcsl::Poset& p, int a, int b) { return p.leq(a, b); }

/// Least upper bound by scanning all upper bounds.
inline int join(const mcsl::Poset& p, int a, int b) {
    int best = -1;
    for (int u = 0; u < p.size(); ++u) {
        if (!leq(p, a, u) || !leq(p, b, u)) continue;
        bool least = true;
        for (int v = 0; v < p.size(); ++v)
            if (leq(p, a, v) && leq(p, b, v) && !leq(p, u, v)) least = false;
        if (least) best = u;
    }
    return best;
}

/// Every element of g is above some element of f.
inline bool dominated(const mcsl::Poset& p, ElementSet f, ElementSet g) {
    for (int y = 0; y < p.size(); ++y) {
        if (!((g >> y) & 1)) continue;
        bool ok = false;
        for (int x = 0; x < p.size(); ++x)
            if (((f >> x) & 1) && leq(p, x, y)) ok = true;
        if (!ok) return false;
    }
    return true;
}

/// Families of subsets of the nonzero elements (as a bitmask over all 2^n
/// subsets) satisfying the axioms literally: every singleton {p}, p nonzero,
/// is in; closed under subsets; closed under domination. Sets with 0 are out.
inline std::vector<std::vector<ElementSet>> all_multicontacts(const mcsl::Poset& p) {
    std::vector<ElementSet> sets;
    const ElementSet nz = p.nonzero();
    for (ElementSet s = 1; s <= nz; ++s)
        if ((s & ~nz) == 0) sets.push_back(s);
    std::vector<std::vector<ElementSet>> out;
    const std::size_t m = sets.size();
    for (unsigned long pick = 0; pick < (1ul << m); ++pick) {
        std::vector<ElementSet> fam;
        for (std::size_t i = 0; i < m; ++i)
            if ((pick >> i) & 1) fam.push_back(sets[i]);
        auto in = [&](ElementSet s) {
            if (s == 0) return true;
            for (ElementSet f : fam)
                if (f == s) return true;
            return false;
        };
        bool ok = true;
        for (int x = 0; x < p.size() && ok; ++x)
            if (x != p.zero() && !in(ElementSet{1} << x)) ok = false;
        for (ElementSet f : fam) {
            for (ElementSet g : sets) {
                if ((g & ~f) == 0 && !in(g)) ok = false;
                if (dominated(p, f, g) && !in(g)) ok = false;
            }
        }
        if (ok) out.push_back(fam);
    }
    return out;
}

}  // namespace oracle
