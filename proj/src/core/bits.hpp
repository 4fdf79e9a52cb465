#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcsl {

/// Subset of a carrier, bit i set when element i is present.
using ElementSet = std::uint32_t;

/// Hard width of ElementSet; carriers are never larger than this.
inline constexpr int kMaxCarrier = 32;

/// Largest nonzero carrier for which a membership table over all subsets is
/// kept in memory.
inline constexpr int kMaxMaterialized = 20;

inline constexpr ElementSet bit(int i) { return ElementSet{1} << i; }

inline constexpr ElementSet full_set(int n) {
    return n >= kMaxCarrier ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

inline constexpr bool has(ElementSet s, int i) { return (s >> i) & 1u; }

inline constexpr bool subset_of(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

inline int popcount(ElementSet s) { return std::popcount(s); }

inline int lowest(ElementSet s) { return std::countr_zero(s); }

/// Elements of `s` in increasing index order.
inline std::vector<int> elements_of(ElementSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    for (; s != 0; s &= s - 1) out.push_back(lowest(s));
    return out;
}

/// Calls f(sub) for every subset of `s`, in increasing numeric order.
template <class F>
void for_each_subset(ElementSet s, F&& f) {
    ElementSet sub = 0;
    while (true) {
        f(sub);
        if (sub == s) break;
        sub = (sub - s) & s;
    }
}

enum class ErrorKind {
    input,         // malformed or inconsistent input
    guard,         // a configured size guard was exceeded
    precondition,  // an operation's precondition does not hold
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Size guards. Subset iteration is exact below these and refused above them.
struct Guard {
    int carrier = 16;           // elements of a semilattice quantified over by subsets
    int enum_semilattice = 5;   // labeled semilattice enumeration
    int enum_nonzero = 4;       // nonzero elements of a base whose multicontacts are enumerated
    int powerset_points = 4;    // points of a finite space for the powerset construction
    int enum_expansion = 8;     // nonzero elements of a base whose weak-contact expansions are enumerated
};

inline void require_guard(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::guard, "size guard exceeded: " + what);
}

}  // namespace mcsl
