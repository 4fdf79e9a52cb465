#include "io/structures.hpp"

#include <charconv>

namespace mcsl::structures {

namespace {

const char* kB2 = R"(semilattice B2
  elements 0 a b 1
  order 0<a 0<b a<1 b<1
)";

const char* kM3 = R"(semilattice M3
  elements 0 a b c 1
  order 0<a 0<b 0<c a<1 b<1 c<1
)";

const char* kM4 = R"(semilattice M4
  elements 0 a1 a2 a3 a4 1
  order 0<a1 0<a2 0<a3 0<a4 a1<1 a2<1 a3<1 a4<1
)";

// Atoms a_i; coatom c_i is the join of the two other atoms.
const char* kB8 = R"(semilattice B8
  elements 0 a1 a2 a3 c1 c2 c3 1
  order 0<a1 0<a2 0<a3
  order a2<c1 a3<c1 a1<c2 a3<c2 a1<c3 a2<c3
  order c1<1 c2<1 c3<1
)";

std::string with(const char* base, const char* rest) { return std::string(base) + "\n" + rest; }

std::vector<Entry> build() {
    return {
        {"B2-overlap", "four-element Boolean algebra, overlap multicontact",
         with(kB2, "multicontact D on B2 kind=overlap\n"),
         {{"Add", true}, {"M1", true}, {"embedding:overlap", true}}},
        {"B2-full", "four-element Boolean algebra, every nonzero set a member",
         with(kB2, "multicontact D on B2 kind=explicit\n  sets {a} {b} {1} {a,1} {b,1} {a,b} {a,b,1}\n"),
         {{"Add", true}, {"M1", true}, {"embedding:overlap", true}, {"member:{a,b}", true}}},
        {"chain3-overlap", "three-element chain, overlap multicontact",
         "semilattice C3\n  elements 0 a b\n  order 0<a<b\n\nmulticontact D on C3 kind=overlap\n",
         {{"Add", true}, {"M1", true}, {"embedding:overlap", true}}},
        {"M3-overlap", "modular lattice with three atoms, overlap multicontact: not additive",
         with(kM3, "multicontact D on M3 kind=overlap\n"),
         {{"Add", false}, {"M1", false}, {"embedding:overlap", false}, {"Modular", true}}},
        {"M3-delta", "M3 with a~b, a~c and b, c apart: no expansion satisfies M1",
         with(kM3, "weakcontact w on M3\n  pairs (a,b) (a,c)\n\nmulticontact D on M3 kind=smallest-of:w\n"),
         {{"M1", false}, {"expansions:M1", false}, {"embedding:smallest", false}}},
        {"M4-Ds", "M4, all nonzero pairs related, smallest expansion: not additive",
         with(kM4,
              "weakcontact w on M4\n  pairs (a1,a2) (a1,a3) (a1,a4) (a2,a3) (a2,a4) (a3,a4)\n\n"
              "multicontact D on M4 kind=smallest-of:w\n"),
         {{"Add", false}, {"member:{a1,a2,1}", true}, {"member:{a1,a2,a3}", false}, {"member:{a1,a2,a4}", false}}},
        {"M4-D2", "M4 with the multicontact generated by sets of size <= 2",
         with(kM4, "multicontact D on M4 kind=cardinality:2\n"),
         {{"M1[n<=2]", true}, {"M1", false}, {"Add", false}}},
        {"N5-overlap", "pentagon, overlap multicontact: fails the modular-embedding condition",
         "semilattice N5\n  elements 0 a b d 1\n  order 0<a<b<1 0<d<1\n\nmulticontact D on N5 kind=overlap\n",
         {{"Modular", false}}},
        {"B8-overlap", "eight-element Boolean algebra, overlap multicontact",
         with(kB8, "multicontact D on B8 kind=overlap\n"),
         {{"Add", true}, {"M1", true}, {"embedding:overlap", true}}},
        {"B8-Dl", "B8, largest expansion of the overlap weak contact: the coatoms are a member",
         with(kB8, "weakcontact w on B8\n  pairs\n\nmulticontact D on B8 kind=largest-of:w\n"),
         {{"member:{c1,c2,c3}", true}, {"Add", false}, {"member:{a2,c2,c3}", false}, {"member:{a3,c2,c3}", false}}},
        {"B8-partial", "B8 with a3 apart from a1 and a2, all other nonzero pairs related",
         with(kB8, "weakcontact w on B8\n  pairs (a1,a2) (a1,c1) (a2,c2) (a3,c3)\n\n"
                   "multicontact D on B8 kind=smallest-of:w\n"),
         {{"M1", true}, {"Add", false}, {"expansions:M1", true}, {"expansions:Add", false},
          {"embedding:smallest", true}}},
    };
}

// "M<r>-D<h>" with r >= h + 2.
std::optional<Entry> modular_family(std::string_view name) {
    if (name.size() < 5 || name[0] != 'M') return std::nullopt;
    const auto dash = name.find("-D");
    if (dash == std::string_view::npos) return std::nullopt;
    int r = 0, h = 0;
    const auto rs = name.substr(1, dash - 1), hs = name.substr(dash + 2);
    if (std::from_chars(rs.data(), rs.data() + rs.size(), r).ptr != rs.data() + rs.size() ||
        std::from_chars(hs.data(), hs.data() + hs.size(), h).ptr != hs.data() + hs.size())
        return std::nullopt;
    if (h < 1 || r < h + 2 || r > 20) return std::nullopt;
    std::string base = "M" + std::to_string(r);
    std::string text = "semilattice " + base + "\n  elements 0";
    for (int i = 1; i <= r; ++i) text += " a" + std::to_string(i);
    text += " 1\n  order";
    for (int i = 1; i <= r; ++i) text += " 0<a" + std::to_string(i) + "<1";
    text += "\n\nmulticontact D on " + base + " kind=cardinality:" + std::to_string(h) + "\n";
    const std::string bound = "M1[n<=" + std::to_string(h) + "]";
    return Entry{std::string(name),
                 "modular lattice with " + std::to_string(r) + " atoms, multicontact generated by sets of size <= " +
                     std::to_string(h),
                 text,
                 {{bound, true}, {"M1", false}, {"Add", false}}};
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = build();
    return all;
}

std::optional<Entry> find(std::string_view name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    return modular_family(name);
}

}  // namespace mcsl::structures
