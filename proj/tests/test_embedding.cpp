#include <doctest.h>

#include <vector>

#include "core/conditions.hpp"
#include "core/embedding.hpp"
#include "oracles.hpp"

using namespace mcsl;

namespace {

ElementSet set_of(const Poset& p, std::initializer_list<const char*> labels) {
    ElementSet s = 0;
    for (const char* l : labels) s |= bit(*p.find(l));
    return s;
}

}  // namespace

TEST_CASE("phi is the complement of the principal up-set") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Poset& p = b2.poset();
    CHECK(phi(b2, *p.find("a")) == set_of(p, {"0", "b"}));
    CHECK(phi(b2, 0) == 0);
    CHECK(phi(b2, *p.top()) == set_of(p, {"0", "a", "b"}));
    // Joins go to unions.
    for (int x = 0; x < b2.size(); ++x)
        for (int y = 0; y < b2.size(); ++y) CHECK(phi(b2, b2.join(x, y)) == (phi(b2, x) | phi(b2, y)));
}

TEST_CASE("canonical embedding of the full multicontact on B2") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Poset& p = b2.poset();
    const ElementSet a = set_of(p, {"a"}), b = set_of(p, {"b"}), one = set_of(p, {"1"});
    const Multicontact full = Multicontact::from_family(p, {a, b, one, a | one, b | one, a | b, a | b | one});
    const CanonicalEmbedding e = canonical_embedding(b2, full, EmbeddingMode::overlap);
    CHECK(e.t == p.carrier());
    CHECK(e.kappa[*p.find("a")] == set_of(p, {"0", "b"}));
    CHECK(e.minimal_non_members.empty());
    CHECK(verify_embedding(e).is_embedding());
}

TEST_CASE("the overlap multicontact on M3 does not embed canonically") {
    const JoinSemilattice m3 = catalog::modular(3);
    const CanonicalEmbedding e = canonical_embedding(m3, overlap_multicontact(m3.poset()), EmbeddingMode::overlap);
    const EmbeddingVerdict v = verify_embedding(e);
    CHECK_FALSE(v.is_embedding());
    CHECK_THROWS_AS(as_topological_model(e), Error);
}

TEST_CASE("embedding verdicts match the conditions and both verification routes agree") {
    int embeds = 0, fails = 0;
    Guard g;
    g.powerset_points = 6;
    for (const JoinSemilattice& s :
         {catalog::chain(3), catalog::chain(4), catalog::boolean(2), catalog::modular(3), catalog::n5()}) {
        for (const auto& fam : oracle::all_multicontacts(s.poset())) {
            const Multicontact d = Multicontact::from_family(s.poset(), fam);
            const bool add = check_additivity(s, d).holds, m1 = check_m1(s, d).holds;
            for (EmbeddingMode mode : {EmbeddingMode::overlap, EmbeddingMode::smallest}) {
                const CanonicalEmbedding e = canonical_embedding(s, d, mode);
                const bool canonical = verify_embedding(e).is_embedding();
                const MaterializedTarget m = materialize_target(e, g);
                const bool generic = verify_embedding(m.kappa, s, d, m.target, m.delta, g).is_embedding();
                CHECK(canonical == generic);
                CHECK(canonical == (mode == EmbeddingMode::overlap ? add && m1 : m1));
                (canonical ? embeds : fails)++;
                if (mode == EmbeddingMode::overlap && canonical) CHECK(as_topological_model(e).agrees);
            }
        }
    }
    CHECK(embeds > 0);
    CHECK(fails > 0);
}

TEST_CASE("bounded embeddings preserve the top") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const CanonicalEmbedding e =
        canonical_embedding(b2, overlap_multicontact(b2.poset()), EmbeddingMode::overlap, true);
    const EmbeddingVerdict v = verify_embedding(e);
    REQUIRE(v.preserves_top.has_value());
    CHECK(v.is_embedding());
    CHECK(v.flags().size() == 6);
}

TEST_CASE("smallest extension along the identity is the source multicontact") {
    const JoinSemilattice b2 = catalog::boolean(2);
    const Poset& p = b2.poset();
    const std::vector<int> id{0, 1, 2, 3};
    const Multicontact d = overlap_multicontact(p);
    CHECK(same_membership(smallest_extension(id, p, d), d));

    const ElementSet ab = set_of(p, {"a", "b"});
    const Multicontact g = generate_multicontact(p, std::vector<ElementSet>{ab});
    CHECK(same_membership(smallest_extension(id, p, g), g));

    const std::vector<int> not_normal{1, 1, 2, 3};
    CHECK_THROWS_AS(smallest_extension(not_normal, p, d), Error);
}

TEST_CASE("topological model of an embeddable structure") {
    const JoinSemilattice b8 = catalog::boolean(3);
    const CanonicalEmbedding e = canonical_embedding(b8, overlap_multicontact(b8.poset()), EmbeddingMode::overlap);
    const TopologicalModel m = as_topological_model(e);
    CHECK(m.agrees);
    CHECK(m.space.size() == popcount(e.t));
    CHECK(m.images[0] == 0);
}
