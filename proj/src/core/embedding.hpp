#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/contact.hpp"
#include "core/order.hpp"
#include "core/witness.hpp"

namespace mcsl {

/// {x : a not<= x}. Order- and join-preserving into the powerset of S.
ElementSet phi(const JoinSemilattice& s, int a);

enum class EmbeddingMode { overlap, smallest };
const char* to_string(EmbeddingMode m);

/// Canonical map into the powerset of T. Subsets of T are kept as masks over
/// the source carrier, so a target element is an ElementSet with bits in `t`.
struct CanonicalEmbedding {
    JoinSemilattice source;
    Multicontact delta;
    EmbeddingMode mode = EmbeddingMode::overlap;
    bool bounded = false;
    ElementSet base_set = 0;
    ElementSet g = 0;  // generator of the ideal being factored out
    ElementSet t = 0;
    std::vector<ElementSet> kappa;
    std::vector<ElementSet> minimal_non_members;

    /// Membership of a family of subsets of T in the target multicontact.
    /// Overlap: the family has a common point. Smallest: that, or some source
    /// member A has, below every X in the family, kappa(a) for an a in A.
    bool target_contains(std::span<const ElementSet> family) const;
};

/// Always returns the construction; whether it embeds is verify_embedding's call.
/// Throws a precondition error for bounded mode without a top.
CanonicalEmbedding canonical_embedding(const JoinSemilattice& s, const Multicontact& d, EmbeddingMode mode,
                                       bool bounded = false, const Guard& guard = {});

/// Smallest multicontact on `target` making kappa a homomorphism: a family is
/// a member when it has a nonzero lower bound, or when some member of `d` has,
/// below every b in the family, the image of one of its elements.
/// Requires kappa order-preserving with kappa(a) = 0 exactly when a = 0.
Multicontact smallest_extension(std::span<const int> kappa, const Poset& target, const Multicontact& d);

struct EmbeddingVerdict {
    ConditionReport order_embedding{"order-embedding"};
    ConditionReport preserves_join{"join"};
    ConditionReport preserves_zero{"zero"};
    ConditionReport delta_only_if{"delta-only-if"};
    ConditionReport delta_if{"delta-if"};
    std::optional<ConditionReport> preserves_top;  // bounded mode only

    bool is_embedding() const;
    std::vector<const ConditionReport*> flags() const;
};

/// Generic check of an element map between materialized structures.
EmbeddingVerdict verify_embedding(std::span<const int> kappa, const JoinSemilattice& s, const Multicontact& d,
                                  const JoinSemilattice& target, const Multicontact& target_delta,
                                  const Guard& guard = {});

/// Same checks against the abstract powerset target of a canonical embedding.
EmbeddingVerdict verify_embedding(const CanonicalEmbedding& e, const Guard& guard = {});

/// Powerset of T as a materialized semilattice (element index = compressed
/// mask), its multicontact, and kappa as an index map.
struct MaterializedTarget {
    JoinSemilattice target;
    Multicontact delta;
    std::vector<int> kappa;
};
MaterializedTarget materialize_target(const CanonicalEmbedding& e, const Guard& guard = {});

/// Discrete space on T together with the image of every source element.
struct TopologicalModel {
    FiniteSpace space;
    std::vector<ElementSet> images;  // over point indices of `space`
    bool agrees = false;             // topological membership of images matches the source
};

/// Requires an overlap-mode embedding that verifies; precondition error otherwise.
TopologicalModel as_topological_model(const CanonicalEmbedding& e, const Guard& guard = {});

}  // namespace mcsl
