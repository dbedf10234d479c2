#pragma once

#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

/// Gallai-Edmonds partition. A holds the vertices missed by some maximum
/// matching (ν(G - v) = ν(G)), B = N(A) \ A, C is everything else. Each set
/// is sorted.
struct GEDecomposition {
    std::vector<Vertex> A;
    std::vector<Vertex> B;
    std::vector<Vertex> C;

    friend bool operator==(const GEDecomposition&, const GEDecomposition&) = default;
};

/// Computed from the definition with order() + 1 maximum matchings.
GEDecomposition gallai_edmonds(const Graph& g);

struct GEReport {
    bool a_components_hypomatchable = false;
    bool c_has_perfect_matching = false;
    /// Every nonempty X ⊆ B meets at least |X| + 1 components of G[A].
    bool b_has_surplus = false;

    /// Size of a maximum matching between B and the components of G[A].
    int b_matched = 0;
    int a_component_count = 0;

    bool all() const noexcept { return a_components_hypomatchable && c_has_perfect_matching && b_has_surplus; }
};

/// Checks the three structural properties of the decomposition. Surplus is
/// tested exactly with bipartite matchings between B and the components of
/// G[A]: X ⊆ B violates surplus 1 iff, for some b in X, B with b doubled
/// cannot be saturated. Throws DecompositionMismatch if d is not the
/// decomposition of g.
GEReport verify_ge_properties(const Graph& g, const GEDecomposition& d);

/// For each b in d.B (same order), the sorted distinct indices of the G[A]
/// components it is adjacent to. Components are numbered by smallest vertex.
std::vector<std::vector<int>> b_component_incidence(const Graph& g, const GEDecomposition& d);

}  // namespace subcubic
