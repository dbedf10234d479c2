#pragma once

#include <cstddef>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

struct Matching {
    std::vector<Edge> edges;  // sorted

    std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum cardinality matching by Edmonds' blossom algorithm with explicit
/// blossom contraction. Output is deterministic: a greedy start in vertex
/// order, then augmenting searches rooted at free vertices in index order.
Matching max_matching(const Graph& g);

/// ν(g); shorthand for max_matching(g).size().
int matching_number(const Graph& g);

/// Exhaustive include/exclude search over edges. Independent of the blossom
/// code; used as a test oracle. Throws TooLarge above kBruteForceEdgeLimit.
int brute_force_nu(const Graph& g);

inline constexpr std::size_t kBruteForceEdgeLimit = 40;

bool has_perfect_matching(const Graph& g);

/// Factor-critical: odd order and G - v has a perfect matching for every v.
bool is_hypomatchable(const Graph& g);

/// Edges pairwise disjoint and all present in g.
bool is_valid_matching(const Graph& g, const Matching& m);

}  // namespace subcubic
