#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

inline constexpr int kMaxCanonicalOrder = 16;

/// Adjacency rows as bitmasks; bit j of rows[i] is set iff i ~ j.
struct AdjacencyBits {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonicalOrder> rows{};

    friend bool operator==(const AdjacencyBits&, const AdjacencyBits&) = default;
    friend auto operator<=>(const AdjacencyBits&, const AdjacencyBits&) = default;
};

struct AdjacencyBitsHash {
    std::size_t operator()(const AdjacencyBits& a) const noexcept;
};

/// Throws TooLarge beyond kMaxCanonicalOrder vertices.
AdjacencyBits to_bits(const Graph& g);
Graph from_bits(const AdjacencyBits& a);

/// Canonical labelling by individualisation-refinement: the ordered
/// partition is refined to an equitable one (cells split by neighbour counts
/// into each other cell, smaller counts first), the first non-singleton cell
/// is individualised in every possible way, and the lexicographically least
/// relabelled adjacency among the discrete leaves is the canonical form.
/// Refinement and target-cell choice commute with relabelling, so isomorphic
/// inputs reach the same least leaf.
struct CanonicalResult {
    AdjacencyBits code;
    std::vector<Vertex> labeling;  // labeling[v] = canonical index of v
};

CanonicalResult canonical_labeling(const AdjacencyBits& a);
AdjacencyBits canonical_code(const AdjacencyBits& a);
AdjacencyBits canonical_code(const Graph& g);

/// Graph relabelled into canonical form.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace subcubic
