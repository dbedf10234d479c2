#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic {

inline constexpr int kMaxEnumerationOrder = 12;

struct EnumerationConfig {
    int max_n = 1;
    bool connected_only = true;
    /// Emit each class in canonical labelling. When false, each class is
    /// emitted in the labelling it was first generated in; isomorph
    /// rejection happens either way.
    bool canonical_dedup = true;
};

/// Streams every simple graph with maximum degree <= 3 on 1..max_n vertices,
/// one per isomorphism class, ordered by vertex count and then by canonical
/// code. Connected graphs on n vertices are grown from those on n - 1 by
/// adding a vertex joined to 1..3 vertices of degree <= 2 (deleting a
/// non-cut vertex reverses this), with canonical-form rejection of
/// duplicates. Disconnected graphs are assembled as multisets of connected
/// ones. Throws LimitExceeded when max_n > 12, InvalidParameter when < 1.
void enumerate_subcubic(const EnumerationConfig& cfg, const std::function<void(const Graph&)>& sink);

std::vector<Graph> enumerate_subcubic(const EnumerationConfig& cfg);

/// Connected subcubic graphs on exactly n vertices, canonical and sorted.
std::vector<Graph> connected_subcubic(int n);

/// Pseudorandom connected subcubic graph, deterministic per (n, seed).
/// Edges are inserted between uniformly drawn vertex pairs that keep the
/// degree cap until a drawn target size is reached; disconnected results
/// are rejected and redrawn. No claim of uniformity over graphs.
Graph random_subcubic(int n, std::uint64_t seed);

}  // namespace subcubic
