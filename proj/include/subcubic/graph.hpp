#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace subcubic {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Neighbour lists are kept sorted, so iteration order is a function of the
/// edge set alone. Construction rejects loops, duplicate edges and
/// out-of-range endpoints with InvalidGraph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept;
    bool adjacent(Vertex a, Vertex b) const;

    /// Edges sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A graph derived from another by keeping a subset of vertices.
/// original[i] is the index in the parent graph of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// Subgraph induced by `keep`; new indices follow the order of `keep`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// G - v, with the remaining vertices renumbered in increasing order.
InducedSubgraph remove_vertex(const Graph& g, Vertex v);

/// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

struct DegreeProfile {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t n3 = 0;
    std::int64_t c = 0;

    std::int64_t order() const noexcept { return n0 + n1 + n2 + n3; }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

bool is_subcubic(const Graph& g);

/// Throws NotSubcubic naming the first offending vertex.
void require_subcubic(const Graph& g);

/// Counts by degree plus the number of connected components.
DegreeProfile degree_profile(const Graph& g);

/// component_labels[v] is the index of v's component; components are
/// numbered in order of their smallest vertex.
std::vector<int> component_labels(const Graph& g, int* count = nullptr);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components, ordered by smallest original vertex.
std::vector<InducedSubgraph> component_subgraphs(const Graph& g);
std::vector<Graph> components(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace subcubic
