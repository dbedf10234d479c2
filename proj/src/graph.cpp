#include "subcubic/graph.hpp"

#include <algorithm>
#include <string>

#include "subcubic/errors.hpp"

namespace subcubic {

Graph::Graph(int order) {
    if (order < 0) {
        throw InvalidGraph("negative vertex count");
    }
    adj_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= order) {
            throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for " +
                               std::to_string(order) + " vertices");
        }
        if (e.u == e.v) {
            throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
        }
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw InvalidGraph("duplicate edge");
        }
    }
    edge_count_ = edges.size();
}

int Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adj_) {
        best = std::max(best, list.size());
    }
    return static_cast<int>(best);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& list = neighbors(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (Vertex w : g.neighbors(keep[i])) {
            const Vertex j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) {
                edges.emplace_back(static_cast<Vertex>(i), j);
            }
        }
    }
    return {Graph(static_cast<int>(keep.size()), edges), {keep.begin(), keep.end()}};
}

InducedSubgraph remove_vertex(const Graph& g, Vertex v) {
    std::vector<Vertex> keep;
    keep.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v) {
            keep.push_back(u);
        }
    }
    return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) {
        edges.emplace_back(e.u + a.order(), e.v + a.order());
    }
    return Graph(a.order() + b.order(), edges);
}

bool is_subcubic(const Graph& g) { return g.max_degree() <= 3; }

void require_subcubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 3) {
            throw NotSubcubic(v, g.degree(v));
        }
    }
}

std::vector<int> component_labels(const Graph& g, int* count) {
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    int next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (label[static_cast<std::size_t>(w)] == -1) {
                    label[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count != nullptr) {
        *count = next;
    }
    return label;
}

int component_count(const Graph& g) {
    int count = 0;
    component_labels(g, &count);
    return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

DegreeProfile degree_profile(const Graph& g) {
    require_subcubic(g);
    DegreeProfile p;
    for (Vertex v = 0; v < g.order(); ++v) {
        switch (g.degree(v)) {
            case 0: ++p.n0; break;
            case 1: ++p.n1; break;
            case 2: ++p.n2; break;
            default: ++p.n3; break;
        }
    }
    p.c = component_count(g);
    return p;
}

std::vector<InducedSubgraph> component_subgraphs(const Graph& g) {
    int count = 0;
    const auto label = component_labels(g, &count);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.order(); ++v) {
        members[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    }
    std::vector<InducedSubgraph> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        out.push_back(induced_subgraph(g, m));
    }
    return out;
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (auto& sub : component_subgraphs(g)) {
        out.push_back(std::move(sub.graph));
    }
    return out;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) {
            continue;
        }
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace subcubic
