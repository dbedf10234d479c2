#include "subcubic/structure.hpp"

#include <algorithm>
#include <functional>

#include "subcubic/errors.hpp"
#include "subcubic/matching.hpp"

namespace subcubic {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Kuhn's augmenting-path matching; left side indices 0..adj.size()-1.
int bipartite_matching_size(const std::vector<std::vector<int>>& adj, int right_count) {
    std::vector<int> right_mate(static_cast<std::size_t>(right_count), -1);
    std::vector<char> visited;
    std::function<bool(int)> try_augment = [&](int left) {
        for (int r : adj[static_cast<std::size_t>(left)]) {
            if (visited[static_cast<std::size_t>(r)]) continue;
            visited[static_cast<std::size_t>(r)] = 1;
            if (right_mate[static_cast<std::size_t>(r)] == -1 || try_augment(right_mate[static_cast<std::size_t>(r)])) {
                right_mate[static_cast<std::size_t>(r)] = left;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (std::size_t left = 0; left < adj.size(); ++left) {
        visited.assign(static_cast<std::size_t>(right_count), 0);
        if (try_augment(static_cast<int>(left))) ++size;
    }
    return size;
}

bool is_partition_of(const GEDecomposition& d, int order) {
    std::vector<int> hits(static_cast<std::size_t>(order), 0);
    for (const auto* set : {&d.A, &d.B, &d.C}) {
        if (!std::is_sorted(set->begin(), set->end())) return false;
        for (Vertex v : *set) {
            if (v < 0 || v >= order) return false;
            ++hits[idx(v)];
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// Components of G[A] numbered by smallest vertex, as label per vertex (-1 outside A).
std::vector<int> a_component_labels(const Graph& g, const std::vector<Vertex>& A, int& count) {
    const InducedSubgraph sub = induced_subgraph(g, A);
    const auto local = component_labels(sub.graph, &count);
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < A.size(); ++i) {
        label[idx(A[i])] = local[i];
    }
    return label;
}

}  // namespace

GEDecomposition gallai_edmonds(const Graph& g) {
    const int nu = matching_number(g);
    GEDecomposition d;
    std::vector<bool> in_a(static_cast<std::size_t>(g.order()), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (matching_number(remove_vertex(g, v).graph) == nu) {
            in_a[idx(v)] = true;
            d.A.push_back(v);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_a[idx(v)]) continue;
        const auto& nb = g.neighbors(v);
        const bool touches_a = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return in_a[idx(w)]; });
        (touches_a ? d.B : d.C).push_back(v);
    }
    return d;
}

std::vector<std::vector<int>> b_component_incidence(const Graph& g, const GEDecomposition& d) {
    int count = 0;
    const auto label = a_component_labels(g, d.A, count);
    std::vector<std::vector<int>> out;
    out.reserve(d.B.size());
    for (Vertex b : d.B) {
        std::vector<int> seen;
        for (Vertex w : g.neighbors(b)) {
            if (label[idx(w)] >= 0) seen.push_back(label[idx(w)]);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        out.push_back(std::move(seen));
    }
    return out;
}

GEReport verify_ge_properties(const Graph& g, const GEDecomposition& d) {
    if (!is_partition_of(d, g.order()) || d != gallai_edmonds(g)) {
        throw DecompositionMismatch("supplied partition is not the Gallai-Edmonds decomposition of the graph");
    }

    GEReport report;

    report.a_components_hypomatchable = true;
    for (const Graph& comp : components(induced_subgraph(g, d.A).graph)) {
        if (!is_hypomatchable(comp)) {
            report.a_components_hypomatchable = false;
            break;
        }
    }

    report.c_has_perfect_matching = has_perfect_matching(induced_subgraph(g, d.C).graph);

    int comp_count = 0;
    a_component_labels(g, d.A, comp_count);
    report.a_component_count = comp_count;
    const auto incidence = b_component_incidence(g, d);
    report.b_matched = bipartite_matching_size(incidence, comp_count);

    bool surplus = report.b_matched == static_cast<int>(d.B.size());
    for (std::size_t b = 0; surplus && b < incidence.size(); ++b) {
        auto doubled = incidence;
        doubled.push_back(incidence[b]);
        surplus = bipartite_matching_size(doubled, comp_count) == static_cast<int>(doubled.size());
    }
    report.b_has_surplus = surplus;
    return report;
}

}  // namespace subcubic
