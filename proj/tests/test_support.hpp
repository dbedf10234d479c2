#pragma once

// Named graphs and independent oracles shared by the test binaries. Nothing
// here calls into the code paths it is used to check: the isomorphism
// oracle permutes vertices exhaustively and the labelled enumerator walks
// every edge subset.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "subcubic/graph.hpp"

namespace subcubic::testing {

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph claw() { return star(3); }

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

inline Graph petersen() {
    return Graph(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                      {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

inline Graph cube() {
    std::vector<Edge> e;
    for (int i = 0; i < 8; ++i)
        for (int b = 1; b < 8; b <<= 1)
            if (i < (i ^ b)) e.emplace_back(i, i ^ b);
    return Graph(8, e);
}

inline Graph wheel(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i == n - 1 ? 1 : i + 1);
    }
    return Graph(n, e);
}

// Labelled adjacency code of g under perm, as a bit string over the upper
// triangle; the minimum over all permutations is an isomorphism invariant.
inline std::uint64_t permuted_code(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            // position (i, j) of the relabelled graph holds edge perm^-1
            if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
                code |= std::uint64_t{1} << bit;
            }
        }
    }
    return code;
}

/// Exhaustive-permutation canonical code (n <= 11 so the code fits 64 bits).
inline std::uint64_t brute_canonical(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, permuted_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline int brute_automorphisms(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint64_t self = permuted_code(g, perm);
    int count = 0;
    do {
        count += permuted_code(g, perm) == self;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Every labelled graph on n vertices (all edge subsets).
template <typename Fn>
void for_each_labelled_graph(int n, Fn&& fn) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1u) e.push_back(slots[k]);
        fn(Graph(n, e));
    }
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace subcubic::testing
