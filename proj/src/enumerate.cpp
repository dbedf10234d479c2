#include "subcubic/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <unordered_map>

#include "subcubic/canonical.hpp"
#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

struct ClassEntry {
    AdjacencyBits canonical;
    AdjacencyBits first_seen;
};

using Level = std::vector<ClassEntry>;

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

Level next_level(const Level& prev, int n) {
    std::unordered_map<AdjacencyBits, AdjacencyBits, AdjacencyBitsHash> seen;
    const int fresh = n - 1;
    for (const ClassEntry& parent : prev) {
        const AdjacencyBits& base = parent.canonical;
        std::vector<int> open;
        for (int v = 0; v < base.n; ++v) {
            if (std::popcount(base.rows[idx(v)]) < 3) open.push_back(v);
        }
        const auto k = open.size();
        auto emit = [&](std::initializer_list<int> picks) {
            AdjacencyBits child = base;
            child.n = n;
            for (int p : picks) {
                const int v = open[idx(p)];
                child.rows[idx(v)] |= static_cast<std::uint16_t>(1u << fresh);
                child.rows[idx(fresh)] |= static_cast<std::uint16_t>(1u << v);
            }
            seen.try_emplace(canonical_code(child), child);
        };
        for (int a = 0; a < static_cast<int>(k); ++a) {
            emit({a});
            for (int b = a + 1; b < static_cast<int>(k); ++b) {
                emit({a, b});
                for (int c = b + 1; c < static_cast<int>(k); ++c) emit({a, b, c});
            }
        }
    }
    Level out;
    out.reserve(seen.size());
    for (auto& [code, first] : seen) out.push_back({code, first});
    std::sort(out.begin(), out.end(),
              [](const ClassEntry& x, const ClassEntry& y) { return x.canonical < y.canonical; });
    return out;
}

// levels[n] holds the connected classes on n vertices, n = 1..max_n.
std::vector<Level> connected_levels(int max_n) {
    std::vector<Level> levels(idx(max_n + 1));
    AdjacencyBits k1;
    k1.n = 1;
    levels[1] = {{k1, k1}};
    for (int n = 2; n <= max_n; ++n) {
        levels[idx(n)] = next_level(levels[idx(n - 1)], n);
    }
    return levels;
}

AdjacencyBits place(const AdjacencyBits& into, const AdjacencyBits& part) {
    AdjacencyBits out = into;
    const int shift = into.n;
    for (int i = 0; i < part.n; ++i) {
        out.rows[idx(shift + i)] = static_cast<std::uint16_t>(part.rows[idx(i)] << shift);
    }
    out.n = into.n + part.n;
    return out;
}

// All multisets of connected classes with total order n, as (size, index)
// pairs taken in nondecreasing order.
void assemble(const std::vector<Level>& levels, int remaining, int min_size, std::size_t min_index,
              const AdjacencyBits& acc, const AdjacencyBits& acc_first, Level& out) {
    if (remaining == 0) {
        out.push_back({canonical_code(acc), acc_first});
        return;
    }
    for (int size = min_size; size <= remaining; ++size) {
        const Level& level = levels[idx(size)];
        for (std::size_t i = size == min_size ? min_index : 0; i < level.size(); ++i) {
            assemble(levels, remaining - size, size, i, place(acc, level[i].canonical), place(acc_first, level[i].first_seen),
                     out);
        }
    }
}

void check_config(const EnumerationConfig& cfg) {
    if (cfg.max_n < 1) {
        throw InvalidParameter("max_n must be at least 1");
    }
    if (cfg.max_n > kMaxEnumerationOrder) {
        throw LimitExceeded("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationOrder) +
                            " vertices; supply an external graph6 corpus for larger orders");
    }
}

}  // namespace

void enumerate_subcubic(const EnumerationConfig& cfg, const std::function<void(const Graph&)>& sink) {
    check_config(cfg);
    const auto levels = connected_levels(cfg.max_n);
    for (int n = 1; n <= cfg.max_n; ++n) {
        Level classes;
        if (cfg.connected_only) {
            classes = levels[idx(n)];
        } else {
            assemble(levels, n, 1, 0, AdjacencyBits{}, AdjacencyBits{}, classes);
            std::sort(classes.begin(), classes.end(),
                      [](const ClassEntry& x, const ClassEntry& y) { return x.canonical < y.canonical; });
        }
        for (const ClassEntry& c : classes) {
            sink(from_bits(cfg.canonical_dedup ? c.canonical : c.first_seen));
        }
    }
}

std::vector<Graph> enumerate_subcubic(const EnumerationConfig& cfg) {
    std::vector<Graph> out;
    enumerate_subcubic(cfg, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> connected_subcubic(int n) {
    check_config({n, true, true});
    const auto levels = connected_levels(n);
    std::vector<Graph> out;
    for (const ClassEntry& c : levels[idx(n)]) out.push_back(from_bits(c.canonical));
    return out;
}

Graph random_subcubic(int n, std::uint64_t seed) {
    if (n < 1) {
        throw InvalidParameter("random_subcubic requires n >= 1");
    }
    if (n == 1) {
        return Graph(1);
    }
    // raw engine output reduced modulo k keeps the stream identical across
    // standard library implementations
    std::mt19937_64 rng(seed);
    auto below = [&rng](std::uint64_t k) { return static_cast<int>(rng() % k); };
    const int min_edges = n - 1;
    const int max_edges = 3 * n / 2;
    for (;;) {
        const int target = min_edges + below(static_cast<std::uint64_t>(max_edges - min_edges + 1));
        std::vector<std::vector<bool>> adj(idx(n), std::vector<bool>(idx(n), false));
        std::vector<int> degree(idx(n), 0);
        std::vector<Edge> edges;
        for (int attempt = 0; attempt < 40 * n && static_cast<int>(edges.size()) < target; ++attempt) {
            const int u = below(static_cast<std::uint64_t>(n));
            const int v = below(static_cast<std::uint64_t>(n));
            if (u == v || adj[idx(u)][idx(v)] || degree[idx(u)] == 3 || degree[idx(v)] == 3) continue;
            adj[idx(u)][idx(v)] = adj[idx(v)][idx(u)] = true;
            ++degree[idx(u)];
            ++degree[idx(v)];
            edges.emplace_back(u, v);
        }
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

}  // namespace subcubic
