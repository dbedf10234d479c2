#include "subcubic/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

constexpr Vertex kNone = -1;

// Augmenting-path search with blossom shrinking. Blossoms are contracted
// implicitly through base[]: every vertex of a shrunken blossom points at
// the blossom's base, and parent[] records the alternating tree so the
// path can be unwound through odd cycles.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g),
          n_(static_cast<std::size_t>(g.order())),
          mate_(n_, kNone),
          parent_(n_, kNone),
          base_(n_),
          in_tree_(n_, false),
          in_blossom_(n_, false) {}

    std::vector<Vertex> run() {
        greedy_start();
        for (Vertex root = 0; root < static_cast<Vertex>(n_); ++root) {
            if (mate_[idx(root)] != kNone) {
                continue;
            }
            const Vertex end = find_augmenting_path(root);
            if (end != kNone) {
                augment(end);
            }
        }
        return mate_;
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    void greedy_start() {
        for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u) {
            if (mate_[idx(u)] != kNone) continue;
            for (Vertex w : g_.neighbors(u)) {
                if (mate_[idx(w)] == kNone) {
                    mate_[idx(u)] = w;
                    mate_[idx(w)] = u;
                    break;
                }
            }
        }
    }

    Vertex lowest_common_base(Vertex a, Vertex b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (mate_[idx(a)] == kNone) break;
            a = parent_[idx(mate_[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)]) return b;
            b = parent_[idx(mate_[idx(b)])];
        }
    }

    void mark_path(Vertex v, Vertex blossom_base, Vertex child) {
        while (base_[idx(v)] != blossom_base) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = mate_[idx(v)];
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    void shrink(Vertex u, Vertex w, std::deque<Vertex>& queue) {
        const Vertex b = lowest_common_base(u, w);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_path(u, b, w);
        mark_path(w, b, u);
        for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[i])]) {
                base_[i] = b;
                if (!in_tree_[i]) {
                    in_tree_[i] = true;
                    queue.push_back(static_cast<Vertex>(i));
                }
            }
        }
    }

    // Returns the free vertex that ends an augmenting path from root, or kNone.
    Vertex find_augmenting_path(Vertex root) {
        std::fill(in_tree_.begin(), in_tree_.end(), false);
        std::fill(parent_.begin(), parent_.end(), kNone);
        for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);

        std::deque<Vertex> queue{root};
        in_tree_[idx(root)] = true;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g_.neighbors(u)) {
                if (base_[idx(u)] == base_[idx(w)] || mate_[idx(u)] == w) {
                    continue;
                }
                const bool w_outer = w == root || (mate_[idx(w)] != kNone && parent_[idx(mate_[idx(w)])] != kNone);
                if (w_outer) {
                    shrink(u, w, queue);
                } else if (parent_[idx(w)] == kNone) {
                    parent_[idx(w)] = u;
                    if (mate_[idx(w)] == kNone) {
                        return w;
                    }
                    const Vertex next = mate_[idx(w)];
                    in_tree_[idx(next)] = true;
                    queue.push_back(next);
                }
            }
        }
        return kNone;
    }

    void augment(Vertex v) {
        while (v != kNone) {
            const Vertex pv = parent_[idx(v)];
            const Vertex ppv = mate_[idx(pv)];
            mate_[idx(v)] = pv;
            mate_[idx(pv)] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> mate_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<bool> in_tree_;
    std::vector<bool> in_blossom_;
};

class BruteForce {
public:
    explicit BruteForce(const Graph& g) : used_(static_cast<std::size_t>(g.order()), 0) {
        edges_ = g.edges();
        // low degree-sum first: those edges are the ones a maximum matching
        // is most constrained to use, which finds a good incumbent early
        std::stable_sort(edges_.begin(), edges_.end(), [&g](const Edge& a, const Edge& b) {
            return g.degree(a.u) + g.degree(a.v) < g.degree(b.u) + g.degree(b.v);
        });
    }

    int solve() {
        search(0, 0);
        return best_;
    }

private:
    int upper_bound(std::size_t from) const {
        std::vector<bool> free_touched(used_.size(), false);
        int touched = 0;
        int usable = 0;
        for (std::size_t i = from; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (used_[static_cast<std::size_t>(e.u)] || used_[static_cast<std::size_t>(e.v)]) continue;
            ++usable;
            for (Vertex x : {e.u, e.v}) {
                if (!free_touched[static_cast<std::size_t>(x)]) {
                    free_touched[static_cast<std::size_t>(x)] = true;
                    ++touched;
                }
            }
        }
        return std::min(usable, touched / 2);
    }

    void search(std::size_t i, int matched) {
        best_ = std::max(best_, matched);
        if (i == edges_.size() || matched + upper_bound(i) <= best_) {
            return;
        }
        const Edge& e = edges_[i];
        char& a = used_[static_cast<std::size_t>(e.u)];
        char& b = used_[static_cast<std::size_t>(e.v)];
        if (!a && !b) {
            a = 1;
            b = 1;
            search(i + 1, matched + 1);
            a = 0;
            b = 0;
        }
        search(i + 1, matched);
    }

    std::vector<Edge> edges_;
    std::vector<char> used_;
    int best_ = 0;
};

}  // namespace

Matching max_matching(const Graph& g) {
    const auto mate = BlossomMatcher(g).run();
    Matching m;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (mate[static_cast<std::size_t>(v)] > v) {
            m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
        }
    }
    return m;
}

int matching_number(const Graph& g) { return static_cast<int>(max_matching(g).size()); }

int brute_force_nu(const Graph& g) {
    if (g.size() > kBruteForceEdgeLimit) {
        throw TooLarge("brute-force matching limited to " + std::to_string(kBruteForceEdgeLimit) + " edges, got " +
                       std::to_string(g.size()));
    }
    return BruteForce(g).solve();
}

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

bool is_hypomatchable(const Graph& g) {
    if (g.order() % 2 == 0) {
        return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!has_perfect_matching(remove_vertex(g, v).graph)) {
            return false;
        }
    }
    return true;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
    for (const Edge& e : m.edges) {
        if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
            return false;
        }
        for (Vertex x : {e.u, e.v}) {
            if (covered[static_cast<std::size_t>(x)]) return false;
            covered[static_cast<std::size_t>(x)] = true;
        }
    }
    return true;
}

}  // namespace subcubic
