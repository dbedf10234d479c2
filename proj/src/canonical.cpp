#include "subcubic/canonical.hpp"

#include <bit>
#include <string>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

struct Partition {
    std::array<std::uint16_t, kMaxCanonicalOrder> cells{};
    int count = 0;

    void insert_after(int c, std::uint16_t mask) {
        for (int i = count; i > c + 1; --i) cells[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i - 1)];
        cells[static_cast<std::size_t>(c + 1)] = mask;
        ++count;
    }
};

class Canonizer {
public:
    explicit Canonizer(const AdjacencyBits& a) : a_(a) {}

    CanonicalResult run() {
        Partition root;
        // initial cells by degree, ascending
        for (int d = 0; d <= a_.n; ++d) {
            std::uint16_t mask = 0;
            for (int v = 0; v < a_.n; ++v) {
                if (std::popcount(a_.rows[static_cast<std::size_t>(v)]) == d) mask |= static_cast<std::uint16_t>(1u << v);
            }
            if (mask != 0) root.cells[static_cast<std::size_t>(root.count++)] = mask;
        }
        search(root);
        CanonicalResult out;
        out.code = best_;
        out.labeling.assign(best_labels_.begin(), best_labels_.begin() + a_.n);
        return out;
    }

private:
    int neighbours_in(int v, std::uint16_t mask) const {
        return std::popcount(static_cast<std::uint16_t>(a_.rows[static_cast<std::size_t>(v)] & mask));
    }

    // Split the first cell that is not uniform with respect to some splitter;
    // returns false once the partition is equitable.
    bool split_once(Partition& p) const {
        for (int s = 0; s < p.count; ++s) {
            const std::uint16_t splitter = p.cells[static_cast<std::size_t>(s)];
            for (int c = 0; c < p.count; ++c) {
                const std::uint16_t cell = p.cells[static_cast<std::size_t>(c)];
                if (std::popcount(cell) == 1) continue;
                std::array<std::uint16_t, kMaxCanonicalOrder + 1> groups{};  // by neighbour count
                for (std::uint16_t m = cell; m != 0; m &= static_cast<std::uint16_t>(m - 1)) {
                    const int v = std::countr_zero(m);
                    groups[static_cast<std::size_t>(neighbours_in(v, splitter))] |= static_cast<std::uint16_t>(1u << v);
                }
                int nonempty = 0;
                for (auto g : groups) nonempty += g != 0;
                if (nonempty < 2) continue;
                int at = c;
                bool first = true;
                for (auto g : groups) {
                    if (g == 0) continue;
                    if (first) {
                        p.cells[static_cast<std::size_t>(c)] = g;
                        first = false;
                    } else {
                        p.insert_after(at, g);
                        ++at;
                    }
                }
                return true;
            }
        }
        return false;
    }

    void search(Partition p) {
        while (split_once(p)) {
        }
        if (p.count == a_.n) {
            leaf(p);
            return;
        }
        int target = 0;
        while (std::popcount(p.cells[static_cast<std::size_t>(target)]) == 1) ++target;
        const std::uint16_t cell = p.cells[static_cast<std::size_t>(target)];
        for (std::uint16_t m = cell; m != 0; m &= static_cast<std::uint16_t>(m - 1)) {
            const auto single = static_cast<std::uint16_t>(m & -m);
            Partition child = p;
            child.cells[static_cast<std::size_t>(target)] = single;
            child.insert_after(target, static_cast<std::uint16_t>(cell ^ single));
            search(child);
        }
    }

    void leaf(const Partition& p) {
        std::array<int, kMaxCanonicalOrder> label{};
        for (int i = 0; i < a_.n; ++i) {
            label[static_cast<std::size_t>(std::countr_zero(p.cells[static_cast<std::size_t>(i)]))] = i;
        }
        AdjacencyBits code;
        code.n = a_.n;
        for (int i = 0; i < a_.n; ++i) {
            const int v = std::countr_zero(p.cells[static_cast<std::size_t>(i)]);
            std::uint16_t row = 0;
            for (std::uint16_t m = a_.rows[static_cast<std::size_t>(v)]; m != 0; m &= static_cast<std::uint16_t>(m - 1)) {
                row |= static_cast<std::uint16_t>(1u << label[static_cast<std::size_t>(std::countr_zero(m))]);
            }
            code.rows[static_cast<std::size_t>(i)] = row;
        }
        if (!have_best_ || code < best_) {
            best_ = code;
            best_labels_ = label;
            have_best_ = true;
        }
    }

    const AdjacencyBits& a_;
    AdjacencyBits best_;
    std::array<int, kMaxCanonicalOrder> best_labels_{};
    bool have_best_ = false;
};

}  // namespace

std::size_t AdjacencyBitsHash::operator()(const AdjacencyBits& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(a.n);
    for (int i = 0; i < a.n; ++i) {
        h ^= a.rows[static_cast<std::size_t>(i)];
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

AdjacencyBits to_bits(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw TooLarge("canonical form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
    }
    AdjacencyBits a;
    a.n = g.order();
    for (const Edge& e : g.edges()) {
        a.rows[static_cast<std::size_t>(e.u)] |= static_cast<std::uint16_t>(1u << e.v);
        a.rows[static_cast<std::size_t>(e.v)] |= static_cast<std::uint16_t>(1u << e.u);
    }
    return a;
}

Graph from_bits(const AdjacencyBits& a) {
    std::vector<Edge> edges;
    for (int u = 0; u < a.n; ++u) {
        for (int v = u + 1; v < a.n; ++v) {
            if ((a.rows[static_cast<std::size_t>(u)] >> v) & 1u) edges.emplace_back(u, v);
        }
    }
    return Graph(a.n, edges);
}

CanonicalResult canonical_labeling(const AdjacencyBits& a) {
    if (a.n == 0) return {a, {}};
    return Canonizer(a).run();
}

AdjacencyBits canonical_code(const AdjacencyBits& a) { return canonical_labeling(a).code; }

AdjacencyBits canonical_code(const Graph& g) { return canonical_code(to_bits(g)); }

Graph canonical_graph(const Graph& g) { return from_bits(canonical_code(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

}  // namespace subcubic
