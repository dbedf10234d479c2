#include "subcubic/families.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

constexpr std::int64_t kMaxLinearParameter = std::int64_t{1} << 50;
constexpr std::int64_t kMaxExponentialParameter = 57;
constexpr std::int64_t kMaxGeneratedOrder = 4'000'000;

constexpr std::int64_t pow2(std::int64_t k) { return std::int64_t{1} << k; }

// J template: x = 0, the subdivided K4 edge is a-b with a = 1, b = 2.
constexpr std::array<std::pair<int, int>, 7> kGadgetEdges{{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// Graft a copy of J, identifying its vertex x with `attach`.
void graft_j(std::vector<Edge>& edges, Vertex attach, Vertex& next) {
    const std::array<Vertex, 5> map{attach, next, next + 1, next + 2, next + 3};
    next += 4;
    for (const auto& [a, b] : kGadgetEdges) {
        edges.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    }
}

// Cubic-interior tree with levels 0..t below the root; returns leaves.
std::vector<Vertex> build_tree(std::int64_t t, std::vector<Edge>& edges, Vertex& next) {
    const Vertex root = next++;
    std::vector<Vertex> level;
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(root, next);
        level.push_back(next++);
    }
    for (std::int64_t depth = 1; depth <= t; ++depth) {
        std::vector<Vertex> below;
        below.reserve(level.size() * 2);
        for (Vertex parent : level) {
            for (int i = 0; i < 2; ++i) {
                edges.emplace_back(parent, next);
                below.push_back(next++);
            }
        }
        level = std::move(below);
    }
    return level;
}

// Cycle on 2t vertices with a pendant at each even position; returns pendants.
std::vector<Vertex> build_comb_cycle(std::int64_t t, std::vector<Edge>& edges, Vertex& next) {
    const auto len = static_cast<Vertex>(2 * t);
    for (Vertex i = 0; i < len; ++i) {
        edges.emplace_back(i, (i + 1) % len);
    }
    next = len;
    std::vector<Vertex> pendants;
    for (Vertex i = 0; i < len; i += 2) {
        edges.emplace_back(i, next);
        pendants.push_back(next++);
    }
    return pendants;
}

}  // namespace

std::string to_string(Family f) { return "G" + std::to_string(static_cast<int>(f)); }

std::optional<Family> parse_family(std::string_view name) {
    if (name.size() == 2 && (name[0] == 'G' || name[0] == 'g') && name[1] >= '1' && name[1] <= '6') {
        return static_cast<Family>(name[1] - '0');
    }
    return std::nullopt;
}

std::int64_t min_parameter(Family f) {
    switch (f) {
        case Family::G1:
        case Family::G2: return 1;
        case Family::G3:
        case Family::G4: return 2;
        case Family::G5: return 4;
        case Family::G6: return 3;
    }
    throw InvalidParameter("unknown family");
}

std::int64_t parameter_step(Family f) { return (f == Family::G3 || f == Family::G4) ? 1 : 2; }

std::int64_t max_parameter(Family f) {
    switch (f) {
        case Family::G1:
        case Family::G2: return kMaxExponentialParameter;
        case Family::G3:
        case Family::G4:
        case Family::G5: return kMaxLinearParameter;
        case Family::G6: return kMaxLinearParameter + 1;
    }
    throw InvalidParameter("unknown family");
}

void validate(const FamilySpec& spec) {
    const Family f = spec.family;
    const std::int64_t t = spec.t;
    const std::string name = to_string(f);
    switch (f) {
        case Family::G1:
        case Family::G2:
            if (t < 1 || t % 2 == 0) throw InvalidParameter(name + " requires t odd >= 1");
            break;
        case Family::G3:
        case Family::G4:
            if (t < 2) throw InvalidParameter(name + " requires t >= 2");
            break;
        case Family::G5:
            if (t < 4 || t % 2 != 0) throw InvalidParameter(name + " requires t even >= 4");
            break;
        case Family::G6:
            if (t < 3 || t % 2 == 0) throw InvalidParameter(name + " requires t odd >= 3");
            break;
        default: throw InvalidParameter("unknown family");
    }
    if (t > max_parameter(f)) {
        throw InvalidParameter(name + " requires t <= " + std::to_string(max_parameter(f)));
    }
}

DegreeProfile closed_profile(const FamilySpec& spec) {
    validate(spec);
    const std::int64_t t = spec.t;
    DegreeProfile p;
    p.c = 1;
    switch (spec.family) {
        case Family::G1:
            p.n1 = 3 * pow2(t);
            p.n3 = 3 * pow2(t) - 2;
            break;
        case Family::G2: p.n3 = 9 * pow2(t + 1) - 2; break;
        case Family::G3: p.n1 = p.n2 = p.n3 = t; break;
        case Family::G4:
            p.n2 = t;
            p.n3 = 6 * t;
            break;
        case Family::G5:
            p.n2 = 3 * t / 2;
            p.n3 = t;
            break;
        case Family::G6: p.n2 = t; break;
    }
    return p;
}

std::int64_t closed_nu(const FamilySpec& spec) {
    validate(spec);
    const std::int64_t t = spec.t;
    switch (spec.family) {
        case Family::G1: return pow2(t + 1) - 1;
        case Family::G2: return pow2(t + 3) - 1;
        case Family::G3:
        case Family::G5: return t;
        case Family::G4: return 3 * t;
        case Family::G6: return (t - 1) / 2;
    }
    throw InvalidParameter("unknown family");
}

Graph gadget_j() {
    std::vector<Edge> edges;
    for (const auto& [a, b] : kGadgetEdges) edges.emplace_back(a, b);
    return Graph(5, edges);
}

Graph generate(const FamilySpec& spec) {
    const std::int64_t order = closed_order(spec);  // validates
    if (order > kMaxGeneratedOrder) {
        throw TooLarge(to_string(spec.family) + "(" + std::to_string(spec.t) + ") would have " +
                       std::to_string(order) + " vertices");
    }
    const std::int64_t t = spec.t;
    std::vector<Edge> edges;
    Vertex next = 0;
    switch (spec.family) {
        case Family::G1: build_tree(t, edges, next); break;
        case Family::G2:
            for (Vertex leaf : build_tree(t, edges, next)) graft_j(edges, leaf, next);
            break;
        case Family::G3: build_comb_cycle(t, edges, next); break;
        case Family::G4:
            for (Vertex leaf : build_comb_cycle(t, edges, next)) graft_j(edges, leaf, next);
            break;
        case Family::G5: {
            const auto h = static_cast<Vertex>(t);
            std::vector<Edge> base;
            for (Vertex i = 0; i < h; ++i) base.emplace_back(i, (i + 1) % h);
            for (Vertex i = 0; i < h / 2; ++i) base.emplace_back(i, i + h / 2);
            std::sort(base.begin(), base.end());
            next = h;
            for (const Edge& e : base) {
                edges.emplace_back(e.u, next);
                edges.emplace_back(next, e.v);
                ++next;
            }
            break;
        }
        case Family::G6: {
            const auto len = static_cast<Vertex>(t);
            for (Vertex i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
            next = len;
            break;
        }
    }
    return Graph(next, edges);
}

Family violated_inequality_family(std::size_t index) {
    static constexpr std::array<Family, 6> kMap{Family::G2, Family::G6, Family::G1,
                                                Family::G5, Family::G3, Family::G4};
    if (index >= kMap.size()) {
        throw InvalidParameter("half-space index " + std::to_string(index) + " out of range 0..5");
    }
    return kMap[index];
}

}  // namespace subcubic
