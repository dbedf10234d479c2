#include "subcubic/bounds.hpp"

#include <algorithm>

#include "subcubic/errors.hpp"
#include "subcubic/matching.hpp"

namespace subcubic {

namespace {

BoundSpec make_bound(std::string id, Rational x3, Rational x2, Rational x1, Rational k) {
    return BoundSpec{std::move(id), {std::move(x3), std::move(x2), std::move(x1)}, std::move(k), true};
}

Rational closed_slack(const FamilySpec& family, const BoundSpec& spec) {
    return closed_form_report(family, spec).slack;
}

}  // namespace

Rational BoundSpec::rhs(const DegreeProfile& p) const {
    Rational value = triple.x3 * p.n3 + triple.x2 * p.n2 + triple.x1 * p.n1;
    value -= per_component ? k * p.c : k;
    return value;
}

std::vector<BoundSpec> theorem3_bounds() {
    return {
        make_bound("b1", 0, Rational(1, 2), Rational(1, 2), Rational(1, 2)),
        make_bound("b2", 0, Rational(1, 3), Rational(2, 3), 1),
        make_bound("b3", Rational(1, 4), Rational(1, 2), Rational(1, 4), Rational(1, 2)),
        make_bound("b4", Rational(7, 16), Rational(3, 8), Rational(3, 16), Rational(1, 8)),
        make_bound("b5", Rational(4, 9), Rational(1, 3), Rational(2, 9), Rational(1, 9)),
    };
}

std::optional<BoundSpec> theorem3_bound(std::string_view id) {
    for (auto& b : theorem3_bounds()) {
        if (b.id == id) return b;
    }
    return std::nullopt;
}

BoundReport make_report(std::int64_t nu, const Rational& rhs) {
    BoundReport r;
    r.nu = nu;
    r.rhs = rhs;
    r.slack = Rational(nu) - rhs;
    r.tight = r.slack.is_zero();
    return r;
}

BoundReport evaluate_bound(const DegreeProfile& profile, std::int64_t nu, const BoundSpec& spec) {
    return make_report(nu, spec.rhs(profile));
}

BoundReport evaluate_bound(const Graph& g, const BoundSpec& spec) {
    const DegreeProfile profile = degree_profile(g);  // throws NotSubcubic
    return evaluate_bound(profile, matching_number(g), spec);
}

BoundReport closed_form_report(const FamilySpec& family, const BoundSpec& spec) {
    return evaluate_bound(closed_profile(family), closed_nu(family), spec);
}

Rational corollary4_constant(const CoefficientTriple& triple) {
    if (!contains(polyhedron_P(), triple).inside()) {
        throw NotInP("triple " + triple.to_string() + " is not in P");
    }
    if (triple.x3.sign() >= 0) {
        return 1;
    }
    return 2 * abs(triple.x3) + 1;
}

Counterexample counterexample_for(const CoefficientTriple& triple, const Rational& k, std::size_t index,
                                  std::int64_t from_t) {
    const Polyhedron p = polyhedron_P();
    if (index >= p.halfspaces.size() || p.halfspaces[index].satisfied_by(triple)) {
        throw InvalidParameter("half-space " + std::to_string(index) + " is not violated by " + triple.to_string());
    }
    const Family family = violated_inequality_family(index);
    const BoundSpec bound{"custom", triple, k, true};

    const std::int64_t first = min_parameter(family);
    const std::int64_t step = parameter_step(family);
    const std::int64_t last_index = (max_parameter(family) - first) / step;
    std::int64_t lo = from_t <= first ? 0 : (from_t - first + step - 1) / step;
    auto param = [&](std::int64_t i) { return FamilySpec{family, first + step * i}; };
    auto negative = [&](std::int64_t i) { return closed_slack(param(i), bound).sign() < 0; };

    if (lo > last_index) {
        throw LimitExceeded("starting parameter beyond the representable range of " + to_string(family));
    }
    // Slack is strictly decreasing in t on a violated half-space, so gallop
    // then bisect for the first negative value.
    std::int64_t hi = lo;
    std::int64_t stride = 1;
    while (!negative(hi)) {
        if (hi == last_index) {
            throw LimitExceeded("no violation of " + to_string(family) + " within t <= " +
                                std::to_string(max_parameter(family)));
        }
        lo = hi + 1;
        hi = std::min(last_index, hi + stride);
        stride *= 2;
    }
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (negative(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }

    Counterexample out;
    out.halfspace = index;
    out.family = param(hi);
    out.report = closed_form_report(out.family, bound);
    const std::int64_t order = closed_order(out.family);
    if (order <= kMaterializeLimit) {
        out.graph = generate(out.family);
        if (order <= kCounterexampleCertifyLimit) {
            const BoundReport measured = evaluate_bound(*out.graph, bound);
            if (measured.nu != out.report.nu || !measured.violated()) {
                throw std::logic_error("closed form disagrees with max_matching on " + to_string(family) + "(" +
                                       std::to_string(out.family.t) + ")");
            }
            out.certified_by_matching = true;
        }
    }
    return out;
}

Counterexample counterexample(const CoefficientTriple& triple, const Rational& k) {
    const Polyhedron p = polyhedron_P();
    std::optional<std::size_t> pick;
    Rational best;
    for (std::size_t i = 0; i < p.halfspaces.size(); ++i) {
        const Rational excess = p.halfspaces[i].excess(triple);
        if (excess.sign() > 0 && (!pick || excess > best)) {
            pick = i;
            best = excess;
        }
    }
    if (!pick) {
        throw TripleInP();
    }
    return counterexample_for(triple, k, *pick);
}

Theorem1Report theorem1_check(const Graph& g) {
    require_subcubic(g);
    if (!is_connected(g)) {
        throw NotConnected();
    }
    const std::int64_t n = g.order();
    const std::int64_t nu = matching_number(g);
    Theorem1Report out;
    out.cubic = n > 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) out.cubic = false;
    }
    if (out.cubic) {
        out.cubic_bound = make_report(nu, Rational(4 * (n - 1), 9));
    }
    out.subcubic_bound = make_report(nu, Rational(n - 1, 3));
    return out;
}

}  // namespace subcubic
