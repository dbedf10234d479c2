// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <optional>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "subcubic/bounds.hpp"
#include "subcubic/enumerate.hpp"
#include "subcubic/errors.hpp"
#include "subcubic/families.hpp"
#include "subcubic/matching.hpp"
#include "subcubic/polytope.hpp"
#include "subcubic/structure.hpp"
#include "test_support.hpp"

using namespace subcubic;
using namespace subcubic::testing;

namespace {

CoefficientTriple T(const char* s) { return CoefficientTriple::parse(s); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// 1. extreme points of P+ through the CLI, exact
Outcome extreme_points() {
    Outcome o;
    const std::vector<const char*> listed{"0,1/2,1/2", "0,1/3,2/3", "1/4,1/2,1/4", "7/16,3/8,3/16", "4/9,1/3,2/9",
                                          "1/4,1/2,0", "7/16,3/8,0", "0,1/2,0",     "4/9,0,0",       "0,0,0",
                                          "4/9,1/3,0", "0,0,2/3",   "4/9,0,2/9"};
    std::set<CoefficientTriple> expected;
    for (const char* s : listed) expected.insert(T(s));

    std::ostringstream out, err;
    if (cli::run({"polytope", "vertices"}, out, err) != 0) o.fail("cli exit code");
    std::istringstream in(out.str());
    std::vector<CoefficientTriple> got;
    for (std::string line; std::getline(in, line);) got.push_back(T(line.c_str()));
    if (got.size() != 13) o.fail("expected 13 lines, got " + std::to_string(got.size()));
    if (std::set<CoefficientTriple>(got.begin(), got.end()) != expected) o.fail("point set differs");
    if (!std::is_sorted(got.begin(), got.end())) o.fail("not sorted");
    o.detail = o.pass ? "13 points, exact" : o.detail;
    return o;
}

// 2. all five bounds on every connected subcubic graph up to 12 vertices
Outcome bounds_sweep() {
    Outcome o;
    const auto specs = theorem3_bounds();
    std::int64_t graphs = 0;
    enumerate_subcubic({12, true, true}, [&](const Graph& g) {
        const DegreeProfile p = degree_profile(g);
        const int nu = matching_number(g);
        if (p.c != 1) o.fail("disconnected graph in corpus");
        for (const auto& spec : specs)
            if (evaluate_bound(p, nu, spec).violated()) o.fail(spec.id + " violated on " + std::to_string(graphs));
        ++graphs;
    });
    if (graphs != 27525) o.fail("corpus size " + std::to_string(graphs));
    if (o.pass) o.detail = std::to_string(graphs) + " graphs x 5 bounds, 0 violations";
    return o;
}

// 3. sharpness fixtures
Outcome sharpness() {
    Outcome o;
    struct Fixture {
        std::string name;
        Graph g;
        const char* bound;
    };
    const std::vector<Fixture> fixtures{
        {"triangle", cycle(3), "b4"},
        {"C5", cycle(5), "b1"},
        {"C5", cycle(5), "b3"},
        {"K13", claw(), "b1"},
        {"K13", claw(), "b2"},
        {"K13", claw(), "b5"},
        {"G1(1)", generate({Family::G1, 1}), "b2"},
        {"G1(1)", generate({Family::G1, 1}), "b5"},
        {"G2(1)", generate({Family::G2, 1}), "b5"},
        {"G6(3)", generate({Family::G6, 3}), "b1"},
        {"G6(3)", generate({Family::G6, 3}), "b3"},
    };
    for (const auto& f : fixtures) {
        const BoundReport r = evaluate_bound(f.g, *theorem3_bound(f.bound));
        if (!r.tight || !r.slack.is_zero()) o.fail(f.name + " " + f.bound + " slack " + r.slack.to_string());
        if (f.g.size() <= kBruteForceEdgeLimit && r.nu != brute_force_nu(f.g)) o.fail(f.name + " matching oracle");
    }
    if (o.pass) o.detail = std::to_string(fixtures.size()) + " fixtures tight";
    return o;
}

// 4. closed forms against generated graphs up to 60 vertices
Outcome family_fidelity() {
    Outcome o;
    int members = 0;
    for (Family f : {Family::G1, Family::G2, Family::G3, Family::G4, Family::G5, Family::G6}) {
        for (std::int64_t t = min_parameter(f); closed_order({f, t}) <= 60; t += parameter_step(f)) {
            const FamilySpec spec{f, t};
            const Graph g = generate(spec);
            const std::string name = to_string(f) + "(" + std::to_string(t) + ")";
            const int nu = matching_number(g);
            if (nu != closed_nu(spec)) o.fail(name + " nu");
            if (g.size() <= kBruteForceEdgeLimit && brute_force_nu(g) != nu) o.fail(name + " oracle");
            if (degree_profile(g) != closed_profile(spec)) o.fail(name + " profile");
            ++members;
        }
    }
    if (o.pass) o.detail = std::to_string(members) + " members exact";
    return o;
}

// 5. one violating triple per half-space; slack falls over five admissible t
Outcome counterexample_growth() {
    Outcome o;
    const Polyhedron p = polyhedron_P();
    const auto pplus = vertices(polyhedron_P_plus());
    std::ostringstream summary;
    for (std::size_t i = 0; i < p.halfspaces.size(); ++i) {
        const HalfSpace& h = p.halfspaces[i];
        // centroid of the extreme points of P+ on this facet, pushed out along the normal
        CoefficientTriple c{0, 0, 0};
        int on = 0;
        for (const auto& v : pplus)
            if (h.tight_at(v)) {
                c = c + v;
                ++on;
            }
        if (on == 0) {
            o.fail("no extreme point on " + h.label());
            continue;
        }
        const CoefficientTriple b = Rational(1, on) * c;
        // push 1/100 along the normal, clipped to half the room the other
        // half-spaces leave in that direction
        Rational push(1, 100);
        for (std::size_t j = 0; j < p.halfspaces.size(); ++j) {
            const HalfSpace& other = p.halfspaces[j];
            const Rational rate = other.lhs(h.normal());
            if (j == i || rate.sign() <= 0) continue;
            push = std::min(push, (other.bound() - other.lhs(b)) / (2 * rate));
        }
        const CoefficientTriple x = b + push * h.normal();
        const Membership m = contains(p, x);
        if (m.violated != std::vector<std::size_t>{i}) o.fail(x.to_string() + " violates more than " + h.label());

        const Rational k = 1;
        const Counterexample cx = counterexample(x, k);
        if (cx.halfspace != i || cx.family.family != violated_inequality_family(i)) o.fail("wrong family for " + h.label());
        const BoundSpec spec{"x", x, k, true};
        std::optional<Rational> prev;
        FamilySpec f = cx.family;
        for (int step = 0; step < 5; ++step, f.t += parameter_step(f.family)) {
            const BoundReport r = closed_form_report(f, spec);
            if (!r.violated()) o.fail(to_string(f.family) + "(" + std::to_string(f.t) + ") not violated");
            if (prev && !(r.slack < *prev)) o.fail(to_string(f.family) + " slack not decreasing");
            if (closed_order(f) <= kMatchingCertifyLimit) {
                const Graph g = generate(f);
                if (evaluate_bound(g, spec).slack != r.slack) o.fail(to_string(f.family) + " certificate mismatch");
            }
            prev = r.slack;
        }
        summary << (i ? " " : "") << to_string(cx.family.family) << "@t=" << cx.family.t << " push " << push;
    }
    if (o.pass) o.detail = summary.str();
    return o;
}

// 6. the (1/3, 4/9, 1/3) question
Outcome sum_one_question() {
    Outcome o;
    const CoefficientTriple x = T("1/3,4/9,1/3");
    const Polyhedron p = polyhedron_P();
    const Membership m = contains(p, x);
    if (m.violated.size() != 1 || p.halfspaces[m.violated[0]].label() != "x3+x2+x1<=1") o.fail("membership");
    const Counterexample cx = counterexample(x, 0);
    if (cx.family.family != Family::G3) o.fail("family");
    if (!cx.certified_by_matching || !cx.report.violated()) o.fail("certificate");
    const BoundSpec spec{"q", x, 0, true};
    for (std::int64_t t = 2; t <= 9; ++t) {
        const Graph g = generate({Family::G3, t});
        const BoundReport r = evaluate_bound(g, spec);
        if (r.slack != Rational(-t, 9)) o.fail("slack at t=" + std::to_string(t));
        if (r.nu != brute_force_nu(g)) o.fail("oracle at t=" + std::to_string(t));
    }
    if (o.pass) o.detail = "G3(" + std::to_string(cx.family.t) + ") slack " + cx.report.slack.to_string();
    return o;
}

// 7. Gallai-Edmonds properties and n3 >= n1 - 2 up to 9 vertices
Outcome gallai_edmonds_suite() {
    Outcome o;
    std::int64_t graphs = 0;
    enumerate_subcubic({9, true, true}, [&](const Graph& g) {
        if (!verify_ge_properties(g, gallai_edmonds(g)).all()) o.fail("properties on " + std::to_string(graphs));
        const DegreeProfile d = degree_profile(g);
        if (g.order() >= 2 && d.n3 < d.n1 - 2) o.fail("n3 >= n1 - 2 on " + std::to_string(graphs));
        ++graphs;
    });
    if (o.pass) o.detail = std::to_string(graphs) + " graphs";
    return o;
}

// 8. every extreme point with K = 1 up to 10 vertices; claw pair
Outcome extreme_point_bounds() {
    Outcome o;
    const auto pplus = vertices(polyhedron_P_plus());
    std::int64_t graphs = 0;
    enumerate_subcubic({10, true, true}, [&](const Graph& g) {
        const DegreeProfile d = degree_profile(g);
        const int nu = matching_number(g);
        for (const auto& v : pplus)
            if (evaluate_bound(d, nu, BoundSpec{"v", v, 1, false}).violated()) o.fail(v.to_string());
        ++graphs;
    });
    const CoefficientTriple y = T("-1,0,5/3");
    const BoundReport r = evaluate_bound(claw(), BoundSpec{"y", y, corollary4_constant(y), false});
    if (!r.slack.is_zero() || corollary4_constant(y) != Rational(3)) o.fail("claw slack " + r.slack.to_string());
    if (o.pass) o.detail = std::to_string(graphs) + " graphs x 13 points; claw slack 0";
    return o;
}

// 9. blossom against brute force
Outcome oracle_equivalence() {
    Outcome o;
    std::int64_t checked = 0;
    enumerate_subcubic({10, true, true}, [&](const Graph& g) {
        const Matching m = max_matching(g);
        if (!is_valid_matching(g, m) || static_cast<int>(m.size()) != brute_force_nu(g)) o.fail("corpus graph");
        ++checked;
    });
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Graph g = random_subcubic(1 + static_cast<int>(seed % 16), seed);
        const Matching m = max_matching(g);
        if (!is_valid_matching(g, m) || static_cast<int>(m.size()) != brute_force_nu(g))
            o.fail("random seed " + std::to_string(seed));
        ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " graphs, 0 discrepancies";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"extreme points of P+", extreme_points},
        {"five bounds, connected n <= 12", bounds_sweep},
        {"sharpness fixtures", sharpness},
        {"closed-form family fidelity", family_fidelity},
        {"counterexample growth per half-space", counterexample_growth},
        {"(1/3,4/9,1/3) refuted", sum_one_question},
        {"Gallai-Edmonds suite, n <= 9", gallai_edmonds_suite},
        {"extreme points with K = 1, n <= 10", extreme_point_bounds},
        {"blossom = brute force", oracle_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ", " << static_cast<int>(s * 1000) << " ms)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
