#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcubic/families.hpp"
#include "subcubic/graph.hpp"
#include "subcubic/polytope.hpp"
#include "subcubic/rational.hpp"

namespace subcubic {

/// Lower bound ν >= x3*n3 + x2*n2 + x1*n1 - K, with K multiplied by the
/// component count when per_component is set.
struct BoundSpec {
    std::string id;
    CoefficientTriple triple;
    Rational k;
    bool per_component = true;

    Rational rhs(const DegreeProfile& p) const;
};

struct BoundReport {
    std::int64_t nu = 0;
    Rational rhs;
    Rational slack;  // nu - rhs; negative is a violation
    bool tight = false;

    bool violated() const { return slack.sign() < 0; }
};

/// b1..b5, all per-component:
///   b1: n2/2 + n1/2 - c/2
///   b2: n2/3 + 2n1/3 - c
///   b3: n3/4 + n2/2 + n1/4 - c/2
///   b4: 7n3/16 + 3n2/8 + 3n1/16 - c/8
///   b5: 4n3/9 + n2/3 + 2n1/9 - c/9
std::vector<BoundSpec> theorem3_bounds();
std::optional<BoundSpec> theorem3_bound(std::string_view id);

BoundReport make_report(std::int64_t nu, const Rational& rhs);

/// Throws NotSubcubic.
BoundReport evaluate_bound(const Graph& g, const BoundSpec& spec);
BoundReport evaluate_bound(const DegreeProfile& profile, std::int64_t nu, const BoundSpec& spec);

/// Report computed from a family's closed-form profile and matching number.
BoundReport closed_form_report(const FamilySpec& family, const BoundSpec& spec);

/// Constant K that works for every connected subcubic graph when the
/// triple lies in P: 1 if x3 >= 0, else 2|x3| + 1. Throws NotInP.
Rational corollary4_constant(const CoefficientTriple& triple);

struct Counterexample {
    std::size_t halfspace = 0;  // index into polyhedron_P()
    FamilySpec family;
    BoundReport report;              // closed-form certificate
    std::optional<Graph> graph;      // materialised when small enough
    bool certified_by_matching = false;
};

/// Largest family order whose stats include a measured matching number.
inline constexpr std::int64_t kMatchingCertifyLimit = 60;
/// Largest counterexample order re-checked with max_matching.
inline constexpr std::int64_t kCounterexampleCertifyLimit = 2'000;
/// Largest family member materialised as a Graph.
inline constexpr std::int64_t kMaterializeLimit = 100'000;

/// Picks the violated half-space with the largest excess (ties: lowest
/// index), maps it to its family and returns the smallest admissible t with
/// negative slack. Throws TripleInP, or LimitExceeded if the required t does
/// not fit the family's parameter range.
Counterexample counterexample(const CoefficientTriple& triple, const Rational& k);

/// Same search restricted to the family of half-space `index`, starting at
/// t >= from_t. The half-space must be violated by the triple.
Counterexample counterexample_for(const CoefficientTriple& triple, const Rational& k, std::size_t index,
                                  std::int64_t from_t = 0);

struct Theorem1Report {
    bool cubic = false;
    std::optional<BoundReport> cubic_bound;  // 4(n-1)/9, only for 3-regular graphs
    BoundReport subcubic_bound;              // (n-1)/3
};

/// Throws NotSubcubic or NotConnected.
Theorem1Report theorem1_check(const Graph& g);

}  // namespace subcubic
