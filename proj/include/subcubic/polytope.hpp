#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcubic/rational.hpp"

namespace subcubic {

/// Coefficients (x3, x2, x1) attached to the counts of degree-3, degree-2
/// and degree-1 vertices. Ordered lexicographically in that order.
struct CoefficientTriple {
    Rational x3;
    Rational x2;
    Rational x1;

    /// "x3,x2,x1" with exact fractions.
    std::string to_string() const;
    static CoefficientTriple parse(std::string_view text);

    friend bool operator==(const CoefficientTriple&, const CoefficientTriple&) = default;
    friend auto operator<=>(const CoefficientTriple&, const CoefficientTriple&) = default;
};

CoefficientTriple operator+(const CoefficientTriple& a, const CoefficientTriple& b);
CoefficientTriple operator-(const CoefficientTriple& a, const CoefficientTriple& b);
CoefficientTriple operator*(const Rational& s, const CoefficientTriple& a);

/// a3*x3 + a2*x2 + a1*x1 <= b.
class HalfSpace {
public:
    HalfSpace(Rational a3, Rational a2, Rational a1, Rational b, std::string label = {});

    const CoefficientTriple& normal() const noexcept { return normal_; }
    const Rational& bound() const noexcept { return bound_; }
    const std::string& label() const noexcept { return label_; }

    Rational lhs(const CoefficientTriple& x) const;
    /// lhs(x) - bound; positive means violated.
    Rational excess(const CoefficientTriple& x) const { return lhs(x) - bound_; }
    bool satisfied_by(const CoefficientTriple& x) const { return excess(x).sign() <= 0; }
    bool tight_at(const CoefficientTriple& x) const { return excess(x).is_zero(); }

private:
    CoefficientTriple normal_;
    Rational bound_;
    std::string label_;
};

struct Polyhedron {
    std::vector<HalfSpace> halfspaces;
};

struct Membership {
    std::vector<std::size_t> violated;  // indices into the half-space list
    std::vector<std::size_t> tight;

    bool inside() const noexcept { return violated.empty(); }
};

/// The six half-spaces, in this order:
///   x3 <= 4/9, x2 <= 1/2, x3+x1 <= 2/3, x3+3x2/2 <= 1, x3+x2+x1 <= 1,
///   x3+x2/6 <= 1/2.
Polyhedron polyhedron_P();

/// P followed by x3 >= 0, x2 >= 0, x1 >= 0.
Polyhedron polyhedron_P_plus();

Membership contains(const Polyhedron& p, const CoefficientTriple& x);

/// Vertex set of a bounded polyhedron, sorted. Every 3-subset of boundary
/// planes is solved exactly; singular systems are skipped. Each vertex is
/// certified extreme, and the edge directions at every vertex are checked
/// for a feasible ray (UnboundedInput). Normals not spanning R^3 also raise
/// UnboundedInput since such a polyhedron has no vertices.
std::vector<CoefficientTriple> vertices(const Polyhedron& p);

/// Elements not coordinatewise dominated by another element, sorted.
std::vector<CoefficientTriple> maximal_vertices(std::span<const CoefficientTriple> points);

/// Maps a point of P into P+: clear a negative x2, then shift a negative x3
/// onto x1, then clear a negative x1. Throws NotInP.
CoefficientTriple project_to_Pplus(const CoefficientTriple& x);

/// (x3 - lambda, x2, x1 + lambda). Throws NegativeLambda.
CoefficientTriple shift_transform(const CoefficientTriple& x, const Rational& lambda);

}  // namespace subcubic
