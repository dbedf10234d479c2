#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "subcubic/graph.hpp"

namespace subcubic {

enum class Family { G1 = 1, G2, G3, G4, G5, G6 };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// One member of an extremal family. Admissible parameters:
///   G1, G2: t odd >= 1        G3, G4: t >= 2
///   G5:     t even >= 4       G6:     t odd >= 3
/// t is additionally capped so that every closed-form count fits in 63 bits.
struct FamilySpec {
    Family family = Family::G1;
    std::int64_t t = 1;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws InvalidParameter naming the violated constraint.
void validate(const FamilySpec& spec);

/// Smallest admissible t and the step between consecutive admissible values.
std::int64_t min_parameter(Family f);
std::int64_t parameter_step(Family f);
std::int64_t max_parameter(Family f);

/// Vertex numbering:
///   G1 root first, then levels breadth-first, children in parent order;
///   G2 G1 numbering, then the four private vertices of each J copy, leaves
///      in index order;
///   G3 cycle 0..2t-1, pendant of cycle vertex 2i is 2t+i;
///   G4 G3 numbering, then J copies per pendant in order;
///   G5 H = C_t plus antipodal chords on 0..t-1, then one subdivision vertex
///      per edge of H in sorted edge order;
///   G6 the cycle 0..t-1.
Graph generate(const FamilySpec& spec);

DegreeProfile closed_profile(const FamilySpec& spec);
std::int64_t closed_nu(const FamilySpec& spec);

inline std::int64_t closed_order(const FamilySpec& spec) { return closed_profile(spec).order(); }

/// Family whose limit argument forces half-space `index` of polyhedron_P()
/// (0-based, canonical order).
Family violated_inequality_family(std::size_t index);

/// K4 with one edge subdivided; vertex 0 is the degree-2 vertex.
Graph gadget_j();

}  // namespace subcubic
