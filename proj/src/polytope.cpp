#include "subcubic/polytope.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

using Row = std::array<Rational, 4>;  // a3 a2 a1 | b

std::string auto_label(const CoefficientTriple& a, const Rational& b) {
    std::string out;
    const std::array<std::pair<const Rational*, const char*>, 3> terms{
        {{&a.x3, "x3"}, {&a.x2, "x2"}, {&a.x1, "x1"}}};
    for (const auto& [coef, name] : terms) {
        if (coef->is_zero()) continue;
        if (!out.empty() && coef->sign() > 0) out += "+";
        if (*coef == Rational(-1)) {
            out += "-";
        } else if (*coef != Rational(1)) {
            out += coef->to_string() + "*";
        }
        out += name;
    }
    return out + "<=" + b.to_string();
}

std::optional<CoefficientTriple> solve3(std::array<Row, 3> m) {
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        while (pivot < 3 && m[pivot][col].is_zero()) ++pivot;
        if (pivot == 3) return std::nullopt;
        std::swap(m[col], m[pivot]);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return CoefficientTriple{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

Row row_of(const HalfSpace& h) {
    return {h.normal().x3, h.normal().x2, h.normal().x1, h.bound()};
}

Rational dot(const CoefficientTriple& a, const CoefficientTriple& b) {
    return a.x3 * b.x3 + a.x2 * b.x2 + a.x1 * b.x1;
}

CoefficientTriple cross(const CoefficientTriple& a, const CoefficientTriple& b) {
    return {a.x2 * b.x1 - a.x1 * b.x2, a.x1 * b.x3 - a.x3 * b.x1, a.x3 * b.x2 - a.x2 * b.x3};
}

bool is_zero(const CoefficientTriple& v) { return v.x3.is_zero() && v.x2.is_zero() && v.x1.is_zero(); }

int rank_of(const std::vector<CoefficientTriple>& normals) {
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j)
            for (std::size_t k = j + 1; k < normals.size(); ++k)
                if (!dot(cross(normals[i], normals[j]), normals[k]).is_zero()) return 3;
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j)
            if (!is_zero(cross(normals[i], normals[j]))) return 2;
    return normals.empty() ? 0 : 1;
}

bool all_le(const CoefficientTriple& a, const CoefficientTriple& b) {
    return a.x3 <= b.x3 && a.x2 <= b.x2 && a.x1 <= b.x1;
}

}  // namespace

std::string CoefficientTriple::to_string() const {
    return x3.to_string() + "," + x2.to_string() + "," + x1.to_string();
}

CoefficientTriple CoefficientTriple::parse(std::string_view text) {
    std::array<Rational, 3> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        if ((i < 2) == (comma == std::string_view::npos)) {
            throw ParseError("expected three comma-separated fractions: '" + std::string(text) + "'");
        }
        parts[i] = Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        start = comma + 1;
    }
    return {parts[0], parts[1], parts[2]};
}

CoefficientTriple operator+(const CoefficientTriple& a, const CoefficientTriple& b) {
    return {a.x3 + b.x3, a.x2 + b.x2, a.x1 + b.x1};
}

CoefficientTriple operator-(const CoefficientTriple& a, const CoefficientTriple& b) {
    return {a.x3 - b.x3, a.x2 - b.x2, a.x1 - b.x1};
}

CoefficientTriple operator*(const Rational& s, const CoefficientTriple& a) { return {s * a.x3, s * a.x2, s * a.x1}; }

HalfSpace::HalfSpace(Rational a3, Rational a2, Rational a1, Rational b, std::string label)
    : normal_{std::move(a3), std::move(a2), std::move(a1)}, bound_(std::move(b)), label_(std::move(label)) {
    if (is_zero(normal_)) {
        throw InvalidParameter("half-space normal must be nonzero");
    }
    if (label_.empty()) {
        label_ = auto_label(normal_, bound_);
    }
}

Rational HalfSpace::lhs(const CoefficientTriple& x) const { return dot(normal_, x); }

Polyhedron polyhedron_P() {
    return {{
        HalfSpace(1, 0, 0, Rational(4, 9), "x3<=4/9"),
        HalfSpace(0, 1, 0, Rational(1, 2), "x2<=1/2"),
        HalfSpace(1, 0, 1, Rational(2, 3), "x3+x1<=2/3"),
        HalfSpace(1, Rational(3, 2), 0, 1, "x3+3x2/2<=1"),
        HalfSpace(1, 1, 1, 1, "x3+x2+x1<=1"),
        HalfSpace(1, Rational(1, 6), 0, Rational(1, 2), "x3+x2/6<=1/2"),
    }};
}

Polyhedron polyhedron_P_plus() {
    Polyhedron p = polyhedron_P();
    p.halfspaces.emplace_back(-1, 0, 0, 0, "x3>=0");
    p.halfspaces.emplace_back(0, -1, 0, 0, "x2>=0");
    p.halfspaces.emplace_back(0, 0, -1, 0, "x1>=0");
    return p;
}

Membership contains(const Polyhedron& p, const CoefficientTriple& x) {
    Membership m;
    for (std::size_t i = 0; i < p.halfspaces.size(); ++i) {
        const int s = p.halfspaces[i].excess(x).sign();
        if (s > 0) m.violated.push_back(i);
        if (s == 0) m.tight.push_back(i);
    }
    return m;
}

std::vector<CoefficientTriple> vertices(const Polyhedron& p) {
    const auto& hs = p.halfspaces;
    std::vector<CoefficientTriple> normals;
    for (const auto& h : hs) normals.push_back(h.normal());
    if (rank_of(normals) < 3) {
        throw UnboundedInput("constraint normals do not span R^3; the polyhedron has no vertices");
    }

    std::vector<CoefficientTriple> found;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            for (std::size_t k = j + 1; k < hs.size(); ++k) {
                const auto x = solve3({row_of(hs[i]), row_of(hs[j]), row_of(hs[k])});
                if (x && contains(p, *x).inside()) found.push_back(*x);
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    for (const auto& v : found) {
        const auto tight = contains(p, v).tight;
        std::vector<CoefficientTriple> tight_normals;
        CoefficientTriple objective;
        for (std::size_t i : tight) {
            tight_normals.push_back(hs[i].normal());
            objective = objective + hs[i].normal();
        }
        // The sum of tight normals is maximised over P exactly at v, so it
        // strictly separates v from every other candidate.
        const Rational at_v = dot(objective, v);
        const bool extreme = rank_of(tight_normals) == 3 &&
                             std::all_of(found.begin(), found.end(), [&](const CoefficientTriple& u) {
                                 return u == v || dot(objective, u) < at_v;
                             });
        if (!extreme) {
            throw std::logic_error("vertex enumeration produced a non-extreme point " + v.to_string());
        }
        for (std::size_t a = 0; a < tight.size(); ++a) {
            for (std::size_t b = a + 1; b < tight.size(); ++b) {
                const CoefficientTriple d = cross(hs[tight[a]].normal(), hs[tight[b]].normal());
                if (is_zero(d)) continue;
                for (const auto& dir : {d, Rational(-1) * d}) {
                    const bool recedes = std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) {
                        return dot(h.normal(), dir).sign() <= 0;
                    });
                    if (recedes) {
                        throw UnboundedInput("feasible ray from " + v.to_string() + " in direction " + dir.to_string());
                    }
                }
            }
        }
    }
    return found;
}

std::vector<CoefficientTriple> maximal_vertices(std::span<const CoefficientTriple> points) {
    std::vector<CoefficientTriple> out;
    for (const auto& p : points) {
        const bool dominated = std::any_of(points.begin(), points.end(), [&](const CoefficientTriple& q) {
            return q != p && all_le(p, q);
        });
        if (!dominated) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoefficientTriple project_to_Pplus(const CoefficientTriple& x) {
    if (!contains(polyhedron_P(), x).inside()) {
        throw NotInP("point " + x.to_string() + " is not in P");
    }
    CoefficientTriple y = x;
    if (y.x2.sign() < 0) {
        y.x2 = 0;
    }
    if (y.x3.sign() < 0) {
        // inverse shift by lambda = -x3
        y = {0, y.x2, y.x1 + y.x3};
    }
    if (y.x1.sign() < 0) {
        y.x1 = 0;
    }
    return y;
}

CoefficientTriple shift_transform(const CoefficientTriple& x, const Rational& lambda) {
    if (lambda.sign() < 0) {
        throw NegativeLambda();
    }
    return {x.x3 - lambda, x.x2, x.x1 + lambda};
}

}  // namespace subcubic
