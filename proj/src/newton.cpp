#include "newton_widths/newton.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace newton_widths {

bool Polyhedron::contains(const RationalVector& q) const {
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [&](const Inequality& h) { return dot(h.normal, q) <= h.offset; });
}

RationalVector to_vector(const Monomial& m) {
    RationalVector v;
    v.reserve(m.dimension());
    for (int e : m.exponents) v.emplace_back(e);
    return v;
}

namespace {

// Feasibility/extent LP over barycentric weights of `points`:
// variables (lambda, w_1..w_n), sum w = 1, sum w_i p_i = lambda * direction.
LinearProgram barycentric_program(const std::vector<RationalVector>& points, const RationalVector& target,
                                  bool scale_target) {
    const std::size_t n = points.size();
    const std::size_t d = target.size();
    LinearProgram lp;
    lp.objective.assign(n + 1, Rational(0));
    lp.bounds.assign(n + 1, VariableBounds{});
    for (std::size_t i = 1; i <= n; ++i) lp.bounds[i].lower = Rational(0);
    if (scale_target) {
        lp.objective[0] = 1;
    } else {
        lp.bounds[0].lower = Rational(0);
        lp.bounds[0].upper = Rational(0);
    }
    RationalVector ones(n + 1, Rational(1));
    ones[0] = 0;
    lp.constraints.push_back({ones, Rational(1), Sense::Equal});
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector row(n + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) row[i + 1] = points[i][j];
        Rational rhs = 0;
        if (scale_target) {
            row[0] = -target[j];
        } else {
            rhs = target[j];
        }
        lp.constraints.push_back({row, rhs, Sense::Equal});
    }
    return lp;
}

bool in_hull_of(const std::vector<RationalVector>& points, const RationalVector& q) {
    if (points.empty()) return false;
    return solve_max(barycentric_program(points, q, false)).status == LPStatus::Optimal;
}

std::vector<RationalVector> as_vectors(const PointSet& b) {
    std::vector<RationalVector> out;
    for (const auto& m : b) out.push_back(to_vector(m));
    return out;
}

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
    if (k > n) return;
    std::vector<std::size_t> choice(k);
    for (std::size_t i = 0; i < k; ++i) choice[i] = i;
    while (true) {
        visit(choice);
        std::size_t i = k;
        while (i > 0 && choice[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++choice[i - 1];
        for (std::size_t j = i; j < k; ++j) choice[j] = choice[j - 1] + 1;
    }
}

}  // namespace

bool in_convex_hull(const PointSet& b, const RationalVector& q) {
    if (q.size() != static_cast<std::size_t>(b.dimension())) {
        throw Error(ErrorCode::DimensionConflict, "query point has wrong dimension");
    }
    return in_hull_of(as_vectors(b), q);
}

Polyhedron convex_hull(const PointSet& b) {
    const std::size_t d = static_cast<std::size_t>(b.dimension());
    std::vector<RationalVector> points = as_vectors(b);
    Polyhedron hull;
    hull.dimension = b.dimension();

    // A point is a vertex iff it is not a convex combination of the others.
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RationalVector> others;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) others.push_back(points[j]);
        }
        if (!in_hull_of(others, points[i])) hull.vertices.push_back(points[i]);
    }
    const auto& vs = hull.vertices;
    const RationalVector& origin = vs.front();

    RationalMatrix differences;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        RationalVector diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = vs[i][j] - origin[j];
        differences.push_back(std::move(diff));
    }
    RationalMatrix normals = nullspace(differences, d);
    for (const auto& raw : normals) {
        RationalVector n = primitive_direction(raw);
        Rational c = dot(n, origin);
        RationalVector neg(d);
        for (std::size_t j = 0; j < d; ++j) neg[j] = -n[j];
        hull.inequalities.push_back({n, c});
        hull.inequalities.push_back({neg, -c});
    }
    hull.affine_hull_rows = hull.inequalities.size();
    const std::size_t k = d - normals.size();
    hull.affine_dimension = static_cast<int>(k);
    if (k == 0) return hull;

    // Basis of the direction space of the affine hull.
    RationalMatrix span_basis = nullspace(normals, d);

    std::set<std::pair<RationalVector, Rational>> seen;
    for_each_subset(vs.size(), k, [&](const std::vector<std::size_t>& subset) {
        const RationalVector& base = vs[subset[0]];
        RationalMatrix system;
        for (std::size_t s = 1; s < subset.size(); ++s) {
            RationalVector row(k);
            for (std::size_t w = 0; w < k; ++w) {
                Rational acc = 0;
                for (std::size_t j = 0; j < d; ++j) acc += span_basis[w][j] * (vs[subset[s]][j] - base[j]);
                row[w] = acc;
            }
            system.push_back(std::move(row));
        }
        RationalMatrix coeffs = nullspace(system, k);
        if (coeffs.size() != 1) return;
        RationalVector n(d, Rational(0));
        for (std::size_t w = 0; w < k; ++w) {
            for (std::size_t j = 0; j < d; ++j) n[j] += coeffs[0][w] * span_basis[w][j];
        }
        Rational level = dot(n, base);
        bool below = true;
        bool above = true;
        for (const auto& v : vs) {
            Rational value = dot(n, v);
            below = below && value <= level;
            above = above && value >= level;
        }
        if (!below && !above) return;
        if (!below) {
            for (auto& x : n) x = -x;
        }
        n = primitive_direction(n);
        Rational offset = dot(n, base);
        if (seen.insert({n, offset}).second) hull.inequalities.push_back({n, offset});
    });
    std::sort(hull.inequalities.begin() + static_cast<std::ptrdiff_t>(hull.affine_hull_rows),
              hull.inequalities.end(), [](const Inequality& a, const Inequality& b) {
                  return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
              });
    return hull;
}

Rational ray_extent(const PointSet& b, const Monomial& alpha) {
    if (alpha.is_zero()) throw Error(ErrorCode::InvalidArgument, "ray_extent is undefined at the origin");
    if (!b.contains(alpha)) throw Error(ErrorCode::InvalidArgument, "ray_extent: point " + to_string(alpha) + " is not in B");
    LPSolution s = solve_max(barycentric_program(as_vectors(b), to_vector(alpha), true));
    if (s.status != LPStatus::Optimal) {
        throw Error(ErrorCode::Precondition, std::string("ray extent program is ") + to_string(s.status));
    }
    return s.value;
}

PointSet newton_diagram(const PointSet& b) {
    std::vector<Monomial> members;
    for (const auto& alpha : b) {
        // The ray through 0 never leaves {0}, so 0 is always a member.
        if (alpha.is_zero() || ray_extent(b, alpha) == 1) members.push_back(alpha);
    }
    return PointSet(b.dimension(), std::move(members));
}

PointSet vertex_set(const PointSet& b) {
    Polyhedron hull = convex_hull(newton_diagram(b));
    std::vector<Monomial> vertices;
    for (const auto& v : hull.vertices) {
        std::vector<int> e;
        for (const auto& x : v) e.push_back(static_cast<int>(numerator(x).convert_to<long>()));
        vertices.emplace_back(std::move(e));
    }
    return PointSet(b.dimension(), std::move(vertices));
}

std::vector<Face> faces(const PointSet& a) {
    Polyhedron hull = convex_hull(a);
    std::vector<Inequality> facets(hull.inequalities.begin() + static_cast<std::ptrdiff_t>(hull.affine_hull_rows),
                                   hull.inequalities.end());
    auto support_of = [&](const RationalVector& n, const Rational& offset) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (dot(n, to_vector(a.points()[i])) == offset) s.insert(i);
        }
        return s;
    };
    std::vector<std::set<std::size_t>> facet_supports;
    for (const auto& f : facets) facet_supports.push_back(support_of(f.normal, f.offset));

    // Close the facet supports under intersection.
    std::set<std::set<std::size_t>> found(facet_supports.begin(), facet_supports.end());
    std::vector<std::set<std::size_t>> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<std::set<std::size_t>> next;
        for (const auto& s : frontier) {
            for (const auto& f : facet_supports) {
                std::set<std::size_t> meet;
                std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::inserter(meet, meet.end()));
                if (meet.empty()) continue;
                if (found.insert(meet).second) next.push_back(meet);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Face> result;
    const std::size_t d = static_cast<std::size_t>(a.dimension());
    for (const auto& support : found) {
        if (support.size() == a.size()) continue;
        RationalVector normal(d, Rational(0));
        Rational offset = 0;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (!std::includes(facet_supports[f].begin(), facet_supports[f].end(), support.begin(), support.end())) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) normal[j] += facets[f].normal[j];
            offset += facets[f].offset;
        }
        if (support_of(normal, offset) != support) {
            throw Error(ErrorCode::Precondition, "face normal does not expose its support");
        }
        std::vector<Monomial> pts;
        for (auto i : support) pts.push_back(a.points()[i]);
        RationalVector primitive = primitive_direction(normal);
        std::size_t j = 0;
        while (normal[j] == 0) ++j;
        Rational scale = primitive[j] / normal[j];
        result.push_back({PointSet(a.dimension(), std::move(pts)), primitive, offset * scale});
    }
    std::sort(result.begin(), result.end(), [](const Face& x, const Face& y) {
        if (x.support.size() != y.support.size()) return x.support.size() < y.support.size();
        return x.support.points() < y.support.points();
    });
    return result;
}

Polyhedron polar_hrep(const PointSet& b) {
    Polyhedron polar;
    polar.dimension = b.dimension();
    for (const auto& alpha : b) {
        if (alpha.is_zero()) continue;
        polar.inequalities.push_back({to_vector(alpha), Rational(1)});
    }
    return polar;
}

CompactnessRecord compactness_check(const PointSet& a) {
    CompactnessRecord record;
    record.zero_in_a = a.contains_origin();
    for (int j = 0; j < a.dimension(); ++j) {
        bool ray = std::any_of(a.begin(), a.end(), [&](const Monomial& m) {
            if (m[j] <= 0) return false;
            for (int i = 0; i < a.dimension(); ++i) {
                if (i != j && m[i] != 0) return false;
            }
            return true;
        });
        record.axis_rays.push_back(ray);
    }
    record.compact = record.zero_in_a &&
                     std::all_of(record.axis_rays.begin(), record.axis_rays.end(), [](bool r) { return r; });
    return record;
}

}  // namespace newton_widths
