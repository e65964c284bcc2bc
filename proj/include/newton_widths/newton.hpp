#pragma once

#include "newton_widths/linear_algebra.hpp"
#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <vector>

namespace newton_widths {

/// <normal, x> <= offset
struct Inequality {
    RationalVector normal;
    Rational offset;

    bool operator==(const Inequality&) const = default;
};

/// Convex body kept in vertex and inequality form. For hulls that are not
/// full-dimensional the first `affine_hull_rows` inequalities are the affine
/// hull equalities written as <= pairs; the remaining rows are facets
/// relative to that hull. Polar sets carry no vertices.
struct Polyhedron {
    int dimension = 0;
    std::vector<RationalVector> vertices;
    std::vector<Inequality> inequalities;
    std::size_t affine_hull_rows = 0;
    int affine_dimension = -1;  // -1 when only the H-form is known

    /// H-form sign test.
    bool contains(const RationalVector& q) const;
};

/// A proper face of conv A with one exposing normal.
struct Face {
    PointSet support;
    RationalVector normal;
    Rational offset;
};

RationalVector to_vector(const Monomial& m);

Polyhedron convex_hull(const PointSet& b);

/// LP membership test q in conv B.
bool in_convex_hull(const PointSet& b, const RationalVector& q);

/// max{lambda >= 1 : lambda * alpha in conv B} for alpha in B, alpha != 0.
Rational ray_extent(const PointSet& b, const Monomial& alpha);

/// Delta(B): the points of B whose outward ray leaves conv B immediately.
PointSet newton_diagram(const PointSet& b);

/// theta(B): vertices of conv Delta(B).
PointSet vertex_set(const PointSet& b);

/// Sigma(A): every proper face of conv A as its support A cap face.
std::vector<Face> faces(const PointSet& a);

/// {x : <alpha, x> <= 1 for alpha in B}; the zero row is dropped.
Polyhedron polar_hrep(const PointSet& b);

struct CompactnessRecord {
    bool zero_in_a = false;
    std::vector<bool> axis_rays;
    bool compact = false;
};

/// 0 in A and every coordinate ray meets A. Only meaningful next to a
/// degeneracy report: the characterization assumes a non-degenerate symbol.
CompactnessRecord compactness_check(const PointSet& a);

}  // namespace newton_widths
