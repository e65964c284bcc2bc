#pragma once

#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <optional>
#include <vector>

namespace newton_widths {

enum class Sense { LessEqual, Equal };

/// <normal, x> <= offset (or == offset).
struct Constraint {
    RationalVector normal;
    Rational offset;
    Sense sense = Sense::LessEqual;
};

struct VariableBounds {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// maximize <objective, x> subject to the constraint rows and optional
/// per-variable bounds. Variables without bounds are free.
struct LinearProgram {
    RationalVector objective;
    std::vector<Constraint> constraints;
    std::vector<VariableBounds> bounds;  // empty, or one entry per variable

    std::size_t dimension() const { return objective.size(); }
    void validate() const;

    /// Constraint rows followed by the bounds written as rows (lower bounds
    /// as -x_j <= -l, then upper bounds as x_j <= u, in variable order). This
    /// is the indexing used by active sets and implicit equalities.
    std::vector<Constraint> expanded_constraints() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LPStatus status);

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    RationalVector witness;
    std::vector<std::size_t> active_set;  // tight expanded constraints at witness
};

struct OptimalFace {
    std::vector<std::size_t> implicit_equalities;
    int dimension = 0;
    std::vector<RationalVector> sample_vertices;
};

/// Exact two-phase primal simplex with Bland's rule.
LPSolution solve_max(const LinearProgram& lp);

/// Affine dimension of the optimal set through implicit-equality detection.
/// Throws Error(Precondition) when `value` is not the optimal value of lp.
OptimalFace optimal_face(const LinearProgram& lp, const Rational& value);

/// Vertices of the optimal face, found by solving every square subsystem of
/// the objective hyperplane with d-1 tight rows. Exponential; meant for small
/// instances and as a cross-check of optimal_face.
std::vector<RationalVector> optimal_face_vertices(const LinearProgram& lp, const Rational& value);

/// max sum x_j over the polar set {x : <alpha, x> <= 1, alpha in B}.
LinearProgram mu_program(const PointSet& b);

/// Optimal value of mu_program. Throws Error(Unbounded) when B lacks a point
/// on some coordinate ray.
Rational mu_of(const PointSet& b);

/// max rho with rho * (1,...,1) in conv B, solved over barycentric weights.
/// Requires 0 in B and a point on every coordinate ray.
Rational rho_of(const PointSet& b);

/// Dimension of the optimal set of mu_program.
int nu_of(const PointSet& b);

struct DualityCheck {
    Rational mu;
    Rational rho;
    bool product_is_one = false;
};

DualityCheck duality_check(const PointSet& b);

/// Every coordinate ray {a u^j : a > 0} meets B.
bool has_axis_rays(const PointSet& b);

}  // namespace newton_widths
