#include "newton_widths/lp.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/linear_algebra.hpp"

#include <algorithm>

namespace newton_widths {

const char* to_string(LPStatus status) {
    switch (status) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

void LinearProgram::validate() const {
    const std::size_t d = dimension();
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "linear program has no variables");
    for (const auto& c : constraints) {
        if (c.normal.size() != d) throw Error(ErrorCode::DimensionConflict, "constraint row has wrong length");
    }
    if (!bounds.empty() && bounds.size() != d) {
        throw Error(ErrorCode::DimensionConflict, "bounds must be empty or one per variable");
    }
    bool any_bound = std::any_of(bounds.begin(), bounds.end(),
                                 [](const VariableBounds& b) { return b.lower || b.upper; });
    if (constraints.empty() && !any_bound) {
        throw Error(ErrorCode::InvalidArgument, "linear program needs at least one constraint or bound");
    }
}

std::vector<Constraint> LinearProgram::expanded_constraints() const {
    std::vector<Constraint> rows = constraints;
    const std::size_t d = dimension();
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (!bounds[j].lower) continue;
        RationalVector n(d, Rational(0));
        n[j] = -1;
        rows.push_back({n, -*bounds[j].lower, Sense::LessEqual});
    }
    for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (!bounds[j].upper) continue;
        RationalVector n(d, Rational(0));
        n[j] = 1;
        rows.push_back({n, *bounds[j].upper, Sense::LessEqual});
    }
    return rows;
}

namespace {

// x_j = shift + sum_k coeff_k y_k with y >= 0.
struct Substitution {
    Rational shift;
    std::vector<std::pair<std::size_t, Rational>> columns;
};

class Tableau {
public:
    // rows: equality system M y = r with r >= 0, y >= 0; `basis` holds the
    // artificial column of each row on entry.
    Tableau(RationalMatrix rows, RationalVector rhs, std::size_t structural)
        : a_(std::move(rows)), rhs_(std::move(rhs)), structural_(structural) {
        const std::size_t m = a_.size();
        for (std::size_t i = 0; i < m; ++i) {
            a_[i].resize(structural_ + m, Rational(0));
            a_[i][structural_ + i] = 1;
            basis_.push_back(structural_ + i);
        }
        columns_ = structural_ + m;
    }

    // Phase 1; returns false when the system is infeasible.
    bool find_feasible_basis() {
        RationalVector cost(columns_, Rational(0));
        for (std::size_t j = structural_; j < columns_; ++j) cost[j] = -1;
        if (run(cost, columns_) == LPStatus::Unbounded) return false;  // cannot happen
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] >= structural_) infeasibility += rhs_[i];
        }
        if (infeasibility != 0) return false;
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < structural_) {
                ++i;
                continue;
            }
            std::size_t col = structural_;
            for (std::size_t j = 0; j < structural_; ++j) {
                if (a_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == structural_) {
                a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++i;
        }
        return true;
    }

    LPStatus maximize(const RationalVector& cost) { return run(cost, structural_); }

    RationalVector values() const {
        RationalVector y(structural_, Rational(0));
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] < structural_) y[basis_[i]] = rhs_[i];
        }
        return y;
    }

private:
    // Columns >= `allowed` never enter the basis.
    LPStatus run(const RationalVector& cost, std::size_t allowed) {
        while (true) {
            // reduced cost r_j = c_j - sum_i c_B(i) a_ij
            std::size_t entering = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (is_basic(j)) continue;
                Rational r = cost[j];
                for (std::size_t i = 0; i < basis_.size(); ++i) {
                    if (a_[i][j] != 0 && cost[basis_[i]] != 0) r -= cost[basis_[i]] * a_[i][j];
                }
                if (r > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed) return LPStatus::Optimal;
            std::size_t leaving = basis_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (a_[i][entering] <= 0) continue;
                Rational ratio = rhs_[i] / a_[i][entering];
                if (leaving == basis_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == basis_.size()) return LPStatus::Unbounded;
            pivot(leaving, entering);
        }
    }

    bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / a_[row][col];
        for (auto& v : a_[row]) {
            if (v != 0) v *= inv;
        }
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i == row || a_[i][col] == 0) continue;
            Rational f = a_[i][col];
            for (std::size_t j = 0; j < columns_; ++j) {
                if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
            }
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    RationalMatrix a_;
    RationalVector rhs_;
    std::vector<std::size_t> basis_;
    std::size_t structural_;
    std::size_t columns_;
};

}  // namespace

LPSolution solve_max(const LinearProgram& lp) {
    lp.validate();
    const std::size_t d = lp.dimension();

    // Map each original variable onto nonnegative columns.
    std::vector<Substitution> subs(d);
    std::size_t columns = 0;
    std::vector<Constraint> extra_rows;  // upper bounds of doubly bounded variables
    for (std::size_t j = 0; j < d; ++j) {
        VariableBounds b = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
        if (b.lower) {
            subs[j] = {*b.lower, {{columns++, Rational(1)}}};
            if (b.upper) {
                RationalVector n(d, Rational(0));
                n[j] = 1;
                extra_rows.push_back({n, *b.upper, Sense::LessEqual});
            }
        } else if (b.upper) {
            subs[j] = {*b.upper, {{columns++, Rational(-1)}}};
        } else {
            std::size_t plus = columns++;
            std::size_t minus = columns++;
            subs[j] = {Rational(0), {{plus, Rational(1)}, {minus, Rational(-1)}}};
        }
    }
    std::vector<Constraint> rows = lp.constraints;
    rows.insert(rows.end(), extra_rows.begin(), extra_rows.end());
    std::size_t slack_count = 0;
    for (const auto& r : rows) slack_count += r.sense == Sense::LessEqual;
    const std::size_t structural = columns + slack_count;

    RationalMatrix m;
    RationalVector rhs;
    std::size_t slack = columns;
    for (const auto& r : rows) {
        RationalVector row(structural, Rational(0));
        Rational b = r.offset;
        for (std::size_t j = 0; j < d; ++j) {
            if (r.normal[j] == 0) continue;
            b -= r.normal[j] * subs[j].shift;
            for (const auto& [col, coeff] : subs[j].columns) row[col] += r.normal[j] * coeff;
        }
        if (r.sense == Sense::LessEqual) row[slack++] = 1;
        if (b < 0) {
            for (auto& v : row) v = -v;
            b = -b;
        }
        m.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }

    RationalVector cost(structural, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        for (const auto& [col, coeff] : subs[j].columns) cost[col] += lp.objective[j] * coeff;
    }

    LPSolution solution;
    Tableau tableau(std::move(m), std::move(rhs), structural);
    if (!tableau.find_feasible_basis()) {
        solution.status = LPStatus::Infeasible;
        return solution;
    }
    if (tableau.maximize(cost) == LPStatus::Unbounded) {
        solution.status = LPStatus::Unbounded;
        return solution;
    }
    RationalVector y = tableau.values();
    solution.status = LPStatus::Optimal;
    solution.witness.assign(d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        Rational x = subs[j].shift;
        for (const auto& [col, coeff] : subs[j].columns) x += coeff * y[col];
        solution.witness[j] = x;
    }
    solution.value = dot(lp.objective, solution.witness);
    auto expanded = lp.expanded_constraints();
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        if (dot(expanded[i].normal, solution.witness) == expanded[i].offset) solution.active_set.push_back(i);
    }
    return solution;
}

namespace {

// lp restricted to its optimal set {x feasible : <c, x> = value}, objective cleared.
LinearProgram restricted_to_optimum(const LinearProgram& lp, const Rational& value) {
    LinearProgram face;
    face.objective.assign(lp.dimension(), Rational(0));
    face.constraints = lp.expanded_constraints();
    face.constraints.push_back({lp.objective, value, Sense::Equal});
    return face;
}

void require_optimal_value(const LinearProgram& lp, const Rational& value) {
    LPSolution s = solve_max(lp);
    if (s.status != LPStatus::Optimal || s.value != value) {
        throw Error(ErrorCode::Precondition, "value " + to_string(value) + " is not the optimal value of the program");
    }
}

}  // namespace

OptimalFace optimal_face(const LinearProgram& lp, const Rational& value) {
    require_optimal_value(lp, value);
    LinearProgram face = restricted_to_optimum(lp, value);
    const std::size_t count = face.constraints.size() - 1;
    OptimalFace result;
    RationalMatrix normals;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& row = face.constraints[i];
        bool implicit = row.sense == Sense::Equal;
        if (!implicit) {
            LinearProgram probe = face;
            for (std::size_t j = 0; j < probe.objective.size(); ++j) probe.objective[j] = -row.normal[j];
            LPSolution s = solve_max(probe);
            // min <a_i, x> over the optimal set equals b_i
            implicit = s.status == LPStatus::Optimal && -s.value == row.offset;
        }
        if (implicit) {
            result.implicit_equalities.push_back(i);
            normals.push_back(row.normal);
        }
    }
    normals.push_back(lp.objective);
    result.dimension = static_cast<int>(lp.dimension()) - static_cast<int>(rank(normals));

    if (lp.dimension() <= 4 && count <= 40) {
        result.sample_vertices = optimal_face_vertices(lp, value);
    }
    if (result.sample_vertices.empty()) {
        result.sample_vertices.push_back(solve_max(lp).witness);
    }
    return result;
}

std::vector<RationalVector> optimal_face_vertices(const LinearProgram& lp, const Rational& value) {
    const std::size_t d = lp.dimension();
    auto rows = lp.expanded_constraints();
    const std::size_t m = rows.size();
    const std::size_t pick = d - 1;
    std::vector<RationalVector> vertices;
    if (pick > m) return vertices;

    auto feasible = [&](const RationalVector& x) {
        for (const auto& r : rows) {
            Rational lhs = dot(r.normal, x);
            if (r.sense == Sense::Equal ? lhs != r.offset : lhs > r.offset) return false;
        }
        return true;
    };

    std::vector<std::size_t> choice(pick);
    for (std::size_t i = 0; i < pick; ++i) choice[i] = i;
    while (true) {
        RationalMatrix a{lp.objective};
        RationalVector b{value};
        for (auto i : choice) {
            a.push_back(rows[i].normal);
            b.push_back(rows[i].offset);
        }
        if (auto x = solve_square(a, b); x && feasible(*x)) {
            if (std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) vertices.push_back(*x);
        }
        // next combination
        std::size_t k = pick;
        while (k > 0 && choice[k - 1] == m - pick + (k - 1)) --k;
        if (k == 0) break;
        ++choice[k - 1];
        for (std::size_t i = k; i < pick; ++i) choice[i] = choice[i - 1] + 1;
    }
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

LinearProgram mu_program(const PointSet& b) {
    LinearProgram lp;
    lp.objective.assign(b.dimension(), Rational(1));
    for (const auto& alpha : b) {
        if (alpha.is_zero()) continue;
        RationalVector n;
        for (int e : alpha.exponents) n.emplace_back(e);
        lp.constraints.push_back({std::move(n), Rational(1), Sense::LessEqual});
    }
    return lp;
}

bool has_axis_rays(const PointSet& b) {
    for (int j = 0; j < b.dimension(); ++j) {
        bool found = std::any_of(b.begin(), b.end(), [&](const Monomial& m) {
            if (m[j] <= 0) return false;
            for (int i = 0; i < b.dimension(); ++i) {
                if (i != j && m[i] != 0) return false;
            }
            return true;
        });
        if (!found) return false;
    }
    return true;
}

namespace {

LPSolution solve_mu_program(const PointSet& b) {
    LinearProgram lp = mu_program(b);
    if (lp.constraints.empty()) {
        throw Error(ErrorCode::Unbounded, "the polar of {0} is the whole space; mu is unbounded");
    }
    LPSolution s = solve_max(lp);
    if (s.status == LPStatus::Unbounded) {
        throw Error(ErrorCode::Unbounded, "mu program is unbounded: some coordinate ray misses B");
    }
    return s;
}

}  // namespace

Rational mu_of(const PointSet& b) { return solve_mu_program(b).value; }

Rational rho_of(const PointSet& b) {
    if (!b.contains_origin() || !has_axis_rays(b)) {
        throw Error(ErrorCode::Precondition, "rho requires 0 in B and a point of B on every coordinate ray");
    }
    const std::size_t d = static_cast<std::size_t>(b.dimension());
    const std::size_t n = b.size();
    // variables: rho, lambda_1..lambda_n
    LinearProgram lp;
    lp.objective.assign(n + 1, Rational(0));
    lp.objective[0] = 1;
    lp.bounds.assign(n + 1, VariableBounds{});
    for (std::size_t i = 1; i <= n; ++i) lp.bounds[i].lower = Rational(0);
    RationalVector weights(n + 1, Rational(1));
    weights[0] = 0;
    lp.constraints.push_back({weights, Rational(1), Sense::Equal});
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector row(n + 1, Rational(0));
        row[0] = -1;
        for (std::size_t i = 0; i < n; ++i) row[i + 1] = b.points()[i][j];
        lp.constraints.push_back({row, Rational(0), Sense::Equal});
    }
    LPSolution s = solve_max(lp);
    if (s.status != LPStatus::Optimal) {
        throw Error(ErrorCode::Precondition, std::string("rho program is ") + to_string(s.status));
    }
    return s.value;
}

int nu_of(const PointSet& b) {
    LPSolution s = solve_mu_program(b);
    return optimal_face(mu_program(b), s.value).dimension;
}

DualityCheck duality_check(const PointSet& b) {
    DualityCheck check;
    check.mu = mu_of(b);
    check.rho = rho_of(b);
    check.product_is_one = check.mu * check.rho == 1;
    return check;
}

}  // namespace newton_widths
