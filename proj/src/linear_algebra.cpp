#include "newton_widths/linear_algebra.hpp"

#include "newton_widths/error.hpp"

namespace newton_widths {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
    if (rows.empty()) return 0;
    std::size_t columns = rows.front().size();
    return row_reduce(rows, columns).size();
}

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
    std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::DimensionConflict, "solve_square: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error(ErrorCode::DimensionConflict, "solve_square: matrix is not square");
        a[i].push_back(b[i]);
    }
    auto pivots = row_reduce(a, n);
    if (pivots.size() < n) return std::nullopt;
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

RationalMatrix nullspace(RationalMatrix rows, std::size_t columns) {
    auto pivots = row_reduce(rows, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;
    RationalMatrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionConflict, "dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RationalVector primitive_direction(const RationalVector& v) {
    Integer den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
    Integer num_gcd = 0;
    for (const auto& x : v) num_gcd = gcd(num_gcd, Integer(numerator(x) * (den_lcm / denominator(x))));
    if (num_gcd == 0) throw Error(ErrorCode::InvalidArgument, "primitive_direction of the zero vector");
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(Integer(numerator(x) * (den_lcm / denominator(x)) / num_gcd));
    return out;
}

}  // namespace newton_widths
