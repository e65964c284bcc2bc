#pragma once

#include "newton_widths/random.hpp"
#include "newton_widths/symbol.hpp"

#include <string>
#include <vector>

namespace fixtures {

using newton_widths::Monomial;
using newton_widths::PointSet;

// Exponents match the A1 listing {(4,0),(3,0),(2,1),(2,0),(1,1),(0,2),(1,0),(0,1),(0,0)}.
inline const std::string kP1 = "8*x1^4 - 4*x1^3 - 3*x1^2*x2 - 2*x1^2 - 4*x1*x2 + 6*x2^2 - 4*x1 - 3*x2 + 13";
// P1 with x1^3*x2 and x1^2*x2 in place of x1^2*x2 and x1^2; not consistent with the A1 listing.
inline const std::string kP1Variant = "8*x1^4 - 4*x1^3 - 3*x1^3*x2 - 2*x1^2*x2 - 4*x1*x2 + 6*x2^2 - 4*x1 - 3*x2 + 13";
inline const std::string kP2 = "6*x1^6 + x1^4*x2^2 - 6*x1^5 - x1^3*x2^2 + 5*x2^4 - 4*x2^3 + 3";
inline const std::string kP3 = "x1^4 - 2*x1^3*x2 + x1^2*x2^2 + x1^2 + x2^2 + 1";

inline PointSet points(int d, std::vector<Monomial> pts) { return PointSet(d, std::move(pts)); }

inline PointSet edge_optimum_set() { return points(2, {{6, 0}, {0, 6}, {4, 4}, {0, 0}}); }
inline PointSet vertex_optimum_set() { return points(2, {{0, 6}, {2, 4}, {4, 0}, {0, 0}}); }
inline PointSet a1() {
    return points(2, {{4, 0}, {3, 0}, {2, 1}, {2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}});
}
inline PointSet a2() { return points(2, {{6, 0}, {4, 2}, {5, 0}, {3, 2}, {0, 4}, {0, 3}, {0, 0}}); }



/// 0, one point on every coordinate ray, and up to five extra points, all
/// coordinates in [0, max_coord].
inline PointSet random_admissible(newton_widths::SeededRandom& rng, int d, int max_coord) {
    std::vector<Monomial> pts{Monomial{std::vector<int>(d, 0)}};
    for (int j = 0; j < d; ++j) {
        std::vector<int> e(d, 0);
        e[j] = static_cast<int>(rng.integer(1, max_coord));
        pts.push_back(Monomial{e});
    }
    const auto extra = rng.integer(0, 5);
    for (std::int64_t i = 0; i < extra; ++i) {
        std::vector<int> e(d);
        for (auto& x : e) x = static_cast<int>(rng.integer(0, max_coord));
        pts.push_back(Monomial{e});
    }
    return PointSet(d, pts);
}

}  // namespace fixtures
