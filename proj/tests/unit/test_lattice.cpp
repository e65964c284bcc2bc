#include "doctest.h"

#include "fixtures.hpp"
#include "newton_widths/error.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/newton.hpp"
#include "oracles.hpp"

using namespace newton_widths;

namespace {

EnumerationConfig shell_mode() {
    EnumerationConfig c;
    c.mode = EnumerationMode::AdaptiveShell;
    return c;
}

}  // namespace

TEST_CASE("count_omega on small sets") {
    auto b = fixtures::points(2, {{0, 0}, {2, 0}, {0, 2}});
    CHECK(count_omega(b, Rational(1)) == 4);
    CHECK(count_omega(b, Rational(4)) == 9);
    CHECK(count_omega(b, Rational(1, 2)) == 0);
    CHECK(count_omega(fixtures::edge_optimum_set(), Rational(1, 2)) == 0);
    CHECK(count_omega(b, Rational(-3)) == 0);

    CHECK_THROWS_WITH_AS(count_omega(fixtures::points(2, {{0, 0}, {2, 0}, {1, 1}}), Rational(5)),
                         doctest::Contains("ray"), Error);
    EnumerationConfig tiny;
    tiny.hard_cap = 10;
    CHECK_THROWS_AS(count_omega(b, Rational(100), tiny), Error);
}

TEST_CASE("count_omega matches the double-loop oracle") {
    for (auto b : {fixtures::edge_optimum_set(), fixtures::vertex_optimum_set(), newton_diagram(fixtures::a1()),
                   newton_diagram(fixtures::a2())}) {
        for (long long t : {1LL, 7LL, 10LL, 100LL, 1000LL, 4096LL}) {
            CHECK(count_omega(b, Rational(t)) == static_cast<std::uint64_t>(oracles::omega_count_2d(b, t, std::min(t, 200LL))));
        }
    }
    // fractional t floors
    auto b = fixtures::vertex_optimum_set();
    CHECK(count_omega(b, Rational(201, 2)) == count_omega(b, Rational(100)));
}

TEST_CASE("enumerate_k examples") {
    auto p = parse_polynomial("1 + x1^2");
    for (auto config : {EnumerationConfig{}, shell_mode()}) {
        auto k = enumerate_k(p, Rational(5), config);
        REQUIRE(k.points.size() == 5);
        for (int i = 0; i < 5; ++i) CHECK(k.points[i] == LatticePoint{i - 2});
        CHECK(card_k(p, Rational(1, 2), config) == 0);
    }
    CHECK(enumerate_k(p, Rational(5)).mode == EnumerationMode::AxisBounded);
    CHECK_FALSE(enumerate_k(p, Rational(5)).heuristic);
    CHECK(enumerate_k(p, Rational(5), shell_mode()).heuristic);

    auto p1 = parse_polynomial(fixtures::kP1);
    auto k1 = enumerate_k(p1, Rational(13));
    CHECK(std::find(k1.points.begin(), k1.points.end(), LatticePoint{0, 0}) != k1.points.end());
    CHECK(card_k(p1, Rational(13)) >= 1);
    CHECK(card_k(p1, tau(p1) - Rational(1, 1000)) == 0);
}

TEST_CASE("degenerate symbols fall back to shells") {
    auto p3 = parse_polynomial(fixtures::kP3);
    auto k = enumerate_k(p3, Rational(50));
    CHECK(k.mode == EnumerationMode::AdaptiveShell);
    CHECK(k.heuristic);
    CHECK(k.points == oracles::k_in_box(p3, Rational(50), 10));

    EnumerationConfig forced;
    forced.mode = EnumerationMode::AxisBounded;
    CHECK_THROWS_AS(enumerate_k(p3, Rational(50), forced), Error);
}

TEST_CASE("modes agree with each other and with a box oracle") {
    for (const auto& text : {fixtures::kP1, fixtures::kP2, std::string("1 + x1^2 + x2^2"),
                             std::string("2 + x1^2 - x1*x2 + x2^4")}) {
        auto p = parse_polynomial(text);
        for (long long t : {5LL, 20LL, 100LL, 400LL}) {
            auto a = enumerate_k(p, Rational(t));
            auto s = enumerate_k(p, Rational(t), shell_mode());
            CHECK(a.mode == EnumerationMode::AxisBounded);
            CHECK(a.points == s.points);
            CHECK(a.points == oracles::k_in_box(p, Rational(t), 25));
        }
    }
}

TEST_CASE("threads do not change the result") {
    auto p = parse_polynomial(fixtures::kP1);
    EnumerationConfig one, four;
    four.threads = 4;
    CHECK(enumerate_k(p, Rational(5000), one).points == enumerate_k(p, Rational(5000), four).points);
}

TEST_CASE("user box restricts the search") {
    auto p = parse_polynomial("1 + x1^2");
    EnumerationConfig c;
    c.user_box = {1};
    auto k = enumerate_k(p, Rational(100), c);
    CHECK(k.box_limited);
    CHECK(k.points.size() == 3);
    c.user_box = {1, 2};
    CHECK_THROWS_AS(enumerate_k(p, Rational(100), c), Error);
}

TEST_CASE("noncompact symbols hit the cap as Unbounded") {
    auto p = parse_polynomial("1 + x1^2", 2);
    EnumerationConfig c;
    c.hard_cap = 5000;
    try {
        enumerate_k(p, Rational(3), c);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unbounded);
    }
    CHECK_THROWS_AS(threshold_t(p, 3), Error);

    auto big = parse_polynomial(fixtures::kP1);
    c.hard_cap = 100;
    try {
        enumerate_k(big, Rational(1000000), c);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("threshold order statistics") {
    auto p = parse_polynomial("1 + x1^2");
    auto t0 = threshold_t(p, 0);
    CHECK(t0.t_n == 1);
    CHECK_FALSE(t0.tie);
    CHECK_FALSE(t0.attained);
    auto t1 = threshold_t(p, 1);
    CHECK(t1.t_n == 2);
    CHECK(t1.tie);
    CHECK(t1.card_at_threshold == 3);
    CHECK_FALSE(t1.attained);
    CHECK(threshold_t(p, 2).t_n == 2);
    CHECK(threshold_t(p, 8).t_n == 17);

    auto table = thresholds(p, {0, 2, 8, 20});
    CHECK(table[0].t_n == 1);
    CHECK(table[1].t_n == 2);
    CHECK(table[2].t_n == 17);
    CHECK(table[3].t_n == 101);
}

TEST_CASE("threshold adjointness") {
    auto p = parse_polynomial(fixtures::kP1);
    for (std::uint64_t n : {0u, 1u, 5u, 30u}) {
        auto th = threshold_t(p, n);
        CHECK(card_k(p, th.t_n - Rational(1, 1000000)) <= n);
        CHECK(card_k(p, th.t_n) > n);
        CHECK(card_k(p, th.t_n) == th.card_at_threshold);
    }
}

TEST_CASE("eps brackets") {
    auto p = parse_polynomial("1 + x1^2");
    auto b = eps_dimension_bracket(p, Rational(1, 2));
    CHECK(b.lower == 2);
    CHECK(b.upper == 3);
    b = eps_dimension_bracket(p, Rational(2));
    CHECK(b.lower == 0);
    CHECK(b.upper == 0);
    b = eps_dimension_bracket(p, Rational(1, 5));
    CHECK(b.lower == 4);
    CHECK(b.upper == 5);
    CHECK_THROWS_AS(eps_dimension_bracket(p, Rational(0)), Error);
}

TEST_CASE("count series") {
    auto p = parse_polynomial("1 + x1^2");
    auto s = count_series(p, {Rational(5), Rational(10)});
    REQUIRE(s.entries.size() == 2);
    CHECK(s.entries[0].second == 5);
    CHECK(s.entries[1].second == 7);
    CHECK(s.to_csv() == "t,count\n5,5\n10,7\n");
    CHECK_THROWS_AS(count_series(p, {Rational(10), Rational(5)}), Error);

    auto b = newton_diagram(fixtures::a1());
    auto o = count_series(b, {Rational(10), Rational(100), Rational(1000)});
    CHECK(o.source == CountSource::Omega);
    for (const auto& [t, c] : o.entries) CHECK(c == count_omega(b, t));
    CHECK(o.entries[0].second <= o.entries[1].second);
    CHECK(o.entries[1].second <= o.entries[2].second);

    auto disk = parse_polynomial("1 + x1^2 + x2^2");
    auto ds = count_series(disk, geometric_grid(1, 3, 5));
    for (const auto& [t, c] : ds.entries) {
        CHECK(c == static_cast<std::uint64_t>(oracles::disk_count(static_cast<long long>(to_double(t)) - 1)));
    }
}

TEST_CASE("geometric grid") {
    auto g = geometric_grid(3, 7, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 1000);
    CHECK(g[2] == 100000);
    CHECK(g.back() == 10000000);
}

TEST_CASE("symmetry and monotonicity") {
    auto p = parse_polynomial("3 + 2*x1^4 - x1^3 + x2^2 - x1*x2^2 + x2^4");  // even in x2
    auto k = enumerate_k(p, Rational(3000));
    std::size_t up = 0, down = 0;
    for (const auto& q : k.points) {
        LatticePoint m{q[0], -q[1]};
        CHECK(std::binary_search(k.points.begin(), k.points.end(), m));
        up += q[1] > 0;
        down += q[1] < 0;
    }
    CHECK(up == down);

    std::uint64_t last = 0;
    for (long long t : {1LL, 3LL, 10LL, 30LL, 100LL, 300LL}) {
        auto c = card_k(p, Rational(t));
        CHECK(c >= last);
        last = c;
    }
    Rational low = 1000;
    for (const auto& q : oracles::k_in_box(p, Rational(1000), 6)) {
        std::vector<Rational> x(q.begin(), q.end());
        low = std::min(low, abs(p.evaluate(std::span<const Rational>(x))));
    }
    CHECK(tau(p) == low);
}

TEST_CASE("zero coordinates kill monomials before saturation") {
    // (2,0)^(7,8) = 0 even though 2^7 alone exceeds t
    auto b = fixtures::points(2, {{0, 0}, {0, 7}, {3, 0}, {7, 8}});
    CHECK(count_omega(b, Rational(10)) == 5);
    CHECK(count_omega(b, Rational(10)) == static_cast<std::uint64_t>(oracles::omega_count_2d(b, 10, 10)));
}
