#include "doctest.h"

#include "fixtures.hpp"
#include "newton_widths/error.hpp"
#include "newton_widths/symbol.hpp"

#include <random>

using namespace newton_widths;

namespace {

RationalVector rv(std::initializer_list<long> values) {
    RationalVector out;
    for (long v : values) out.emplace_back(v);
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("parse P1 yields the A1 exponent set") {
    auto p = parse_polynomial(fixtures::kP1);
    CHECK(p.dimension() == 2);
    CHECK(p.terms().size() == 9);
    CHECK(p.exponent_set() == fixtures::a1());
    CHECK(p.coefficient(Monomial{0, 0}) == 13);
    CHECK(p.coefficient(Monomial{2, 1}) == -3);
}

TEST_CASE("P1 variant carries x1^3*x2 instead of x1^2") {
    auto p = parse_polynomial(fixtures::kP1Variant);
    CHECK(p.exponent_set().contains(Monomial{3, 1}));
    CHECK_FALSE(p.exponent_set().contains(Monomial{2, 0}));
}

TEST_CASE("constants, merging and explicit dimension") {
    auto c = parse_polynomial("13", 2);
    REQUIRE(c.terms().size() == 1);
    CHECK(c.terms()[0].exponent == Monomial{0, 0});
    CHECK(c.terms()[0].coefficient == 13);

    auto merged = parse_polynomial("x1^2 + x1^2");
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coefficient == 2);

    CHECK(parse_polynomial("1").dimension() == 1);
    CHECK(parse_polynomial("3/4 x1 x2^3 - 1/2").coefficient(Monomial{1, 3}) == Rational(3, 4));
    CHECK(parse_polynomial("2*3*x1").coefficient(Monomial{1}) == 6);
    CHECK(parse_polynomial("x1*x1^2").coefficient(Monomial{3}) == 1);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_polynomial("x1 +"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial("x0"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial("x1^0"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial("2 x1 $"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial("1/0"); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial(""); }) == ErrorCode::Syntax);
    CHECK(code_of([] { parse_polynomial("x3", 2); }) == ErrorCode::DimensionConflict);
    CHECK(code_of([] { parse_polynomial("x1 - x1"); }) == ErrorCode::EmptyPolynomial);
    try {
        parse_polynomial("x1 + * x2");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
}

TEST_CASE("json form") {
    auto p = parse_polynomial_json(R"({"d": 2, "terms": [{"exp": [4,0], "coeff": "8"}, {"exp": [0,0], "coeff": "-1/3"}]})");
    CHECK(p.coefficient(Monomial{4, 0}) == 8);
    CHECK(p.coefficient(Monomial{0, 0}) == Rational(-1, 3));
    CHECK(parse_polynomial_json(to_json_text(p)) == p);
    CHECK(code_of([] { parse_polynomial_json(R"({"d": 2})"); }) == ErrorCode::Syntax);
}

TEST_CASE("evaluate") {
    auto p1 = parse_polynomial(fixtures::kP1);
    auto p3 = parse_polynomial(fixtures::kP3);
    CHECK(p1.evaluate(std::span<const Rational>(rv({0, 0}))) == 13);
    CHECK(p3.evaluate(std::span<const Rational>(rv({1, 1}))) == 3);
    RationalVector half{Rational(1, 2), Rational(-1, 3)};
    // hand evaluation: x^4 - 2x^3y + x^2y^2 + x^2 + y^2 + 1 at (1/2, -1/3)
    Rational x = half[0], y = half[1];
    Rational expected = x * x * x * x - 2 * x * x * x * y + x * x * y * y + x * x + y * y + 1;
    CHECK(p3.evaluate(std::span<const Rational>(half)) == expected);
    std::vector<std::int64_t> k{2, -3};
    CHECK(p3.evaluate(std::span<const std::int64_t>(k)) == 16 + 48 + 36 + 4 + 9 + 1);
}

TEST_CASE("zero to the zero is one at the origin") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<Term> terms{{Monomial(std::vector<int>(d, 0)), Rational(static_cast<long>(rng() % 19) + 1)}};
        for (int i = 0; i < 4; ++i) {
            std::vector<int> e(d);
            for (auto& x : e) x = static_cast<int>(rng() % 4);
            terms.push_back({Monomial(e), Rational(static_cast<long>(rng() % 7) - 3)});
        }
        try {
            SymbolPolynomial p(d, terms);
            RationalVector zero(d, Rational(0));
            CHECK(p.evaluate(std::span<const Rational>(zero)) == p.coefficient(Monomial(std::vector<int>(d, 0))));
        } catch (const Error&) {
        }
    }
}

TEST_CASE("exponent sets") {
    CHECK(parse_polynomial("1", 3).exponent_set() == fixtures::points(3, {{0, 0, 0}}));
    CHECK(parse_polynomial("1 + x1^2").exponent_set() == fixtures::points(1, {{0}, {2}}));
}

TEST_CASE("restrict_to_face") {
    auto p3 = parse_polynomial(fixtures::kP3);
    auto face = restrict_to_face(p3, fixtures::points(2, {{4, 0}, {3, 1}, {2, 2}}));
    CHECK(face.polynomial() == parse_polynomial("x1^4 - 2*x1^3*x2 + x1^2*x2^2"));
    auto p1 = parse_polynomial(fixtures::kP1);
    auto constant = restrict_to_face(p1, fixtures::points(2, {{0, 0}}));
    CHECK(constant.polynomial() == parse_polynomial("13", 2));
    CHECK(code_of([&] { restrict_to_face(p1, fixtures::points(2, {{5, 5}})); }) == ErrorCode::InvalidArgument);

    // Restricting to the full exponent set reproduces P at random rational points.
    auto full = restrict_to_face(p1, p1.exponent_set());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        RationalVector x{Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1),
                         Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1)};
        CHECK(full.evaluate(std::span<const Rational>(x)) == p1.evaluate(std::span<const Rational>(x)));
    }
}

TEST_CASE("linearity of evaluation and render round trip") {
    std::mt19937_64 rng(3);
    auto random_symbol = [&](int d) {
        std::vector<Term> terms;
        for (int i = 0; i < 5; ++i) {
            std::vector<int> e(d);
            for (auto& x : e) x = static_cast<int>(rng() % 5);
            terms.push_back({Monomial(e), Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1)});
        }
        terms.push_back({Monomial(std::vector<int>(d, 0)), Rational(1)});
        return SymbolPolynomial(d, terms);
    };
    for (int trial = 0; trial < 100; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        SymbolPolynomial p = random_symbol(d);
        SymbolPolynomial q = random_symbol(d);
        CHECK(parse_polynomial(p.render(), d) == p);
        RationalVector x;
        for (int j = 0; j < d; ++j) x.emplace_back(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
        std::span<const Rational> xs(x);
        try {
            SymbolPolynomial sum = p + q;
            CHECK(sum.evaluate(xs) == p.evaluate(xs) + q.evaluate(xs));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyPolynomial);
        }
    }
}

TEST_CASE("tau_lower_bound") {
    auto p = parse_polynomial("1 + x1^2");
    std::vector<LatticePoint> ks{{-2}, {-1}, {0}, {1}, {2}};
    CHECK(tau_lower_bound(p, ks) == 1);
    auto p3 = parse_polynomial(fixtures::kP3);
    std::vector<LatticePoint> box;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) box.push_back({a, b});
    CHECK(tau_lower_bound(p3, box) == 1);
    CHECK(tau_lower_bound(parse_polynomial("1"), std::vector<LatticePoint>{{0}}) == 1);
    CHECK(code_of([&] { tau_lower_bound(p, std::vector<LatticePoint>{}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("lattice evaluator agrees with exact evaluation on both paths") {
    auto p = parse_polynomial("1/3*x1^6 - 7/2*x1^2*x2^3 + 5");
    LatticeEvaluator eval(p);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        LatticePoint k{static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 2001) - 1000};
        Rational exact = abs(p.evaluate(std::span<const std::int64_t>(k)));
        CHECK(eval.abs_value(k) == exact);
        eval.prepare(1000);
        CHECK(eval.abs_value(k) == exact);
        auto th = eval.threshold(exact);
        CHECK(eval.within(k, th));
        auto below = eval.threshold(exact - Rational(1, 7));
        CHECK_FALSE(eval.within(k, below));
    }
}

TEST_CASE("rational helpers") {
    CHECK(parse_number("1e7") == 10000000);
    CHECK(parse_number("2.5e-1") == Rational(1, 4));
    CHECK(parse_number("-3/6") == Rational(-1, 2));
    CHECK(to_string(Rational(4, 3)) == "4/3");
    CHECK(to_string(Rational(-8)) == "-8");
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(7, 2)) == 4);
    CHECK(floor_root(Rational(4), 2) == 2);
    CHECK(floor_root(Rational(1000000), 4) == 31);
    CHECK(floor_root(Rational(1, 2), 3) == 0);
    CHECK(best_rational_approximation(0.7501, 12) == Rational(3, 4));
}
