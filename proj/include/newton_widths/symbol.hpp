#pragma once

#include "newton_widths/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newton_widths {

/// Exponent vector alpha in N^d.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    Monomial(std::initializer_list<int> e) : exponents(e) {}

    std::size_t dimension() const { return exponents.size(); }
    int operator[](std::size_t j) const { return exponents[j]; }
    int degree() const;
    bool is_zero() const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

/// Integer point of Z^d.
using LatticePoint = std::vector<std::int64_t>;

/// A finite nonempty set of exponent vectors of a common dimension, kept
/// sorted lexicographically and duplicate-free.
class PointSet {
public:
    PointSet(int dimension, std::vector<Monomial> points);

    int dimension() const { return dimension_; }
    const std::vector<Monomial>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const Monomial& m) const;
    bool contains_origin() const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const PointSet&) const = default;

private:
    int dimension_;
    std::vector<Monomial> points_;
};

struct Term {
    Monomial exponent;
    Rational coefficient;

    bool operator==(const Term&) const = default;
};

/// The symbol P(x) = sum c_alpha x^alpha with exact rational coefficients.
/// Terms are kept in ascending lexicographic order of exponent with like
/// terms merged and zero coefficients removed; an instance is never empty.
class SymbolPolynomial {
public:
    SymbolPolynomial(int dimension, std::vector<Term> terms);

    int dimension() const { return dimension_; }
    const std::vector<Term>& terms() const { return terms_; }

    PointSet exponent_set() const;
    /// Coefficient of x^alpha, zero when alpha is not in the exponent set.
    Rational coefficient(const Monomial& alpha) const;

    Rational evaluate(std::span<const Rational> point) const;
    Rational evaluate(std::span<const std::int64_t> point) const;
    double evaluate(std::span<const double> point) const;

    /// Canonical text form; parse_polynomial(render(), dimension()) == *this.
    std::string render() const;

    friend SymbolPolynomial operator+(const SymbolPolynomial& a, const SymbolPolynomial& b);
    SymbolPolynomial scaled(const Rational& factor) const;

    bool operator==(const SymbolPolynomial&) const = default;

private:
    int dimension_;
    std::vector<Term> terms_;
};

/// P_sigma: the parent's terms restricted to a support set sigma.
class FacePolynomial {
public:
    FacePolynomial(const SymbolPolynomial& parent, const PointSet& support);

    const PointSet& support() const { return support_; }
    const SymbolPolynomial& polynomial() const { return restricted_; }

    template <typename T>
    auto evaluate(std::span<const T> point) const {
        return restricted_.evaluate(point);
    }

private:
    PointSet support_;
    SymbolPolynomial restricted_;
};

/// Parses the polynomial text grammar: variables x1..xd, integer or p/q
/// literals, '^' with positive integer powers, optional '*', '+'/'-'
/// between terms. When `dimension` is omitted the largest variable index is
/// used (1 for constants).
SymbolPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension = std::nullopt);

/// {"d": 2, "terms": [{"exp": [4,0], "coeff": "8"}, ...]}
SymbolPolynomial parse_polynomial_json(std::string_view json_text);
std::string to_json_text(const SymbolPolynomial& p);

PointSet exponent_set(const SymbolPolynomial& p);
Rational evaluate(const SymbolPolynomial& p, std::span<const Rational> point);
FacePolynomial restrict_to_face(const SymbolPolynomial& p, const PointSet& sigma);

/// min |P(k)| over an enumerated lattice set. This is tau exactly when the
/// enumeration is K(t0) for some t0 at which K is nonempty.
Rational tau_lower_bound(const SymbolPolynomial& p, std::span<const LatticePoint> enumeration);

/// Exact evaluation of |P(k)| at lattice points. Coefficients are scaled by
/// the lcm of their denominators so comparisons run on integers; a 128-bit
/// fast path is used whenever the magnitude bound for the requested radius
/// allows it.
class LatticeEvaluator {
public:
    explicit LatticeEvaluator(const SymbolPolynomial& p);

    /// Enables the 128-bit path when |L*P(k)| provably fits for ||k||_inf <= radius.
    void prepare(std::int64_t radius);

    /// floor(L * t): |P(k)| <= t  iff  |L*P(k)| <= floor(L * t).
    struct Threshold {
        Integer scaled;
        __int128 fast = 0;
        bool negative = false;
        bool saturated = false;  // exceeds every value reachable on the fast path
    };
    Threshold threshold(const Rational& t) const;

    bool within(std::span<const std::int64_t> k, const Threshold& threshold) const;
    Integer abs_scaled(std::span<const std::int64_t> k) const;
    Rational abs_value(std::span<const std::int64_t> k) const;
    const Integer& scale() const { return scale_; }

private:
    struct ScaledTerm {
        std::vector<int> exponents;
        Integer coefficient;
        __int128 fast_coefficient = 0;
    };
    __int128 eval_fast(std::span<const std::int64_t> k) const;
    Integer eval_big(std::span<const std::int64_t> k) const;
    bool in_fast_range(std::span<const std::int64_t> k) const;

    std::vector<ScaledTerm> terms_;
    Integer scale_;
    bool fast_ = false;
    std::int64_t fast_radius_ = 0;
};

}  // namespace newton_widths
