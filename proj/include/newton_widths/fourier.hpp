#pragma once

#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace newton_widths {

using Complex = std::complex<double>;

/// Finite trigonometric polynomial sum_k c_k e^{i<k,x>}; zero modes are never stored.
class TrigPoly {
public:
    explicit TrigPoly(int dimension) : dimension_(dimension) {}

    int dimension() const { return dimension_; }
    const std::map<LatticePoint, Complex>& modes() const { return modes_; }
    std::size_t size() const { return modes_.size(); }
    bool is_zero() const { return modes_.empty(); }

    void set(const LatticePoint& k, Complex c);
    Complex coefficient(const LatticePoint& k) const;

    TrigPoly operator-(const TrigPoly& other) const;
    bool operator==(const TrigPoly& other) const = default;

private:
    int dimension_;
    std::map<LatticePoint, Complex> modes_;
};

TrigPoly apply_symbol(const SymbolPolynomial& p, const TrigPoly& f);

double l2_norm(const TrigPoly& f);

struct SeminormValue {
    double value = 0.0;
    std::vector<std::pair<LatticePoint, double>> contributions;  // |P(k)|^2 |c_k|^2
};

SeminormValue seminorm_w(const SymbolPolynomial& p, const TrigPoly& f);

/// S_t f: the modes with |P(k)| <= t, compared exactly.
TrigPoly truncate(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t);

struct InequalityCheck {
    double bound = 0.0;     // right-hand side
    double measured = 0.0;  // left-hand side
    double slack = 0.0;     // bound - measured
    double tolerance = 0.0;
    bool holds() const { return slack >= -tolerance; }
};

/// ||f - S_t f||_2 <= ||f||_W / t, for t > tau.
InequalityCheck jackson_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t, const Rational& tau);
InequalityCheck jackson_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t);

/// ||f||_W <= t ||f||_2 for supp f inside K(t), t > tau.
InequalityCheck bernstein_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t,
                                const Rational& tau);
InequalityCheck bernstein_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t);

struct EquivalenceRatios {
    double w_sq = 0.0;
    double vertex_sum = 0.0;           // sum_alpha ||D^alpha f||^2
    double vertex_max = 0.0;           // max_alpha ||D^alpha f||^2
    double vertex_max_modewise = 0.0;  // sum_k max_alpha |k^alpha|^2 |c_k|^2
    double lo = 0.0;                   // min over supp f of |P(k)|^2 / max_alpha |k^alpha|^2
    double hi = 0.0;
    bool zero = false;    // f = 0: ratios undefined
    bool within = true;   // lo <= w_sq / vertex_max_modewise <= hi
};

/// `vertices` is theta(A), the vertex set of the Newton diagram of p.
EquivalenceRatios equivalence_ratios(const SymbolPolynomial& p, const PointSet& vertices, const TrigPoly& f);
EquivalenceRatios equivalence_ratios(const SymbolPolynomial& p, const TrigPoly& f);

/// Distinct modes drawn uniformly from [-box, box]^d, coefficients with
/// real and imaginary parts uniform on [-scale, scale].
TrigPoly random_trig(std::uint64_t seed, int d, std::size_t support, double scale, std::int64_t box);

std::string to_json_text(const TrigPoly& f);
TrigPoly parse_trig_json(const std::string& text);

}  // namespace newton_widths
