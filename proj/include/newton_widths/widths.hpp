#pragma once

#include "newton_widths/degeneracy.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <string>
#include <vector>

namespace newton_widths {

struct AsymptoticOrder {
    Rational rho;
    int nu = 0;
    Rational mu;  // 1 / rho
    std::string d_n_formula;
    std::string n_eps_formula;
    bool forced = false;
    std::string caveat;  // empty unless the hypotheses were overridden
};

/// Width order from the LP on the Newton diagram of the exponent set.
/// Throws Error(Precondition) naming the failed hypothesis unless `force`.
AsymptoticOrder theoretical_order(const SymbolPolynomial& p, bool force = false,
                                  const DegeneracyConfig& degeneracy = {});
AsymptoticOrder theoretical_order(const SymbolPolynomial& p, const DegeneracyReport& report, bool force = false);

std::string d_n_formula(const Rational& rho, int nu);
std::string n_eps_formula(const Rational& rho, int nu);

/// rho of {0} ∪ {beta_j u^j}; throws if it disagrees with (sum 1/beta_j)^-1.
Rational anisotropic_formula_check(const std::vector<int>& beta);

struct WidthEstimate {
    std::uint64_t n = 0;
    Rational t_n;
    Rational d_n_estimate;  // 1 / t_n, order only
    bool tie = false;
};

std::vector<WidthEstimate> width_estimates(const SymbolPolynomial& p, const std::vector<std::uint64_t>& n_values,
                                           const EnumerationConfig& config = {});

struct FitResult {
    double mu_hat = 0.0;
    int nu_hat = 0;
    double intercept = 0.0;
    std::vector<double> residual_by_nu;
    std::vector<double> mu_by_nu;
    Rational mu_rational;  // best p/q with q <= 12, exploratory
    std::size_t points_used = 0;
    bool below_recommended = false;  // fewer than 8 usable entries
};

/// Least squares log(count) = mu log t + nu log log t + b for each nu in
/// {0..d-1}; entries with t < 2 or count 0 are skipped.
FitResult fit_growth(const CountSeries& series, int d);

struct RatioRange {
    Rational lo;
    Rational hi;
    std::size_t points = 0;
};

/// Exact [min, max] of |P(k)| / max over the Newton diagram vertices of |k^alpha| over the points.
RatioRange monomial_ratio_range(const SymbolPolynomial& p, const std::vector<LatticePoint>& points);

struct ConsistencyConfig {
    Rational t_min = 100;
    Rational t_max = 1000000;
    int grid_points = 13;
    double mu_tolerance = 0.1;
    EnumerationConfig enumeration;
};

struct ConsistencyReport {
    RatioRange ratio;  // over K(t_max)
    Rational rho;
    int nu = 0;
    CountSeries series;
    FitResult fit;
    bool mu_agrees = false;
    bool nu_agrees = false;
    bool agreement = false;
    EnumerationMode mode = EnumerationMode::AdaptiveShell;
    bool heuristic = true;
};

ConsistencyReport consistency_check(const SymbolPolynomial& p, const ConsistencyConfig& config = {});

}  // namespace newton_widths
