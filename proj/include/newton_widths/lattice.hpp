#pragma once

#include "newton_widths/degeneracy.hpp"
#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newton_widths {

enum class EnumerationMode {
    Automatic,     // axis_bounded when the degeneracy screen passes, else adaptive_shell
    AxisBounded,   // box |k_j| <= ceil((2 t / gamma_hat)^(1/a_j))
    AdaptiveShell, // grow sup-norm shells until enough consecutive shells are empty
};

const char* to_string(EnumerationMode mode);

struct EnumerationConfig {
    EnumerationMode mode = EnumerationMode::Automatic;
    std::uint64_t hard_cap = 100'000'000;  // lattice points visited
    int shell_streak = 3;
    std::vector<std::int64_t> user_box;    // |k_j| <= user_box[j]; overrides the mode
    std::optional<double> gamma_hat;       // reused instead of re-sampling
    DegeneracyConfig degeneracy;
    int threads = 1;

    void validate() const;
};

struct KEnumeration {
    Rational t;
    std::vector<LatticePoint> points;  // lexicographic
    EnumerationMode mode = EnumerationMode::AdaptiveShell;
    bool heuristic = true;  // stopping rule not backed by a lower bound on |P|
    bool box_limited = false;
};

/// card {k in N^d : max_{alpha in B} k^alpha <= t}. Throws Error(Unbounded)
/// when some coordinate ray misses B.
std::uint64_t count_omega(const PointSet& b, const Rational& t, const EnumerationConfig& config = {});

/// K(t) = {k in Z^d : |P(k)| <= t}.
KEnumeration enumerate_k(const SymbolPolynomial& p, const Rational& t, const EnumerationConfig& config = {});
std::uint64_t card_k(const SymbolPolynomial& p, const Rational& t, const EnumerationConfig& config = {});

/// inf |P(k)| over Z^d, read off an enumeration of K(|P(0)|).
Rational tau(const SymbolPolynomial& p, const EnumerationConfig& config = {});

struct Threshold {
    Rational t_n;
    bool attained = false;  // card K(t_n) <= n
    bool tie = false;       // several lattice points share |P(k)| = t_n
    std::uint64_t card_at_threshold = 0;
};

/// t(n): the (n+1)-th smallest value of |P(k)| over Z^d, i.e. the supremum
/// of t with card K(t) <= n.
Threshold threshold_t(const SymbolPolynomial& p, std::uint64_t n, const EnumerationConfig& config = {});
std::vector<Threshold> thresholds(const SymbolPolynomial& p, const std::vector<std::uint64_t>& n_values,
                                  const EnumerationConfig& config = {});

struct EpsBracket {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    Rational t;
};

/// (card K(1/eps) - 1, card K(1/eps)), floored at 0.
EpsBracket eps_dimension_bracket(const SymbolPolynomial& p, const Rational& eps, const EnumerationConfig& config = {});

enum class CountSource { Omega, K };

struct CountSeries {
    CountSource source = CountSource::K;
    std::vector<std::pair<Rational, std::uint64_t>> entries;

    std::string to_csv() const;
};

/// Counts on an increasing grid, all read from a single enumeration at the
/// largest t.
CountSeries count_series(const PointSet& b, const std::vector<Rational>& grid, const EnumerationConfig& config = {});
CountSeries count_series(const SymbolPolynomial& p, const std::vector<Rational>& grid,
                         const EnumerationConfig& config = {});

/// round(10^(lo + i (hi - lo) / (count - 1))) for i = 0..count-1, deduplicated.
std::vector<Rational> geometric_grid(double lo_exponent, double hi_exponent, int count);

}  // namespace newton_widths
