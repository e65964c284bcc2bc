#pragma once

#include "newton_widths/newton.hpp"
#include "newton_widths/symbol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newton_widths {

struct DegeneracyConfig {
    double gamma_threshold = 1e-6;
    std::vector<double> radii{1.0, 10.0, 100.0, 1000.0};
    int direction_samples = 256;
    int refine_steps = 50;
    int line_samples = 64;
    int bisection_steps = 48;
    std::uint64_t seed = 0;
};

enum class WitnessKind { ExactZero, SignChange };

/// Certificate that a face polynomial vanishes off the coordinate planes:
/// either P_sigma(point) == 0 exactly, or P_sigma(point) and
/// P_sigma(other_point) have opposite signs with both points in the same
/// open orthant.
struct VanishingWitness {
    PointSet support;
    bool whole_polynomial = false;  // support is all of A (P itself)
    WitnessKind kind = WitnessKind::ExactZero;
    RationalVector point;
    RationalVector other_point;
    double abs_value = 0.0;  // |P_sigma(point)|
};

enum class Verdict { Degenerate, LikelyNondegenerate, FailsNecessaryCondition, Inconclusive };

const char* to_string(Verdict v);

struct DegeneracyReport {
    bool even_vertices = false;
    double gamma_hat = 0.0;
    std::vector<VanishingWitness> witnesses;
    Verdict verdict = Verdict::Inconclusive;
};

/// Every vertex of theta(A) has even coordinates.
bool even_vertex_check(const PointSet& a);

/// Sampled infimum of |P(x)| / max_{alpha in theta(A)} |x^alpha| off the
/// coordinate planes: seeded sphere directions and the sign patterns of
/// (1,...,1) at each radius, then coordinate descent from the smallest ratio.
/// An upper bound for the true gamma.
double gamma_estimate(const SymbolPolynomial& p, const DegeneracyConfig& config);
double gamma_estimate(const SymbolPolynomial& p, int sample_count, std::uint64_t seed);

/// Searches for an exact zero or an in-orthant sign change of P_sigma.
std::optional<VanishingWitness> face_vanishing_witness(const SymbolPolynomial& p, const PointSet& support,
                                                       const DegeneracyConfig& config);
std::optional<VanishingWitness> face_vanishing_witness(const SymbolPolynomial& p, const Face& face,
                                                       int sample_count, std::uint64_t seed);

/// Verdict precedence: fails_necessary_condition (odd vertex), degenerate
/// (witness found), likely_nondegenerate (gamma_hat above threshold),
/// inconclusive.
DegeneracyReport degeneracy_report(const SymbolPolynomial& p, const DegeneracyConfig& config = {});

/// True iff the witness re-verifies with exact arithmetic.
bool verify_witness(const SymbolPolynomial& p, const VanishingWitness& w);

}  // namespace newton_widths
