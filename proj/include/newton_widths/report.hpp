#pragma once

#include "newton_widths/degeneracy.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/rational.hpp"
#include "newton_widths/symbol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace newton_widths {

inline constexpr int kReportSchema = 1;

struct AnalysisOptions {
    bool force = false;  // report the width order even when a screen fails
    bool fit = false;
    Rational t_min = 1000;
    Rational t_max = 1000000;
    int grid_points = 13;
    std::vector<std::uint64_t> widths_n;
    DegeneracyConfig degeneracy;
    EnumerationConfig enumeration;
    bool timings = false;  // off by default so reports are byte-reproducible
};

struct AnalysisReport {
    std::string json;  // sorted keys, rationals as "p/q"
    bool screen_passed = false;
    std::string screen_failure;
};

/// Runs the whole pipeline. Screen failures are recorded in the report,
/// not thrown; resource and input errors propagate as Error.
AnalysisReport analyze(const SymbolPolynomial& p, const AnalysisOptions& options = {});

}  // namespace newton_widths
