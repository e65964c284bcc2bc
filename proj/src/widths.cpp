#include "newton_widths/widths.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/lp.hpp"
#include "newton_widths/newton.hpp"

#include <cmath>
#include <set>

namespace newton_widths {

namespace {

std::string power(const Rational& e) { return to_string(e); }

std::string hypothesis_failure(const SymbolPolynomial& p, const DegeneracyReport& report) {
    const auto c = compactness_check(p.exponent_set());
    if (!c.zero_in_a) return "compactness: the constant term is missing (0 not in A)";
    for (std::size_t j = 0; j < c.axis_rays.size(); ++j) {
        if (!c.axis_rays[j]) return "compactness: no pure power of x" + std::to_string(j + 1) + " in A";
    }
    switch (report.verdict) {
        case Verdict::LikelyNondegenerate: return {};
        case Verdict::FailsNecessaryCondition:
            return "nondegeneracy: a vertex of the Newton diagram has an odd coordinate";
        case Verdict::Degenerate: return "nondegeneracy: a face polynomial vanishes off the coordinate hyperplanes";
        case Verdict::Inconclusive: return "nondegeneracy: the screen was inconclusive";
    }
    return "nondegeneracy";
}

}  // namespace

std::string d_n_formula(const Rational& rho, int nu) {
    std::string out = "n^" + power(-rho);
    if (nu > 0) out += "*(log n)^" + power(rho * nu);
    return out;
}

std::string n_eps_formula(const Rational& rho, int nu) {
    std::string out = "eps^" + power(-Rational(1) / rho);
    if (nu > 0) out += "*|log eps|^" + std::to_string(nu);
    return out;
}

AsymptoticOrder theoretical_order(const SymbolPolynomial& p, bool force, const DegeneracyConfig& degeneracy) {
    return theoretical_order(p, degeneracy_report(p, degeneracy), force);
}

AsymptoticOrder theoretical_order(const SymbolPolynomial& p, const DegeneracyReport& report, bool force) {
    AsymptoticOrder out;
    const auto failure = hypothesis_failure(p, report);
    if (!failure.empty()) {
        const bool compact = compactness_check(p.exponent_set()).compact;
        if (!force || !compact) throw Error(ErrorCode::Precondition, "width order unavailable: " + failure);
        out.forced = true;
        out.caveat = "hypothesis overridden (" + failure + "); the order is not guaranteed";
    }
    const auto theta = vertex_set(p.exponent_set());
    const auto check = duality_check(theta);
    out.mu = check.mu;
    out.rho = check.rho;
    out.nu = nu_of(theta);
    out.d_n_formula = d_n_formula(out.rho, out.nu);
    out.n_eps_formula = n_eps_formula(out.rho, out.nu);
    return out;
}

Rational anisotropic_formula_check(const std::vector<int>& beta) {
    if (beta.empty()) throw Error(ErrorCode::InvalidArgument, "beta must be nonempty");
    const int d = static_cast<int>(beta.size());
    std::vector<Monomial> pts{Monomial{std::vector<int>(d, 0)}};
    Rational inverse = 0;
    for (int j = 0; j < d; ++j) {
        if (beta[j] < 1) throw Error(ErrorCode::InvalidArgument, "beta entries must be >= 1");
        std::vector<int> e(d, 0);
        e[j] = beta[j];
        pts.push_back(Monomial{e});
        inverse += Rational(1, beta[j]);
    }
    const Rational rho = rho_of(PointSet(d, pts));
    if (rho != Rational(1) / inverse) {
        throw Error(ErrorCode::Precondition, "LP rho " + to_string(rho) + " differs from the closed form");
    }
    return rho;
}

std::vector<WidthEstimate> width_estimates(const SymbolPolynomial& p, const std::vector<std::uint64_t>& n_values,
                                           const EnumerationConfig& config) {
    std::vector<WidthEstimate> out;
    const auto table = thresholds(p, n_values, config);
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        WidthEstimate w;
        w.n = n_values[i];
        w.t_n = table[i].t_n;
        w.d_n_estimate = Rational(1) / w.t_n;
        w.tie = table[i].tie;
        out.push_back(w);
    }
    return out;
}

FitResult fit_growth(const CountSeries& series, int d) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    std::vector<double> x, loglog, y;
    std::set<double> distinct;
    for (const auto& [t, count] : series.entries) {
        const double tv = to_double(t);
        if (tv < 2.0 || count == 0) continue;
        x.push_back(std::log(tv));
        loglog.push_back(std::log(std::log(tv)));
        y.push_back(std::log(static_cast<double>(count)));
        distinct.insert(tv);
    }
    if (distinct.size() < 2) throw Error(ErrorCode::Precondition, "fit needs at least 2 distinct t >= 2");

    FitResult out;
    out.points_used = x.size();
    out.below_recommended = x.size() < 8;
    const double n = static_cast<double>(x.size());
    double sx = 0, sxx = 0;
    for (double v : x) {
        sx += v;
        sxx += v * v;
    }
    const double denom = n * sxx - sx * sx;
    double best = INFINITY;
    for (int nu = 0; nu < d; ++nu) {
        double sy = 0, sxy = 0;
        std::vector<double> z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            z[i] = y[i] - nu * loglog[i];
            sy += z[i];
            sxy += x[i] * z[i];
        }
        const double mu = (n * sxy - sx * sy) / denom;
        const double b = (sy - mu * sx) / n;
        double residual = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = z[i] - mu * x[i] - b;
            residual += e * e;
        }
        out.residual_by_nu.push_back(residual);
        out.mu_by_nu.push_back(mu);
        if (residual < best) {
            best = residual;
            out.nu_hat = nu;
            out.mu_hat = mu;
            out.intercept = b;
        }
    }
    out.mu_rational = best_rational_approximation(out.mu_hat, 12);
    return out;
}

RatioRange monomial_ratio_range(const SymbolPolynomial& p, const std::vector<LatticePoint>& points) {
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "no lattice points to scan");
    const auto theta = vertex_set(p.exponent_set());
    LatticeEvaluator ev(p);
    std::int64_t radius = 0;
    for (const auto& k : points) {
        for (auto v : k) radius = std::max(radius, v < 0 ? -v : v);
    }
    ev.prepare(radius);
    RatioRange out;
    bool first = true;
    for (const auto& k : points) {
        Integer largest = 0;
        for (const auto& alpha : theta) {
            Integer m = 1;
            for (int j = 0; j < p.dimension(); ++j) {
                for (int e = 0; e < alpha.exponents[j]; ++e) m *= (k[j] < 0 ? -k[j] : k[j]);
            }
            if (m > largest) largest = m;
        }
        const Rational r = ev.abs_value(k) / Rational(largest);
        if (first || r < out.lo) out.lo = r;
        if (first || r > out.hi) out.hi = r;
        first = false;
    }
    out.points = points.size();
    return out;
}

ConsistencyReport consistency_check(const SymbolPolynomial& p, const ConsistencyConfig& config) {
    if (!compactness_check(p.exponent_set()).compact) {
        throw Error(ErrorCode::Precondition, "consistency check needs a compact symbol");
    }
    if (config.grid_points < 2 || !(config.t_min < config.t_max) || config.t_min < 2) {
        throw Error(ErrorCode::InvalidArgument, "need 2 <= t_min < t_max and at least 2 grid points");
    }
    ConsistencyReport out;
    const auto theta = vertex_set(p.exponent_set());
    out.rho = rho_of(theta);
    out.nu = nu_of(theta);

    const auto k = enumerate_k(p, config.t_max, config.enumeration);
    out.mode = k.mode;
    out.heuristic = k.heuristic;
    out.ratio = monomial_ratio_range(p, k.points);

    const double lo = std::log10(to_double(config.t_min));
    const double hi = std::log10(to_double(config.t_max));
    auto grid = geometric_grid(lo, hi, config.grid_points);
    grid.back() = config.t_max;
    grid.front() = config.t_min;

    LatticeEvaluator ev(p);
    std::int64_t radius = 0;
    for (const auto& q : k.points) {
        for (auto v : q) radius = std::max(radius, v < 0 ? -v : v);
    }
    ev.prepare(radius);
    std::vector<Rational> values;
    values.reserve(k.points.size());
    for (const auto& q : k.points) values.push_back(ev.abs_value(q));
    std::sort(values.begin(), values.end());
    out.series.source = CountSource::K;
    for (const auto& t : grid) {
        auto c = std::upper_bound(values.begin(), values.end(), t) - values.begin();
        out.series.entries.emplace_back(t, static_cast<std::uint64_t>(c));
    }

    out.fit = fit_growth(out.series, p.dimension());
    out.mu_agrees = std::abs(out.fit.mu_hat - to_double(Rational(1) / out.rho)) <= config.mu_tolerance;
    out.nu_agrees = out.fit.nu_hat == out.nu;
    out.agreement = out.mu_agrees && out.nu_agrees;
    return out;
}

}  // namespace newton_widths
