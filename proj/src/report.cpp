#include "newton_widths/report.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/lp.hpp"
#include "newton_widths/newton.hpp"
#include "newton_widths/widths.hpp"

#include <json.hpp>

#include <chrono>

namespace newton_widths {

namespace {

using nlohmann::json;

json tagged(json value, const char* provenance) { return json{{"value", std::move(value)}, {"provenance", provenance}}; }

json rational_vector(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

json point_list(const PointSet& s) {
    json out = json::array();
    for (const auto& m : s) out.push_back(m.exponents);
    return out;
}

// Odd vertices and exact zeros are certificates; everything else rests on sampling.
const char* verdict_provenance(const DegeneracyReport& r) {
    if (r.verdict == Verdict::FailsNecessaryCondition) return "exact";
    if (r.verdict == Verdict::Degenerate) {
        for (const auto& w : r.witnesses) {
            if (w.kind == WitnessKind::ExactZero) return "exact";
        }
    }
    return "sampled";
}

json degeneracy_json(const DegeneracyReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json item{{"support", point_list(w.support)},
                  {"whole_polynomial", w.whole_polynomial},
                  {"kind", w.kind == WitnessKind::ExactZero ? "exact_zero" : "sign_change"},
                  {"point", rational_vector(w.point)},
                  {"abs_value", w.abs_value},
                  {"provenance", w.kind == WitnessKind::ExactZero ? "exact" : "sampled"}};
        if (!w.other_point.empty()) item["other_point"] = rational_vector(w.other_point);
        witnesses.push_back(std::move(item));
    }
    return json{{"even_vertices", tagged(r.even_vertices, "exact")},
                {"gamma_hat", tagged(r.gamma_hat, "sampled")},
                {"verdict", tagged(to_string(r.verdict), verdict_provenance(r))},
                {"witnesses", std::move(witnesses)}};
}

std::string screen_failure(const CompactnessRecord& c, const DegeneracyReport& r) {
    if (!c.zero_in_a) return "compactness: the constant term is missing (0 not in A)";
    for (std::size_t j = 0; j < c.axis_rays.size(); ++j) {
        if (!c.axis_rays[j]) return "compactness: no pure power of x" + std::to_string(j + 1) + " in A";
    }
    switch (r.verdict) {
        case Verdict::LikelyNondegenerate: return {};
        case Verdict::FailsNecessaryCondition: return "nondegeneracy: a vertex of the Newton diagram has an odd coordinate";
        case Verdict::Degenerate: return "nondegeneracy: a face polynomial vanishes off the coordinate hyperplanes";
        case Verdict::Inconclusive: return "nondegeneracy: the screen was inconclusive";
    }
    return "nondegeneracy";
}

}  // namespace

AnalysisReport analyze(const SymbolPolynomial& p, const AnalysisOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    json timings = json::object();
    auto lap = [&](const char* name, auto since) {
        timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
    };

    const auto a = p.exponent_set();
    json doc;
    doc["schema"] = kReportSchema;
    doc["input"] = {{"polynomial", p.render()}, {"d", p.dimension()}};
    doc["exponent_set"] = point_list(a);

    auto t0 = std::chrono::steady_clock::now();
    const auto hull = convex_hull(a);
    json hull_vertices = json::array();
    for (const auto& v : hull.vertices) hull_vertices.push_back(rational_vector(v));
    doc["hull"] = {{"vertices", hull_vertices}, {"affine_dimension", hull.affine_dimension}, {"provenance", "exact"}};
    const auto delta = newton_diagram(a);
    const auto theta = vertex_set(a);
    doc["delta"] = tagged(point_list(delta), "exact");
    doc["theta"] = tagged(point_list(theta), "exact");
    json face_items = json::array();
    for (const auto& f : faces(a)) {
        face_items.push_back(
            {{"support", point_list(f.support)}, {"normal", rational_vector(f.normal)}, {"offset", to_string(f.offset)}});
    }
    doc["faces"] = {{"count", face_items.size()}, {"items", face_items}, {"provenance", "exact"}};
    const auto compact = compactness_check(a);
    doc["compactness"] = {{"zero_in_a", compact.zero_in_a},
                          {"axis_rays", compact.axis_rays},
                          {"compact", compact.compact},
                          {"provenance", "exact"}};
    lap("geometry_seconds", t0);

    t0 = std::chrono::steady_clock::now();
    const auto degeneracy = degeneracy_report(p, options.degeneracy);
    doc["degeneracy"] = degeneracy_json(degeneracy);
    lap("degeneracy_seconds", t0);

    AnalysisReport report;
    report.screen_failure = screen_failure(compact, degeneracy);
    report.screen_passed = report.screen_failure.empty();
    doc["screen"] = {{"passed", report.screen_passed}};
    if (!report.screen_passed) doc["screen"]["failure"] = report.screen_failure;

    doc["lp"] = nullptr;
    doc["order"] = nullptr;
    if (compact.compact) {
        t0 = std::chrono::steady_clock::now();
        const auto duality = duality_check(theta);
        const int nu = nu_of(theta);
        doc["lp"] = {{"mu", tagged(to_string(duality.mu), "exact")},
                     {"rho", tagged(to_string(duality.rho), "exact")},
                     {"nu", tagged(nu, "exact")},
                     {"mu_rho_is_one", duality.product_is_one}};
        if (report.screen_passed || options.force) {
            const auto order = theoretical_order(p, degeneracy, options.force);
            doc["order"] = {{"d_n_formula", order.d_n_formula},
                            {"n_eps_formula", order.n_eps_formula},
                            {"forced", order.forced}};
            if (!order.caveat.empty()) doc["order"]["caveat"] = order.caveat;
        }
        lap("lp_seconds", t0);
    }

    EnumerationConfig enumeration = options.enumeration;
    if (!enumeration.gamma_hat && degeneracy.verdict == Verdict::LikelyNondegenerate && degeneracy.gamma_hat > 0) {
        enumeration.gamma_hat = degeneracy.gamma_hat;
    }
    if (enumeration.mode == EnumerationMode::Automatic && degeneracy.verdict != Verdict::LikelyNondegenerate) {
        enumeration.mode = EnumerationMode::AdaptiveShell;
    }

    if (!options.widths_n.empty()) {
        if (!compact.compact) throw Error(ErrorCode::Precondition, "width table needs a compact symbol");
        t0 = std::chrono::steady_clock::now();
        json rows = json::array();
        for (const auto& w : width_estimates(p, options.widths_n, enumeration)) {
            rows.push_back({{"n", w.n},
                            {"t_n", to_string(w.t_n)},
                            {"d_n_estimate", to_string(w.d_n_estimate)},
                            {"tie", w.tie}});
        }
        const bool heuristic = enumeration.mode == EnumerationMode::AdaptiveShell ||
                               degeneracy.verdict != Verdict::LikelyNondegenerate;
        doc["widths"] = {{"rows", rows}, {"provenance", heuristic ? "heuristic" : "exact"}};
        lap("widths_seconds", t0);
    }

    if (options.fit) {
        if (!compact.compact) throw Error(ErrorCode::Precondition, "growth fit needs a compact symbol");
        t0 = std::chrono::steady_clock::now();
        ConsistencyConfig cc;
        cc.t_min = options.t_min;
        cc.t_max = options.t_max;
        cc.grid_points = options.grid_points;
        cc.enumeration = enumeration;
        const auto c = consistency_check(p, cc);
        json series = json::array();
        for (const auto& [t, count] : c.series.entries) series.push_back({to_string(t), count});
        doc["fit"] = {{"mu_hat", tagged(c.fit.mu_hat, "fitted")},
                      {"nu_hat", tagged(c.fit.nu_hat, "fitted")},
                      {"intercept", c.fit.intercept},
                      {"residual_by_nu", c.fit.residual_by_nu},
                      {"mu_by_nu", c.fit.mu_by_nu},
                      {"mu_rational", tagged(to_string(c.fit.mu_rational), "fitted")},
                      {"series", tagged(series, c.heuristic ? "heuristic" : "exact")},
                      {"ratio_range", tagged(json::array({to_string(c.ratio.lo), to_string(c.ratio.hi)}),
                                             c.heuristic ? "heuristic" : "exact")},
                      {"mu_agrees", c.mu_agrees},
                      {"nu_agrees", c.nu_agrees},
                      {"agreement", c.agreement},
                      {"enumeration_mode", to_string(c.mode)},
                      {"heuristic", c.heuristic}};
        lap("fit_seconds", t0);
    }

    if (options.timings) {
        lap("total_seconds", start);
        doc["timings"] = timings;
    }
    report.json = doc.dump(2);
    return report;
}

}  // namespace newton_widths
