// newton-widths: command-line front end for the symbol analysis pipeline.

#include "newton_widths/error.hpp"
#include "newton_widths/fourier.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/newton.hpp"
#include "newton_widths/report.hpp"
#include "newton_widths/widths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace nw = newton_widths;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitScreen = 2;
constexpr int kExitCap = 3;

int exit_code_for(nw::ErrorCode code) {
    switch (code) {
        case nw::ErrorCode::Syntax:
        case nw::ErrorCode::DimensionConflict:
        case nw::ErrorCode::EmptyPolynomial:
        case nw::ErrorCode::InvalidArgument: return kExitUsage;
        case nw::ErrorCode::CapExceeded: return kExitCap;
        case nw::ErrorCode::Unbounded:
        case nw::ErrorCode::Infeasible:
        case nw::ErrorCode::Precondition:
        case nw::ErrorCode::SupportViolation: return kExitScreen;
    }
    return kExitUsage;
}

void report_error(const std::string& code, const std::string& message) {
    std::cerr << nlohmann::json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Common {
    std::string poly;
    std::string input;
    int d = 0;
    int threads = 0;
    std::uint64_t cap = 100'000'000;
    std::uint64_t seed = 0;

    void add_to(CLI::App* cmd) {
        auto* p = cmd->add_option("--poly", poly, "symbol as text, e.g. \"1 + x1^2 - 3*x1*x2\"");
        auto* i = cmd->add_option("--input", input, "file holding the symbol as JSON or as text");
        p->excludes(i);
        cmd->add_option("--d", d, "number of variables (default: largest index used)")->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "worker threads (env NEWTON_WIDTHS_THREADS overrides)");
        cmd->add_option("--cap", cap, "maximum lattice points visited")->capture_default_str();
        cmd->add_option("--seed", seed, "seed for sampled quantities")->capture_default_str();
    }

    nw::SymbolPolynomial symbol() const {
        std::optional<int> dim;
        if (d > 0) dim = d;
        if (!input.empty()) {
            std::ifstream in(input);
            if (!in) throw nw::Error(nw::ErrorCode::InvalidArgument, "cannot read " + input);
            std::stringstream buffer;
            buffer << in.rdbuf();
            std::string text = buffer.str();
            const auto first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && text[first] == '{') {
                auto p = nw::parse_polynomial_json(text);
                if (dim && *dim != p.dimension()) {
                    throw nw::Error(nw::ErrorCode::DimensionConflict, "--d disagrees with the input file");
                }
                return p;
            }
            return nw::parse_polynomial(text, dim);
        }
        if (poly.empty()) throw nw::Error(nw::ErrorCode::InvalidArgument, "one of --poly or --input is required");
        return nw::parse_polynomial(poly, dim);
    }

    nw::EnumerationConfig enumeration() const {
        nw::EnumerationConfig c;
        c.hard_cap = cap;
        c.degeneracy.seed = seed;
        int t = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        if (const char* env = std::getenv("NEWTON_WIDTHS_THREADS")) {
            try {
                t = std::stoi(env);
            } catch (const std::exception&) {
                throw nw::Error(nw::ErrorCode::InvalidArgument, "NEWTON_WIDTHS_THREADS must be an integer");
            }
        }
        c.threads = t;
        return c;
    }
};

// "10,100,1000" or "geom:LO:HI:COUNT" for round(10^e) over COUNT exponents.
std::vector<nw::Rational> parse_grid(const std::string& text) {
    if (text.rfind("geom:", 0) == 0) {
        auto parts = split(text.substr(5), ':');
        if (parts.size() != 3) throw nw::Error(nw::ErrorCode::InvalidArgument, "grid form is geom:LO:HI:COUNT");
        return nw::geometric_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]));
    }
    std::vector<nw::Rational> out;
    for (const auto& item : split(text, ',')) out.push_back(nw::parse_number(item));
    return out;
}

// "0,2,8" or "A..B".
std::vector<std::uint64_t> parse_n_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text, ',')) {
        auto dots = item.find("..");
        if (dots != std::string::npos) {
            auto lo = std::stoull(item.substr(0, dots));
            auto hi = std::stoull(item.substr(dots + 2));
            for (auto n = lo; n <= hi; ++n) out.push_back(n);
        } else {
            out.push_back(std::stoull(item));
        }
    }
    if (out.empty()) throw nw::Error(nw::ErrorCode::InvalidArgument, "--n needs at least one value");
    return out;
}

// "0,0;2,0;0,2" or "0,0 2,0 0,2"
nw::PointSet parse_points(std::string text) {
    std::replace(text.begin(), text.end(), ' ', ';');
    std::vector<nw::Monomial> pts;
    int d = -1;
    for (const auto& item : split(text, ';')) {
        nw::Monomial m;
        for (const auto& v : split(item, ',')) m.exponents.push_back(std::stoi(v));
        if (d >= 0 && static_cast<int>(m.exponents.size()) != d) {
            throw nw::Error(nw::ErrorCode::DimensionConflict, "points have different lengths");
        }
        d = static_cast<int>(m.exponents.size());
        pts.push_back(m);
    }
    if (d <= 0) throw nw::Error(nw::ErrorCode::InvalidArgument, "--points is empty");
    return nw::PointSet(d, pts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polytope analysis of polynomial symbols and the widths of their Sobolev-type classes"};
    app.require_subcommand(1);

    Common common;

    auto* analyze = app.add_subcommand("analyze", "full pipeline; prints a JSON report");
    common.add_to(analyze);
    bool fit = false, force = false, timings = false;
    std::string t_min = "1000", t_max = "1000000", n_list;
    int grid_points = 13;
    analyze->add_flag("--fit", fit, "fit card K(t) growth over a geometric grid");
    analyze->add_option("--t-min", t_min, "smallest t of the fit grid")->capture_default_str();
    analyze->add_option("--t-max", t_max, "largest t of the fit grid")->capture_default_str();
    analyze->add_option("--grid-points", grid_points, "fit grid size")->capture_default_str();
    analyze->add_option("--n", n_list, "width table rows, e.g. 0,2,8 or 0..20");
    analyze->add_flag("--force", force, "report the width order even if a screen fails");
    analyze->add_flag("--timings", timings, "include wall-clock timings (breaks byte-reproducibility)");

    auto* count = app.add_subcommand("count", "card Omega_B(t) or card K(t); CSV columns t,count when --grid is used");
    common.add_to(count);
    std::string set = "K", t_text, grid_text, points_text;
    count->add_option("--set", set, "omega or K")->check(CLI::IsMember({"omega", "K"}))->capture_default_str();
    auto* t_opt = count->add_option("--t", t_text, "single threshold");
    auto* g_opt = count->add_option("--grid", grid_text, "thresholds: 10,100,1000 or geom:LO:HI:COUNT");
    t_opt->excludes(g_opt);
    count->add_option("--points", points_text, "B for --set omega as \"0,0;2,0;0,2\" or \"0,0 2,0 0,2\" (default: theta of the symbol)");

    auto* widths = app.add_subcommand("widths", "CSV columns n,t_n,d_n_estimate,tie");
    common.add_to(widths);
    std::string widths_n;
    widths->add_option("--n", widths_n, "rows, e.g. 0,2,8 or 0..20")->required();

    auto* epsdim = app.add_subcommand("epsdim", "prints \"lower upper\" bracketing the eps-dimension");
    common.add_to(epsdim);
    std::string eps_text;
    epsdim->add_option("--eps", eps_text, "eps > 0, e.g. 1/2")->required();

    auto* fourier = app.add_subcommand("fourier-check", "seeded Jackson/Bernstein/Parseval suites");
    common.add_to(fourier);
    int trials = 100;
    std::size_t support = 16;
    std::int64_t box = 20;
    fourier->add_option("--trials", trials, "random polynomials")->capture_default_str();
    fourier->add_option("--support", support, "modes per polynomial")->capture_default_str();
    fourier->add_option("--box", box, "sup-norm bound on modes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze->parsed()) {
            const auto p = common.symbol();
            nw::AnalysisOptions options;
            options.force = force;
            options.fit = fit;
            options.t_min = nw::parse_number(t_min);
            options.t_max = nw::parse_number(t_max);
            options.grid_points = grid_points;
            if (!n_list.empty()) options.widths_n = parse_n_list(n_list);
            options.enumeration = common.enumeration();
            options.degeneracy.seed = common.seed;
            options.timings = timings;
            const auto report = nw::analyze(p, options);
            std::cout << report.json << '\n';
            if (!report.screen_passed && !force) {
                report_error("screen_failed", report.screen_failure);
                return kExitScreen;
            }
            return kExitOk;
        }
        if (count->parsed()) {
            if (t_text.empty() == grid_text.empty()) {
                throw nw::Error(nw::ErrorCode::InvalidArgument, "give exactly one of --t or --grid");
            }
            const auto config = common.enumeration();
            const bool omega = set == "omega";
            std::optional<nw::PointSet> b;
            std::optional<nw::SymbolPolynomial> p;
            if (omega && !points_text.empty()) {
                b = parse_points(points_text);
            } else {
                p = common.symbol();
                if (omega) b = nw::vertex_set(p->exponent_set());
            }
            if (!t_text.empty()) {
                const auto t = nw::parse_number(t_text);
                std::cout << (omega ? nw::count_omega(*b, t, config) : nw::card_k(*p, t, config)) << '\n';
            } else {
                const auto grid = parse_grid(grid_text);
                std::cout << (omega ? nw::count_series(*b, grid, config) : nw::count_series(*p, grid, config)).to_csv();
            }
            return kExitOk;
        }
        if (widths->parsed()) {
            const auto p = common.symbol();
            std::cout << "n,t_n,d_n_estimate,tie\n";
            for (const auto& w : nw::width_estimates(p, parse_n_list(widths_n), common.enumeration())) {
                std::cout << w.n << ',' << nw::to_string(w.t_n) << ',' << nw::to_string(w.d_n_estimate) << ','
                          << (w.tie ? "true" : "false") << '\n';
            }
            return kExitOk;
        }
        if (epsdim->parsed()) {
            const auto p = common.symbol();
            const auto b = nw::eps_dimension_bracket(p, nw::parse_number(eps_text), common.enumeration());
            std::cout << b.lower << ' ' << b.upper << '\n';
            return kExitOk;
        }
        if (fourier->parsed()) {
            const auto p = common.symbol();
            const auto config = common.enumeration();
            const auto tau = nw::tau(p, config);
            const auto theta = nw::vertex_set(p.exponent_set());
            std::vector<nw::Rational> ts{tau + 1, 2 * tau + 1, nw::Rational(10)};
            double jackson = INFINITY, bernstein = INFINITY, pythagoras = 0, parseval = 0;
            bool jackson_ok = true, bernstein_ok = true, equivalence_ok = true;
            for (int trial = 0; trial < trials; ++trial) {
                const auto f = nw::random_trig(common.seed + trial, p.dimension(), support, 1.0, box);
                for (const auto& t : ts) {
                    if (!(t > tau)) continue;
                    const auto j = nw::jackson_check(p, f, t, tau);
                    jackson = std::min(jackson, j.slack);
                    jackson_ok = jackson_ok && j.holds();
                    const auto s = nw::truncate(p, f, t);
                    const auto b = nw::bernstein_check(p, s, t, tau);
                    bernstein = std::min(bernstein, b.slack);
                    bernstein_ok = bernstein_ok && b.holds();
                    const double total = std::pow(nw::l2_norm(f), 2);
                    const double parts = std::pow(nw::l2_norm(s), 2) + std::pow(nw::l2_norm(f - s), 2);
                    if (total > 0) pythagoras = std::max(pythagoras, std::abs(total - parts) / total);
                }
                const double w = nw::seminorm_w(p, f).value;
                if (w > 0) parseval = std::max(parseval, std::abs(nw::l2_norm(nw::apply_symbol(p, f)) - w) / w);
                const auto e = nw::equivalence_ratios(p, theta, f);
                equivalence_ok = equivalence_ok && (e.zero || e.within);
            }
            const bool pyth_ok = pythagoras <= 1e-12, pars_ok = parseval <= 1e-12;
            auto line = [](const char* name, bool ok, const char* what, double v) {
                std::cout << name << ' ' << (ok ? "pass" : "FAIL") << ' ' << what << '=' << v << '\n';
            };
            std::cout << "trials " << trials << " tau " << nw::to_string(tau) << '\n';
            line("jackson", jackson_ok, "worst_slack", jackson);
            line("bernstein", bernstein_ok, "worst_slack", bernstein);
            line("pythagoras", pyth_ok, "worst_rel_error", pythagoras);
            line("parseval", pars_ok, "worst_rel_error", parseval);
            std::cout << "equivalence " << (equivalence_ok ? "pass" : "FAIL") << '\n';
            return (jackson_ok && bernstein_ok && pyth_ok && pars_ok && equivalence_ok) ? kExitOk : kExitScreen;
        }
    } catch (const nw::Error& e) {
        report_error(nw::to_string(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::invalid_argument& e) {
        report_error("invalid_argument", std::string("malformed number: ") + e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        report_error("invalid_argument", std::string("number out of range: ") + e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
