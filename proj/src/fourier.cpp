#include "newton_widths/fourier.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/lattice.hpp"
#include "newton_widths/newton.hpp"
#include "newton_widths/random.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

namespace newton_widths {

namespace {

constexpr double kRelativeTolerance = 1e-12;

void require_dimension(const SymbolPolynomial& p, const TrigPoly& f) {
    if (p.dimension() != f.dimension()) {
        throw Error(ErrorCode::DimensionConflict, "symbol has d = " + std::to_string(p.dimension()) +
                                                      " but the trigonometric polynomial has d = " +
                                                      std::to_string(f.dimension()));
    }
}

double symbol_at(const SymbolPolynomial& p, const LatticePoint& k) {
    return to_double(p.evaluate(std::span<const std::int64_t>(k)));
}

std::string render_point(const LatticePoint& k) {
    std::string out = "(";
    for (std::size_t j = 0; j < k.size(); ++j) out += (j ? "," : "") + std::to_string(k[j]);
    return out + ")";
}

std::int64_t radius_of(const TrigPoly& f) {
    std::int64_t r = 0;
    for (const auto& [k, c] : f.modes()) {
        for (auto v : k) r = std::max(r, v < 0 ? -v : v);
    }
    return r;
}

void require_above_tau(const Rational& t, const Rational& tau) {
    if (!(t > tau)) {
        throw Error(ErrorCode::Precondition, "t = " + to_string(t) + " must exceed tau = " + to_string(tau));
    }
}

}  // namespace

void TrigPoly::set(const LatticePoint& k, Complex c) {
    if (static_cast<int>(k.size()) != dimension_) {
        throw Error(ErrorCode::DimensionConflict, "mode " + render_point(k) + " has the wrong dimension");
    }
    if (c == Complex(0.0, 0.0)) {
        modes_.erase(k);
    } else {
        modes_[k] = c;
    }
}

Complex TrigPoly::coefficient(const LatticePoint& k) const {
    auto it = modes_.find(k);
    return it == modes_.end() ? Complex(0.0, 0.0) : it->second;
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const {
    if (other.dimension_ != dimension_) throw Error(ErrorCode::DimensionConflict, "dimension mismatch");
    TrigPoly out = *this;
    for (const auto& [k, c] : other.modes_) out.set(k, out.coefficient(k) - c);
    return out;
}

TrigPoly apply_symbol(const SymbolPolynomial& p, const TrigPoly& f) {
    require_dimension(p, f);
    TrigPoly out(f.dimension());
    for (const auto& [k, c] : f.modes()) out.set(k, symbol_at(p, k) * c);
    return out;
}

double l2_norm(const TrigPoly& f) {
    long double sum = 0;
    for (const auto& [k, c] : f.modes()) sum += static_cast<long double>(std::norm(c));
    return static_cast<double>(std::sqrt(sum));
}

SeminormValue seminorm_w(const SymbolPolynomial& p, const TrigPoly& f) {
    require_dimension(p, f);
    SeminormValue out;
    long double sum = 0;
    for (const auto& [k, c] : f.modes()) {
        const double v = symbol_at(p, k);
        const double contribution = v * v * std::norm(c);
        out.contributions.emplace_back(k, contribution);
        sum += contribution;
    }
    out.value = static_cast<double>(std::sqrt(sum));
    return out;
}

TrigPoly truncate(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t) {
    require_dimension(p, f);
    if (t < 0) throw Error(ErrorCode::InvalidArgument, "t must be nonnegative");
    LatticeEvaluator ev(p);
    ev.prepare(radius_of(f));
    const auto th = ev.threshold(t);
    TrigPoly out(f.dimension());
    for (const auto& [k, c] : f.modes()) {
        if (ev.within(k, th)) out.set(k, c);
    }
    return out;
}

InequalityCheck jackson_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t, const Rational& tau) {
    require_dimension(p, f);
    require_above_tau(t, tau);
    const double w = seminorm_w(p, f).value;
    InequalityCheck out;
    out.bound = w / to_double(t);
    out.measured = l2_norm(f - truncate(p, f, t));
    out.slack = out.bound - out.measured;
    out.tolerance = kRelativeTolerance * (1.0 + w);
    return out;
}

InequalityCheck jackson_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t) {
    return jackson_check(p, f, t, tau(p));
}

InequalityCheck bernstein_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t,
                                const Rational& tau) {
    require_dimension(p, f);
    require_above_tau(t, tau);
    LatticeEvaluator ev(p);
    ev.prepare(radius_of(f));
    const auto th = ev.threshold(t);
    for (const auto& [k, c] : f.modes()) {
        if (!ev.within(k, th)) {
            throw Error(ErrorCode::SupportViolation, "mode " + render_point(k) + " has |P(k)| = " +
                                                         to_string(ev.abs_value(k)) + " > t = " + to_string(t));
        }
    }
    const double norm = l2_norm(f);
    InequalityCheck out;
    out.bound = to_double(t) * norm;
    out.measured = seminorm_w(p, f).value;
    out.slack = out.bound - out.measured;
    out.tolerance = kRelativeTolerance * (1.0 + out.bound);
    return out;
}

InequalityCheck bernstein_check(const SymbolPolynomial& p, const TrigPoly& f, const Rational& t) {
    return bernstein_check(p, f, t, tau(p));
}

EquivalenceRatios equivalence_ratios(const SymbolPolynomial& p, const PointSet& theta, const TrigPoly& f) {
    require_dimension(p, f);
    EquivalenceRatios out;
    if (f.is_zero()) {
        out.zero = true;
        return out;
    }
    std::vector<long double> per_alpha(theta.size(), 0.0L);
    long double w_sq = 0, modewise = 0;
    bool first = true;
    for (const auto& [k, c] : f.modes()) {
        const double mag = std::norm(c);
        const double v = symbol_at(p, k);
        long double largest = 0;
        std::size_t i = 0;
        for (const auto& alpha : theta) {
            long double m = 1;
            for (int j = 0; j < f.dimension(); ++j) {
                for (int e = 0; e < alpha.exponents[j]; ++e) m *= static_cast<long double>(k[j]);
            }
            m *= m;
            per_alpha[i++] += m * mag;
            largest = std::max(largest, m);
        }
        w_sq += static_cast<long double>(v) * v * mag;
        modewise += largest * mag;
        const double r = static_cast<double>(static_cast<long double>(v) * v / largest);
        if (first || r < out.lo) out.lo = r;
        if (first || r > out.hi) out.hi = r;
        first = false;
    }
    long double sum = 0, max = 0;
    for (auto v : per_alpha) {
        sum += v;
        max = std::max(max, v);
    }
    out.w_sq = static_cast<double>(w_sq);
    out.vertex_sum = static_cast<double>(sum);
    out.vertex_max = static_cast<double>(max);
    out.vertex_max_modewise = static_cast<double>(modewise);
    const double ratio = out.w_sq / out.vertex_max_modewise;
    const double slack = kRelativeTolerance * std::max(1.0, ratio);
    out.within = out.lo - slack <= ratio && ratio <= out.hi + slack;
    return out;
}

EquivalenceRatios equivalence_ratios(const SymbolPolynomial& p, const TrigPoly& f) {
    return equivalence_ratios(p, vertex_set(p.exponent_set()), f);
}

TrigPoly random_trig(std::uint64_t seed, int d, std::size_t support, double scale, std::int64_t box) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (box < 0) throw Error(ErrorCode::InvalidArgument, "box must be >= 0");
    long double volume = 1;
    for (int j = 0; j < d; ++j) volume *= 2.0L * box + 1.0L;
    if (static_cast<long double>(support) > volume) {
        throw Error(ErrorCode::InvalidArgument, "support size exceeds the number of modes in the box");
    }
    SeededRandom rng(seed);
    TrigPoly f(d);
    while (f.size() < support) {
        LatticePoint k(d);
        for (auto& v : k) v = rng.integer(-box, box);
        if (f.modes().count(k)) continue;
        Complex c(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
        if (c == Complex(0.0, 0.0)) continue;
        f.set(k, c);
    }
    return f;
}

std::string to_json_text(const TrigPoly& f) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& [k, c] : f.modes()) modes.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    return nlohmann::json{{"d", f.dimension()}, {"modes", modes}}.dump();
}

TrigPoly parse_trig_json(const std::string& text) {
    try {
        auto doc = nlohmann::json::parse(text);
        TrigPoly f(doc.at("d").get<int>());
        for (const auto& m : doc.at("modes")) {
            auto k = m.at("k").get<LatticePoint>();
            Complex c(m.at("re").get<double>(), m.value("im", 0.0));
            if (f.modes().count(k)) throw Error(ErrorCode::Syntax, "duplicate mode " + render_point(k));
            f.set(k, c);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Syntax, std::string("invalid trigonometric polynomial JSON: ") + e.what());
    }
}

}  // namespace newton_widths
