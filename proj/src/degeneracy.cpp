#include "newton_widths/degeneracy.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace newton_widths {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Degenerate: return "degenerate";
        case Verdict::LikelyNondegenerate: return "likely_nondegenerate";
        case Verdict::FailsNecessaryCondition: return "fails_necessary_condition";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

bool even_vertex_check(const PointSet& a) {
    PointSet theta = vertex_set(a);
    return std::all_of(theta.begin(), theta.end(), [](const Monomial& m) {
        return std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e % 2 == 0; });
    });
}

namespace {

bool off_planes(const std::vector<double>& x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v != 0.0; });
}

class RatioSampler {
public:
    RatioSampler(const SymbolPolynomial& p, const PointSet& theta) : p_(p), theta_(theta) {}

    // |P(x)| / max_theta |x^alpha|; NaN on coordinate planes.
    double ratio(const std::vector<double>& x) const {
        if (!off_planes(x)) return std::numeric_limits<double>::quiet_NaN();
        double top = 0.0;
        for (const auto& alpha : theta_) {
            double m = 1.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (alpha[j] != 0) m *= std::pow(std::abs(x[j]), alpha[j]);
            }
            top = std::max(top, m);
        }
        double value = std::abs(p_.evaluate(std::span<const double>(x)));
        return value / top;
    }

    void offer(const std::vector<double>& x) {
        double r = ratio(x);
        if (std::isnan(r)) return;
        if (r < best_) {
            best_ = r;
            best_point_ = x;
        }
    }

    void refine(int steps) {
        if (best_point_.empty()) return;
        double h = 0.0;
        for (double v : best_point_) h = std::max(h, std::abs(v));
        h *= 0.1;
        for (int step = 0; step < steps && h > 0.0; ++step) {
            bool improved = false;
            for (std::size_t j = 0; j < best_point_.size(); ++j) {
                for (double sign : {1.0, -1.0}) {
                    std::vector<double> trial = best_point_;
                    trial[j] += sign * h;
                    double r = ratio(trial);
                    if (!std::isnan(r) && r < best_) {
                        best_ = r;
                        best_point_ = trial;
                        improved = true;
                    }
                }
            }
            if (!improved) h *= 0.5;
        }
    }

    double best() const { return best_; }

private:
    const SymbolPolynomial& p_;
    const PointSet& theta_;
    double best_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_point_;
};

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rational approximate(double x, long denominator) {
    double scaled = std::round(x * static_cast<double>(denominator));
    return Rational(Integer(static_cast<long long>(scaled)), Integer(denominator));
}

class WitnessSearch {
public:
    WitnessSearch(const SymbolPolynomial& parent, const PointSet& support, const DegeneracyConfig& config)
        : face_(parent, support), config_(config), d_(parent.dimension()) {
        whole_ = support == parent.exponent_set();
    }

    std::optional<VanishingWitness> run() {
        if (auto w = grid()) return w;
        if (auto w = lines()) return w;
        return std::nullopt;
    }

private:
    Rational eval(const RationalVector& x) const { return face_.polynomial().evaluate(std::span<const Rational>(x)); }

    VanishingWitness make(WitnessKind kind, RationalVector point, RationalVector other = {}) const {
        VanishingWitness w{face_.support(), whole_, kind, std::move(point), std::move(other), 0.0};
        w.abs_value = to_double(abs(eval(w.point)));
        return w;
    }

    // Small rational grid off the coordinate planes, evaluated exactly.
    std::optional<VanishingWitness> grid() const {
        std::vector<Rational> values;
        std::vector<Rational> magnitudes;
        if (d_ <= 3) {
            magnitudes = {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(2, 3)};
        } else if (d_ == 4) {
            magnitudes = {Rational(1), Rational(2), Rational(1, 2)};
        } else {
            magnitudes = {Rational(1)};
        }
        for (const auto& m : magnitudes) {
            values.push_back(m);
            values.push_back(-m);
        }
        std::vector<std::size_t> index(d_, 0);
        RationalVector x(d_);
        while (true) {
            for (int j = 0; j < d_; ++j) x[j] = values[index[j]];
            if (eval(x) == 0) return make(WitnessKind::ExactZero, x);
            int j = 0;
            while (j < d_ && ++index[j] == values.size()) index[j++] = 0;
            if (j == d_) break;
        }
        return std::nullopt;
    }

    // Random segments inside one open orthant; a sign change on a segment
    // certifies a zero in that orthant.
    std::optional<VanishingWitness> lines() const {
        SeededRandom rng(config_.seed * 0x9E3779B97F4A7C15ULL + 0x51ED27u + face_.support().size());
        constexpr int kSteps = 16;
        for (int trial = 0; trial < config_.line_samples; ++trial) {
            std::vector<int> signs(d_);
            for (auto& s : signs) s = rng.uniform() < 0.5 ? -1 : 1;
            auto endpoint = [&] {
                RationalVector p(d_);
                for (int j = 0; j < d_; ++j) {
                    Rational mag = approximate(std::exp(rng.uniform(-3.0, 3.0)), 64);
                    if (mag == 0) mag = Rational(1, 64);
                    p[j] = signs[j] * mag;
                }
                return p;
            };
            RationalVector a = endpoint();
            RationalVector b = endpoint();
            RationalVector prev = a;
            Rational prev_value = eval(prev);
            if (prev_value == 0) return make(WitnessKind::ExactZero, prev);
            for (int s = 1; s <= kSteps; ++s) {
                RationalVector cur(d_);
                for (int j = 0; j < d_; ++j) cur[j] = a[j] + (b[j] - a[j]) * Rational(s, kSteps);
                Rational cur_value = eval(cur);
                if (cur_value == 0) return make(WitnessKind::ExactZero, cur);
                if (sign_of(cur_value) != sign_of(prev_value)) return bisect(prev, cur, prev_value);
                prev = std::move(cur);
                prev_value = cur_value;
            }
        }
        return std::nullopt;
    }

    VanishingWitness bisect(RationalVector lo, RationalVector hi, Rational lo_value) const {
        for (int step = 0; step < config_.bisection_steps; ++step) {
            RationalVector mid(d_);
            for (int j = 0; j < d_; ++j) mid[j] = (lo[j] + hi[j]) / 2;
            Rational v = eval(mid);
            if (v == 0) return make(WitnessKind::ExactZero, mid);
            if (sign_of(v) == sign_of(lo_value)) {
                lo = std::move(mid);
                lo_value = v;
            } else {
                hi = std::move(mid);
            }
        }
        return make(WitnessKind::SignChange, std::move(lo), std::move(hi));
    }

    FacePolynomial face_;
    const DegeneracyConfig& config_;
    int d_;
    bool whole_ = false;
};

}  // namespace

double gamma_estimate(const SymbolPolynomial& p, const DegeneracyConfig& config) {
    if (config.direction_samples < 1) throw Error(ErrorCode::InvalidArgument, "sample_count must be >= 1");
    const PointSet theta = vertex_set(p.exponent_set());
    const int d = p.dimension();
    RatioSampler sampler(p, theta);
    // Directions are drawn once and reused at every radius, so a larger
    // sample count always samples a superset.
    SeededRandom rng(config.seed);
    std::vector<std::vector<double>> directions;
    for (int i = 0; i < config.direction_samples; ++i) {
        std::vector<double> x(d);
        double norm = 0.0;
        for (auto& v : x) {
            v = rng.normal();
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (auto& v : x) v /= norm;
        directions.push_back(std::move(x));
    }
    for (double radius : config.radii) {
        for (const auto& u : directions) {
            std::vector<double> x(d);
            for (int j = 0; j < d; ++j) x[j] = u[j] * radius;
            sampler.offer(x);
        }
        const double diagonal = radius / std::sqrt(static_cast<double>(d));
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<double> x(d);
            for (int j = 0; j < d; ++j) x[j] = (mask >> j & 1u) ? -diagonal : diagonal;
            sampler.offer(x);
        }
    }
    sampler.refine(config.refine_steps);
    return sampler.best();
}

double gamma_estimate(const SymbolPolynomial& p, int sample_count, std::uint64_t seed) {
    DegeneracyConfig config;
    config.direction_samples = sample_count;
    config.seed = seed;
    return gamma_estimate(p, config);
}

std::optional<VanishingWitness> face_vanishing_witness(const SymbolPolynomial& p, const PointSet& support,
                                                       const DegeneracyConfig& config) {
    return WitnessSearch(p, support, config).run();
}

std::optional<VanishingWitness> face_vanishing_witness(const SymbolPolynomial& p, const Face& face,
                                                       int sample_count, std::uint64_t seed) {
    DegeneracyConfig config;
    config.line_samples = sample_count;
    config.seed = seed;
    return face_vanishing_witness(p, face.support, config);
}

bool verify_witness(const SymbolPolynomial& p, const VanishingWitness& w) {
    FacePolynomial face(p, w.support);
    auto eval = [&](const RationalVector& x) { return face.polynomial().evaluate(std::span<const Rational>(x)); };
    auto nonzero = [](const RationalVector& x) {
        return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
    };
    if (w.point.size() != static_cast<std::size_t>(p.dimension()) || !nonzero(w.point)) return false;
    if (w.kind == WitnessKind::ExactZero) return eval(w.point) == 0;
    if (w.other_point.size() != w.point.size() || !nonzero(w.other_point)) return false;
    for (std::size_t j = 0; j < w.point.size(); ++j) {
        if ((w.point[j] > 0) != (w.other_point[j] > 0)) return false;
    }
    return sign_of(eval(w.point)) * sign_of(eval(w.other_point)) < 0;
}

DegeneracyReport degeneracy_report(const SymbolPolynomial& p, const DegeneracyConfig& config) {
    DegeneracyReport report;
    const PointSet a = p.exponent_set();
    report.even_vertices = even_vertex_check(a);
    report.gamma_hat = gamma_estimate(p, config);

    if (auto w = face_vanishing_witness(p, a, config)) report.witnesses.push_back(std::move(*w));
    for (const auto& face : faces(a)) {
        if (auto w = face_vanishing_witness(p, face.support, config)) report.witnesses.push_back(std::move(*w));
    }

    if (!report.even_vertices) {
        report.verdict = Verdict::FailsNecessaryCondition;
    } else if (!report.witnesses.empty()) {
        report.verdict = Verdict::Degenerate;
    } else if (report.gamma_hat > config.gamma_threshold) {
        report.verdict = Verdict::LikelyNondegenerate;
    } else {
        report.verdict = Verdict::Inconclusive;
    }
    return report;
}

}  // namespace newton_widths
