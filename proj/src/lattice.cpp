#include "newton_widths/lattice.hpp"

#include "newton_widths/error.hpp"
#include "newton_widths/lp.hpp"
#include "newton_widths/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace newton_widths {

const char* to_string(EnumerationMode mode) {
    switch (mode) {
        case EnumerationMode::Automatic: return "automatic";
        case EnumerationMode::AxisBounded: return "axis_bounded";
        case EnumerationMode::AdaptiveShell: return "adaptive_shell";
    }
    return "?";
}

void EnumerationConfig::validate() const {
    if (hard_cap == 0) throw Error(ErrorCode::InvalidArgument, "hard_cap must be positive");
    if (shell_streak < 1) throw Error(ErrorCode::InvalidArgument, "shell_streak must be >= 1");
    if (threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");
    for (auto b : user_box) {
        if (b < 0) throw Error(ErrorCode::InvalidArgument, "user_box entries must be >= 0");
    }
    if (gamma_hat && !(*gamma_hat > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma_hat must be positive");
}

namespace {

using Box = std::vector<std::int64_t>;

// Number of points in prod [-b_j, b_j] (or [0, b_j] when nonneg), saturating.
std::uint64_t box_volume(const Box& box, bool nonneg) {
    long double v = 1;
    for (auto b : box) v *= nonneg ? (b + 1.0L) : (2.0L * b + 1.0L);
    if (v > static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(v);
}

// Visits every point of prod [lo_j, hi_j] in lexicographic order.
template <typename Fn>
void for_each_in_box(const Box& lo, const Box& hi, Fn&& fn) {
    const std::size_t d = lo.size();
    for (std::size_t j = 0; j < d; ++j) {
        if (lo[j] > hi[j]) return;
    }
    LatticePoint k(lo);
    while (true) {
        fn(k);
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (k[j] < hi[j]) {
                ++k[j];
                break;
            }
            k[j] = lo[j];
            if (j == 0) return;
        }
        if (d == 0) return;
    }
}

// Splits the first coordinate into contiguous chunks, one per worker, and
// concatenates the chunk results in order so lexicographic order survives.
template <typename Fn>
std::vector<LatticePoint> parallel_box(const Box& lo, const Box& hi, int threads, Fn&& keep) {
    const std::int64_t span = hi[0] - lo[0] + 1;
    const int workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, span)));
    std::vector<std::vector<LatticePoint>> parts(workers);
    auto run = [&](int w) {
        Box a = lo, b = hi;
        a[0] = lo[0] + span * w / workers;
        b[0] = lo[0] + span * (w + 1) / workers - 1;
        for_each_in_box(a, b, [&](const LatticePoint& k) {
            if (keep(k)) parts[w].push_back(k);
        });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    std::vector<LatticePoint> out;
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

// Largest exponent on each coordinate axis among the points of a; -1 if none.
std::vector<int> axis_exponents(const PointSet& a) {
    std::vector<int> best(a.dimension(), -1);
    for (const auto& m : a) {
        int axis = -1;
        int nonzero = 0;
        for (int j = 0; j < a.dimension(); ++j) {
            if (m.exponents[j] != 0) {
                ++nonzero;
                axis = j;
            }
        }
        if (nonzero == 1) best[axis] = std::max(best[axis], m.exponents[axis]);
    }
    return best;
}

[[noreturn]] void cap_failure(const SymbolPolynomial& p, std::uint64_t cap) {
    if (!compactness_check(p.exponent_set()).compact) {
        throw Error(ErrorCode::Unbounded, "K(t) appears infinite: enumeration reached the cap of " +
                                              std::to_string(cap) + " points and the compactness check fails");
    }
    throw Error(ErrorCode::CapExceeded, "enumeration would exceed the cap of " + std::to_string(cap) + " points");
}

struct Plan {
    EnumerationMode mode = EnumerationMode::AdaptiveShell;
    double gamma = 0.0;
    std::vector<int> axis;
};

Plan make_plan(const SymbolPolynomial& p, const EnumerationConfig& config) {
    config.validate();
    Plan plan;
    plan.axis = axis_exponents(p.exponent_set());
    const bool compact = compactness_check(p.exponent_set()).compact;
    if (config.mode == EnumerationMode::AdaptiveShell) return plan;

    double gamma = 0.0;
    bool screened = false;
    if (config.gamma_hat) {
        gamma = *config.gamma_hat;
        screened = true;
    } else {
        auto report = degeneracy_report(p, config.degeneracy);
        gamma = report.gamma_hat;
        screened = report.verdict == Verdict::LikelyNondegenerate;
    }
    const bool usable = compact && screened && gamma > 0.0 && std::isfinite(gamma);
    if (config.mode == EnumerationMode::AxisBounded && !usable) {
        throw Error(ErrorCode::Precondition, "axis_bounded enumeration needs a compact, nondegenerate symbol");
    }
    if (usable) {
        plan.mode = EnumerationMode::AxisBounded;
        plan.gamma = gamma;
    }
    return plan;
}

Box axis_box(const Plan& plan, const Rational& t) {
    Box box;
    const double ratio = 2.0 * std::max(to_double(t), 0.0) / plan.gamma;
    for (int a : plan.axis) {
        double b = std::ceil(std::pow(ratio, 1.0 / a));
        if (!(b < 4.0e18)) throw Error(ErrorCode::CapExceeded, "axis bound overflows 64-bit coordinates");
        box.push_back(static_cast<std::int64_t>(b));
    }
    return box;
}

std::int64_t max_of(const Box& box) { return box.empty() ? 0 : *std::max_element(box.begin(), box.end()); }

std::int64_t radius_of(const std::vector<LatticePoint>& points) {
    std::int64_t r = 0;
    for (const auto& k : points) {
        for (auto v : k) r = std::max(r, v < 0 ? -v : v);
    }
    return r;
}

std::vector<LatticePoint> enumerate_box(const LatticeEvaluator& ev, const LatticeEvaluator::Threshold& th,
                                        const Box& box, int threads) {
    Box lo(box.size()), hi(box);
    for (std::size_t j = 0; j < box.size(); ++j) lo[j] = -box[j];
    return parallel_box(lo, hi, threads, [&](const LatticePoint& k) { return ev.within(k, th); });
}

// Points with ||k||_inf == r: the first coordinate reaching r sits at +-r,
// earlier ones are strictly inside, later ones are free in [-r, r].
template <typename Fn>
void for_each_on_shell(int d, std::int64_t r, Fn&& fn) {
    if (r == 0) {
        fn(LatticePoint(d, 0));
        return;
    }
    for (int j = 0; j < d; ++j) {
        Box lo(d), hi(d);
        for (int i = 0; i < d; ++i) {
            if (i < j) {
                lo[i] = -r + 1;
                hi[i] = r - 1;
            } else {
                lo[i] = -r;
                hi[i] = r;
            }
        }
        for (std::int64_t s : {-r, r}) {
            lo[j] = hi[j] = s;
            for_each_in_box(lo, hi, fn);
        }
    }
}

std::vector<LatticePoint> enumerate_shells(const SymbolPolynomial& p, LatticeEvaluator& ev,
                                           const LatticeEvaluator::Threshold& th, const EnumerationConfig& config) {
    std::vector<LatticePoint> out;
    std::uint64_t visited = 0;
    std::int64_t prepared = 0;
    int empty_streak = 0;
    for (std::int64_t r = 0;; ++r) {
        if (r > prepared) {
            prepared = std::max<std::int64_t>(2 * prepared, 16);
            ev.prepare(prepared);
        }
        const std::uint64_t shell = r == 0 ? 1 : box_volume(Box(p.dimension(), r), false) -
                                                  box_volume(Box(p.dimension(), r - 1), false);
        if (visited + shell > config.hard_cap) cap_failure(p, config.hard_cap);
        visited += shell;
        bool hit = false;
        for_each_on_shell(p.dimension(), r, [&](const LatticePoint& k) {
            if (ev.within(k, th)) {
                out.push_back(k);
                hit = true;
            }
        });
        // An empty shell means its minimum of |P| exceeds t.
        empty_streak = hit ? 0 : empty_streak + 1;
        if (empty_streak >= config.shell_streak) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

KEnumeration run(const SymbolPolynomial& p, const Rational& t, const Plan& plan, const EnumerationConfig& config) {
    KEnumeration result;
    result.t = t;
    LatticeEvaluator ev(p);
    const auto th = ev.threshold(t);

    if (!config.user_box.empty()) {
        if (static_cast<int>(config.user_box.size()) != p.dimension()) {
            throw Error(ErrorCode::DimensionConflict, "user_box has the wrong number of coordinates");
        }
        if (box_volume(config.user_box, false) > config.hard_cap) {
            throw Error(ErrorCode::CapExceeded, "user_box exceeds the point cap");
        }
        ev.prepare(max_of(config.user_box));
        result.points = enumerate_box(ev, th, config.user_box, config.threads);
        result.mode = plan.mode;
        result.heuristic = false;
        result.box_limited = true;
        return result;
    }
    if (th.negative) {
        result.mode = plan.mode;
        result.heuristic = plan.mode != EnumerationMode::AxisBounded;
        return result;
    }
    if (plan.mode == EnumerationMode::AxisBounded) {
        Box box = axis_box(plan, t);
        if (box_volume(box, false) > config.hard_cap) cap_failure(p, config.hard_cap);
        ev.prepare(max_of(box));
        result.points = enumerate_box(ev, th, box, config.threads);
        result.mode = EnumerationMode::AxisBounded;
        result.heuristic = false;
        return result;
    }
    result.points = enumerate_shells(p, ev, th, config);
    result.mode = EnumerationMode::AdaptiveShell;
    result.heuristic = true;
    return result;
}

// Sorted scaled values L*|P(k)| over a K(t) large enough to hold `need` points.
struct ValueTable {
    std::vector<Integer> values;
    Integer scale;
};

ValueTable value_table(const SymbolPolynomial& p, std::uint64_t need, const Plan& plan,
                       const EnumerationConfig& config) {
    LatticeEvaluator ev(p);
    const LatticePoint origin(p.dimension(), 0);
    Rational t = std::max(ev.abs_value(origin), Rational(1));
    while (true) {
        auto k = run(p, t, plan, config);
        if (k.points.size() >= need || (k.box_limited && !k.points.empty())) {
            ValueTable table;
            table.scale = ev.scale();
            ev.prepare(radius_of(k.points));
            for (const auto& q : k.points) table.values.push_back(ev.abs_scaled(q));
            std::sort(table.values.begin(), table.values.end());
            if (table.values.size() < need) {
                throw Error(ErrorCode::CapExceeded, "user_box holds fewer than " + std::to_string(need) + " points");
            }
            return table;
        }
        if (k.box_limited) throw Error(ErrorCode::CapExceeded, "user_box holds no lattice point of K(t)");
        t *= 4;
    }
}

Threshold threshold_from(const ValueTable& table, std::uint64_t n) {
    Threshold out;
    const Integer& v = table.values[n];
    out.t_n = Rational(v) / Rational(table.scale);
    auto [lo, hi] = std::equal_range(table.values.begin(), table.values.end(), v);
    out.card_at_threshold = static_cast<std::uint64_t>(hi - table.values.begin());
    out.tie = (hi - lo) > 1;
    out.attained = out.card_at_threshold <= n;
    return out;
}

// max_{alpha in B} k^alpha for k >= 0, saturated at limit + 1.
unsigned __int128 monomial_max(const PointSet& b, const LatticePoint& k, unsigned __int128 limit) {
    unsigned __int128 best = 0;
    for (const auto& m : b) {
        bool vanishes = false;
        for (int j = 0; j < b.dimension(); ++j) vanishes = vanishes || (k[j] == 0 && m.exponents[j] > 0);
        if (vanishes) continue;
        unsigned __int128 v = 1;
        for (int j = 0; j < b.dimension() && v <= limit; ++j) {
            const auto kj = static_cast<unsigned __int128>(k[j]);
            for (int e = 0; e < m.exponents[j] && v <= limit; ++e) v = v > limit / kj ? limit + 1 : v * kj;
        }
        best = std::max(best, v);
        if (best > limit) break;
    }
    return best;
}

unsigned __int128 to_u128(const Integer& v) {
    const Integer cap = (Integer(1) << 120);
    if (v >= cap) return static_cast<unsigned __int128>(1) << 120;
    unsigned __int128 high = static_cast<unsigned long long>(v >> 64);
    unsigned __int128 low = static_cast<unsigned long long>(v & Integer(~0ULL));
    return (high << 64) | low;
}

// Values max_alpha k^alpha over the omega box for t, keeping those <= floor(t).
std::vector<unsigned __int128> omega_values(const PointSet& b, const Rational& t, const EnumerationConfig& config) {
    config.validate();
    if (!has_axis_rays(b)) throw Error(ErrorCode::Unbounded, "Omega(t) is infinite: some coordinate ray misses B");
    if (t < 0) return {};
    const Integer ft = floor(t);
    const auto axis = axis_exponents(b);
    Box box;
    for (int a : axis) {
        Integer r = floor_root(Rational(ft), static_cast<unsigned>(a));
        if (r > Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
            throw Error(ErrorCode::CapExceeded, "Omega box overflows 64-bit coordinates");
        }
        box.push_back(static_cast<std::int64_t>(r));
    }
    if (box_volume(box, true) > config.hard_cap) {
        throw Error(ErrorCode::CapExceeded, "Omega box exceeds the cap of " + std::to_string(config.hard_cap) +
                                                " points");
    }
    const unsigned __int128 limit = to_u128(ft);
    std::vector<unsigned __int128> values;
    Box lo(box.size(), 0);
    for_each_in_box(lo, box, [&](const LatticePoint& k) {
        auto v = monomial_max(b, k, limit);
        if (v <= limit) values.push_back(v);
    });
    return values;
}

void require_compact(const SymbolPolynomial& p) {
    if (!compactness_check(p.exponent_set()).compact) {
        throw Error(ErrorCode::Precondition, "symbol fails the compactness check: K(t) is not finite for all t");
    }
}

void check_grid(const std::vector<Rational>& grid) {
    if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty t grid");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) throw Error(ErrorCode::InvalidArgument, "t grid must be strictly increasing");
    }
}

}  // namespace

std::uint64_t count_omega(const PointSet& b, const Rational& t, const EnumerationConfig& config) {
    return omega_values(b, t, config).size();
}

KEnumeration enumerate_k(const SymbolPolynomial& p, const Rational& t, const EnumerationConfig& config) {
    return run(p, t, make_plan(p, config), config);
}

std::uint64_t card_k(const SymbolPolynomial& p, const Rational& t, const EnumerationConfig& config) {
    return enumerate_k(p, t, config).points.size();
}

Rational tau(const SymbolPolynomial& p, const EnumerationConfig& config) {
    LatticeEvaluator ev(p);
    const LatticePoint origin(p.dimension(), 0);
    auto k = enumerate_k(p, ev.abs_value(origin), config);
    return tau_lower_bound(p, k.points);
}

Threshold threshold_t(const SymbolPolynomial& p, std::uint64_t n, const EnumerationConfig& config) {
    return thresholds(p, {n}, config).front();
}

std::vector<Threshold> thresholds(const SymbolPolynomial& p, const std::vector<std::uint64_t>& n_values,
                                  const EnumerationConfig& config) {
    require_compact(p);
    if (n_values.empty()) return {};
    const auto plan = make_plan(p, config);
    const auto need = *std::max_element(n_values.begin(), n_values.end()) + 1;
    const auto table = value_table(p, need, plan, config);
    std::vector<Threshold> out;
    for (auto n : n_values) out.push_back(threshold_from(table, n));
    return out;
}

EpsBracket eps_dimension_bracket(const SymbolPolynomial& p, const Rational& eps, const EnumerationConfig& config) {
    if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
    require_compact(p);
    EpsBracket out;
    out.t = Rational(1) / eps;
    out.upper = card_k(p, out.t, config);
    out.lower = out.upper == 0 ? 0 : out.upper - 1;
    return out;
}

std::string CountSeries::to_csv() const {
    std::ostringstream out;
    out << "t,count\n";
    for (const auto& [t, c] : entries) out << to_string(t) << ',' << c << '\n';
    return out.str();
}

CountSeries count_series(const PointSet& b, const std::vector<Rational>& grid, const EnumerationConfig& config) {
    check_grid(grid);
    auto values = omega_values(b, grid.back(), config);
    std::sort(values.begin(), values.end());
    CountSeries series;
    series.source = CountSource::Omega;
    for (const auto& t : grid) {
        std::uint64_t c = 0;
        if (t >= 0) {
            const auto ft = to_u128(floor(t));
            c = static_cast<std::uint64_t>(std::upper_bound(values.begin(), values.end(), ft) - values.begin());
        }
        series.entries.emplace_back(t, c);
    }
    return series;
}

CountSeries count_series(const SymbolPolynomial& p, const std::vector<Rational>& grid,
                         const EnumerationConfig& config) {
    check_grid(grid);
    auto k = enumerate_k(p, grid.back(), config);
    LatticeEvaluator ev(p);
    ev.prepare(radius_of(k.points));
    std::vector<Integer> values;
    values.reserve(k.points.size());
    for (const auto& q : k.points) values.push_back(ev.abs_scaled(q));
    std::sort(values.begin(), values.end());
    CountSeries series;
    series.source = CountSource::K;
    for (const auto& t : grid) {
        std::uint64_t c = 0;
        if (t >= 0) {
            const Integer scaled = floor(Rational(t * Rational(ev.scale())));
            c = static_cast<std::uint64_t>(std::upper_bound(values.begin(), values.end(), scaled) - values.begin());
        }
        series.entries.emplace_back(t, c);
    }
    return series;
}

std::vector<Rational> geometric_grid(double lo_exponent, double hi_exponent, int count) {
    if (count < 1 || !(lo_exponent <= hi_exponent)) throw Error(ErrorCode::InvalidArgument, "bad grid range");
    std::vector<Rational> grid;
    for (int i = 0; i < count; ++i) {
        const double e = count == 1 ? hi_exponent : lo_exponent + (hi_exponent - lo_exponent) * i / (count - 1);
        Rational v(Integer(static_cast<long long>(std::llround(std::pow(10.0, e)))));
        if (grid.empty() || grid.back() < v) grid.push_back(v);
    }
    return grid;
}

}  // namespace newton_widths
