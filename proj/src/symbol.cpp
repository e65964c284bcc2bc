#include "newton_widths/symbol.hpp"

#include "newton_widths/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace newton_widths {

int Monomial::degree() const {
    int total = 0;
    for (int e : exponents) total += e;
    return total;
}

bool Monomial::is_zero() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::string to_string(const Monomial& m) {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
        if (j) out << ',';
        out << m.exponents[j];
    }
    out << ')';
    return out.str();
}

PointSet::PointSet(int dimension, std::vector<Monomial> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension_ < 1) throw Error(ErrorCode::InvalidArgument, "point set dimension must be >= 1");
    if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "point set must be nonempty");
    for (const auto& p : points_) {
        if (p.dimension() != static_cast<std::size_t>(dimension_)) {
            throw Error(ErrorCode::DimensionConflict, "point " + to_string(p) + " has wrong dimension");
        }
        for (int e : p.exponents) {
            if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in " + to_string(p));
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Monomial& m) const {
    return std::binary_search(points_.begin(), points_.end(), m);
}

bool PointSet::contains_origin() const { return points_.front().is_zero(); }

SymbolPolynomial::SymbolPolynomial(int dimension, std::vector<Term> terms) : dimension_(dimension) {
    if (dimension_ < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    std::map<Monomial, Rational> merged;
    for (auto& term : terms) {
        if (term.exponent.dimension() != static_cast<std::size_t>(dimension_)) {
            throw Error(ErrorCode::DimensionConflict,
                        "exponent " + to_string(term.exponent) + " does not match dimension " +
                            std::to_string(dimension_));
        }
        for (int e : term.exponent.exponents) {
            if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in " + to_string(term.exponent));
        }
        merged[term.exponent] += term.coefficient;
    }
    for (auto& [exponent, coefficient] : merged) {
        if (coefficient != 0) terms_.push_back({exponent, coefficient});
    }
    if (terms_.empty()) throw Error(ErrorCode::EmptyPolynomial, "polynomial is zero after merging terms");
}

PointSet SymbolPolynomial::exponent_set() const {
    std::vector<Monomial> points;
    points.reserve(terms_.size());
    for (const auto& t : terms_) points.push_back(t.exponent);
    return PointSet(dimension_, std::move(points));
}

Rational SymbolPolynomial::coefficient(const Monomial& alpha) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), alpha,
                               [](const Term& t, const Monomial& m) { return t.exponent < m; });
    if (it != terms_.end() && it->exponent == alpha) return it->coefficient;
    return 0;
}

namespace {

template <typename T>
void check_length(std::span<const T> point, int dimension) {
    if (point.size() != static_cast<std::size_t>(dimension)) {
        throw Error(ErrorCode::DimensionConflict, "point has length " + std::to_string(point.size()) +
                                                      ", expected " + std::to_string(dimension));
    }
}

}  // namespace

// 0^0 = 1 falls out of the empty product.
Rational SymbolPolynomial::evaluate(std::span<const Rational> point) const {
    check_length(point, dimension_);
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational value = t.coefficient;
        for (int j = 0; j < dimension_; ++j) value *= pow(point[j], t.exponent[j]);
        sum += value;
    }
    return sum;
}

Rational SymbolPolynomial::evaluate(std::span<const std::int64_t> point) const {
    check_length(point, dimension_);
    Rational sum = 0;
    for (const auto& t : terms_) {
        Integer value = 1;
        for (int j = 0; j < dimension_; ++j) {
            for (int e = 0; e < t.exponent[j]; ++e) value *= point[j];
        }
        sum += t.coefficient * value;
    }
    return sum;
}

double SymbolPolynomial::evaluate(std::span<const double> point) const {
    check_length(point, dimension_);
    double sum = 0.0;
    for (const auto& t : terms_) {
        double value = to_double(t.coefficient);
        for (int j = 0; j < dimension_; ++j) {
            if (t.exponent[j] != 0) value *= std::pow(point[j], t.exponent[j]);
        }
        sum += value;
    }
    return sum;
}

std::string SymbolPolynomial::render() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational magnitude = abs(t.coefficient);
        bool negative = t.coefficient < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool constant = t.exponent.is_zero();
        bool need_star = false;
        if (constant || magnitude != 1) {
            out << to_string(magnitude);
            need_star = true;
        }
        for (int j = 0; j < dimension_; ++j) {
            int e = t.exponent[j];
            if (e == 0) continue;
            if (need_star) out << '*';
            out << 'x' << (j + 1);
            if (e > 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

SymbolPolynomial operator+(const SymbolPolynomial& a, const SymbolPolynomial& b) {
    if (a.dimension_ != b.dimension_) throw Error(ErrorCode::DimensionConflict, "adding symbols of different dimension");
    std::vector<Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return SymbolPolynomial(a.dimension_, std::move(terms));
}

SymbolPolynomial SymbolPolynomial::scaled(const Rational& factor) const {
    if (factor == 0) throw Error(ErrorCode::EmptyPolynomial, "scaling by zero");
    std::vector<Term> terms = terms_;
    for (auto& t : terms) t.coefficient *= factor;
    return SymbolPolynomial(dimension_, std::move(terms));
}

namespace {

std::vector<Term> restrict_terms(const SymbolPolynomial& parent, const PointSet& support) {
    if (support.dimension() != parent.dimension()) {
        throw Error(ErrorCode::DimensionConflict, "face support has wrong dimension");
    }
    std::vector<Term> terms;
    for (const auto& alpha : support) {
        Rational c = parent.coefficient(alpha);
        if (c == 0) throw Error(ErrorCode::InvalidArgument, "support point " + to_string(alpha) + " is not an exponent of P");
        terms.push_back({alpha, c});
    }
    return terms;
}

}  // namespace

FacePolynomial::FacePolynomial(const SymbolPolynomial& parent, const PointSet& support)
    : support_(support), restricted_(parent.dimension(), restrict_terms(parent, support)) {}

// ---------------------------------------------------------------- parsing

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    struct RawTerm {
        Rational coefficient = 1;
        std::map<int, int> powers;  // variable index (1-based) -> exponent
    };

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_space();
        if (at_end()) fail("empty polynomial text");
        bool first = true;
        while (!at_end()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            RawTerm term = parse_term();
            if (negative) term.coefficient = -term.coefficient;
            terms.push_back(std::move(term));
            first = false;
            skip_space();
        }
        return terms;
    }

    int max_index() const { return max_index_; }

private:
    RawTerm parse_term() {
        RawTerm term;
        bool any = false;
        while (true) {
            skip_space();
            if (at_end()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term.coefficient *= parse_literal();
            } else if (c == 'x' || c == 'X') {
                ++pos_;
                int index = parse_unsigned("variable index");
                if (index < 1) fail("variable indices start at 1");
                int power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    power = parse_unsigned("exponent");
                    if (power < 1) fail("exponents must be positive integers");
                }
                term.powers[index] += power;
                max_index_ = std::max(max_index_, index);
            } else {
                if (!any) fail(std::string("unexpected character '") + c + "'");
                break;
            }
            any = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == 'x' || peek() == 'X')) {
                    fail("expected a factor after '*'");
                }
            }
            if (!at_end() && (peek() == '+' || peek() == '-')) break;
        }
        if (!any) fail("expected a term");
        return term;
    }

    Rational parse_literal() {
        std::string digits = read_digits();
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            std::size_t at = pos_;
            std::string den = read_digits();
            if (den.empty()) fail("expected denominator after '/'");
            if (Integer(den) == 0) fail_at(at, "zero denominator");
            return Rational(Integer(digits), Integer(den));
        }
        return Rational(Integer(digits));
    }

    int parse_unsigned(const char* what) {
        std::size_t at = pos_;
        std::string digits = read_digits();
        if (digits.empty()) fail(std::string("expected ") + what);
        if (digits.size() > 6) fail_at(at, std::string(what) + " too large");
        return std::stoi(digits);
    }

    std::string read_digits() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return digits;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
        throw Error(ErrorCode::Syntax, "syntax error at position " + std::to_string(at) + ": " + message);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_index_ = 0;
};

}  // namespace

SymbolPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension) {
    PolynomialParser parser(text);
    auto raw = parser.parse();
    int d = dimension.value_or(std::max(parser.max_index(), 1));
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
    if (parser.max_index() > d) {
        throw Error(ErrorCode::DimensionConflict, "variable x" + std::to_string(parser.max_index()) +
                                                      " exceeds dimension " + std::to_string(d));
    }
    std::vector<Term> terms;
    for (auto& r : raw) {
        std::vector<int> e(d, 0);
        for (auto [index, power] : r.powers) e[index - 1] = power;
        terms.push_back({Monomial(std::move(e)), r.coefficient});
    }
    return SymbolPolynomial(d, std::move(terms));
}

SymbolPolynomial parse_polynomial_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Syntax, std::string("invalid JSON: ") + e.what());
    }
    try {
        int d = doc.at("d").get<int>();
        std::vector<Term> terms;
        for (const auto& t : doc.at("terms")) {
            std::vector<int> e = t.at("exp").get<std::vector<int>>();
            const auto& c = t.at("coeff");
            Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                                           : Rational(Integer(c.get<long long>()));
            terms.push_back({Monomial(std::move(e)), coeff});
        }
        return SymbolPolynomial(d, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Syntax, std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string to_json_text(const SymbolPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        terms.push_back({{"exp", t.exponent.exponents}, {"coeff", to_string(t.coefficient)}});
    }
    return nlohmann::json{{"d", p.dimension()}, {"terms", terms}}.dump();
}

PointSet exponent_set(const SymbolPolynomial& p) { return p.exponent_set(); }

Rational evaluate(const SymbolPolynomial& p, std::span<const Rational> point) { return p.evaluate(point); }

FacePolynomial restrict_to_face(const SymbolPolynomial& p, const PointSet& sigma) { return FacePolynomial(p, sigma); }

Rational tau_lower_bound(const SymbolPolynomial& p, std::span<const LatticePoint> enumeration) {
    if (enumeration.empty()) throw Error(ErrorCode::InvalidArgument, "tau_lower_bound needs a nonempty enumeration");
    LatticeEvaluator eval(p);
    Integer best = -1;
    for (const auto& k : enumeration) {
        Integer v = eval.abs_scaled(k);
        if (best < 0 || v < best) best = v;
    }
    return Rational(best) / Rational(eval.scale());
}

// ---------------------------------------------------------------- lattice evaluation

namespace {

constexpr int kFastBits = 124;

// Caller guarantees |v| < 2^124.
__int128 to_i128(const Integer& v) {
    Integer a = abs(v);
    Integer low_mask = (Integer(1) << 64) - 1;
    auto high = static_cast<unsigned __int128>((a >> 64).convert_to<unsigned long long>());
    auto low = static_cast<unsigned __int128>((a & low_mask).convert_to<unsigned long long>());
    auto magnitude = static_cast<__int128>((high << 64) | low);
    return v < 0 ? -magnitude : magnitude;
}

}  // namespace

LatticeEvaluator::LatticeEvaluator(const SymbolPolynomial& p) {
    scale_ = 1;
    for (const auto& t : p.terms()) scale_ = lcm(scale_, denominator(t.coefficient));
    for (const auto& t : p.terms()) {
        Integer c = numerator(t.coefficient) * (scale_ / denominator(t.coefficient));
        terms_.push_back({t.exponent.exponents, c, 0});
    }
}

void LatticeEvaluator::prepare(std::int64_t radius) {
    Integer bound = 0;
    Integer r = radius < 1 ? 1 : radius;
    for (const auto& t : terms_) {
        Integer m = abs(t.coefficient);
        for (int e : t.exponents) {
            for (int i = 0; i < e; ++i) m *= r;
        }
        bound += m;
    }
    Integer cap = Integer(1) << kFastBits;
    fast_ = bound < cap;
    if (fast_) {
        fast_radius_ = radius < 1 ? 1 : radius;
        for (auto& t : terms_) t.fast_coefficient = to_i128(t.coefficient);
    }
}

LatticeEvaluator::Threshold LatticeEvaluator::threshold(const Rational& t) const {
    Threshold th;
    th.scaled = floor(Rational(t * Rational(scale_)));
    th.negative = th.scaled < 0;
    Integer cap = Integer(1) << kFastBits;
    if (th.scaled >= cap) {
        th.saturated = true;
    } else if (!th.negative) {
        th.fast = to_i128(th.scaled);
    }
    return th;
}

__int128 LatticeEvaluator::eval_fast(std::span<const std::int64_t> k) const {
    __int128 sum = 0;
    for (const auto& t : terms_) {
        __int128 v = t.fast_coefficient;
        for (std::size_t j = 0; j < k.size(); ++j) {
            for (int e = 0; e < t.exponents[j]; ++e) v *= k[j];
        }
        sum += v;
    }
    return sum;
}

Integer LatticeEvaluator::eval_big(std::span<const std::int64_t> k) const {
    Integer sum = 0;
    for (const auto& t : terms_) {
        Integer v = t.coefficient;
        for (std::size_t j = 0; j < k.size(); ++j) {
            for (int e = 0; e < t.exponents[j]; ++e) v *= k[j];
        }
        sum += v;
    }
    return sum;
}

bool LatticeEvaluator::within(std::span<const std::int64_t> k, const Threshold& th) const {
    if (th.negative) return false;
    if (fast_ && in_fast_range(k)) {
        if (th.saturated) return true;
        __int128 v = eval_fast(k);
        if (v < 0) v = -v;
        return v <= th.fast;
    }
    return abs(eval_big(k)) <= th.scaled;
}

bool LatticeEvaluator::in_fast_range(std::span<const std::int64_t> k) const {
    for (auto v : k) {
        if (v > fast_radius_ || v < -fast_radius_) return false;
    }
    return true;
}

Integer LatticeEvaluator::abs_scaled(std::span<const std::int64_t> k) const {
    if (fast_ && in_fast_range(k)) {
        __int128 v = eval_fast(k);
        if (v < 0) v = -v;
        auto u = static_cast<unsigned __int128>(v);
        Integer high = static_cast<unsigned long long>(u >> 64);
        Integer low = static_cast<unsigned long long>(u & ~0ULL);
        return (high << 64) | low;
    }
    return abs(eval_big(k));
}

Rational LatticeEvaluator::abs_value(std::span<const std::int64_t> k) const {
    return Rational(abs_scaled(k)) / Rational(scale_);
}

}  // namespace newton_widths
