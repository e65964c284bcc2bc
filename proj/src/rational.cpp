#include "newton_widths/rational.hpp"

#include "newton_widths/error.hpp"

#include <cctype>
#include <cmath>

namespace newton_widths {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::DimensionConflict: return "dimension_conflict";
        case ErrorCode::EmptyPolynomial: return "empty_polynomial";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Unbounded: return "unbounded";
        case ErrorCode::Infeasible: return "infeasible";
        case ErrorCode::CapExceeded: return "cap_exceeded";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::SupportViolation: return "support_violation";
    }
    return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw Error(ErrorCode::Syntax, "malformed number '" + std::string(whole) + "'");
    }
    Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

Integer ten_to(long exponent) {
    Integer result = 1;
    for (long i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw Error(ErrorCode::Syntax, "malformed denominator in '" + std::string(text) + "'");
    }
    Integer den(std::string{den_text});
    if (den == 0) throw Error(ErrorCode::Syntax, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational parse_number(std::string_view text) {
    if (text.find('/') != std::string_view::npos) return parse_rational(text);
    std::string_view mantissa = text;
    long exponent = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string_view exp_text = text.substr(e + 1);
        Integer exp_value = parse_integer(exp_text, text);
        if (abs(exp_value) > 400) {
            throw Error(ErrorCode::InvalidArgument, "exponent out of range in '" + std::string(text) + "'");
        }
        exponent = exp_value.convert_to<long>();
    }
    auto dot = mantissa.find('.');
    Integer digits;
    if (dot == std::string_view::npos) {
        digits = parse_integer(mantissa, text);
    } else {
        std::string joined(mantissa.substr(0, dot));
        std::string_view frac = mantissa.substr(dot + 1);
        if (!frac.empty() && !all_digits(frac)) {
            throw Error(ErrorCode::Syntax, "malformed number '" + std::string(text) + "'");
        }
        joined += frac;
        if (joined == "-" || joined == "+" || joined.empty()) {
            throw Error(ErrorCode::Syntax, "malformed number '" + std::string(text) + "'");
        }
        digits = parse_integer(joined, text);
        exponent -= static_cast<long>(frac.size());
    }
    if (exponent >= 0) return Rational(digits * ten_to(exponent));
    return Rational(digits, ten_to(-exponent));
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer floor(const Rational& value) {
    Integer q = numerator(value) / denominator(value);  // truncates toward zero
    if (value < 0 && Rational(q) != value) q -= 1;
    return q;
}

Integer ceil(const Rational& value) {
    Integer f = floor(value);
    return Rational(f) == value ? f : Integer(f + 1);
}

Integer floor_root(const Rational& value, unsigned exponent) {
    if (value < 0) throw Error(ErrorCode::InvalidArgument, "floor_root of a negative value");
    if (exponent == 0) throw Error(ErrorCode::InvalidArgument, "floor_root with exponent 0");
    if (value < 1) return 0;
    double guess = std::floor(std::pow(to_double(value), 1.0 / exponent));
    Integer r = guess > 0 ? Integer(static_cast<long long>(guess)) : Integer(0);
    auto power = [&](const Integer& b) {
        Integer p = 1;
        for (unsigned i = 0; i < exponent; ++i) p *= b;
        return p;
    };
    while (r > 0 && Rational(power(r)) > value) r -= 1;
    while (Rational(power(r + 1)) <= value) r += 1;
    return r;
}

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational best_rational_approximation(double value, std::int64_t max_denominator) {
    Rational best;
    double best_error = INFINITY;
    for (std::int64_t q = 1; q <= max_denominator; ++q) {
        double p = std::round(value * static_cast<double>(q));
        double error = std::abs(value - p / static_cast<double>(q));
        if (error < best_error - 1e-15) {
            best_error = error;
            best = Rational(Integer(static_cast<long long>(p)), Integer(q));
        }
    }
    return best;
}

}  // namespace newton_widths
