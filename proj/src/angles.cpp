#include "horn/angles.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "horn/error.hpp"

namespace horn {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotElliptic: return "NotElliptic";
        case ErrorCode::NullPolarVector: return "NullPolarVector";
        case ErrorCode::NotScalarProduct: return "NotScalarProduct";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::BisectionFailure: return "BisectionFailure";
        case ErrorCode::DegenerateAngle: return "DegenerateAngle";
        case ErrorCode::Unresolvable: return "Unresolvable";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw HornError(ErrorCode::ParseError, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den, b.den);
    return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(std::int64_t k, const Rational& a) { return Rational(k * a.num, a.den); }

int compare(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128 bits avoids overflow for any int64 inputs.
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    return (l > r) - (l < r);
}

Angle Angle::exact(Rational multiple_of_pi) {
    Angle a;
    a.value = multiple_of_pi.value() * kPi;
    a.pi = multiple_of_pi;
    return a;
}

std::string Angle::str() const {
    if (!pi) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", value);
        return buf;
    }
    if (pi->num == 0) return "0";
    std::string s;
    if (pi->num == -1) s = "-";
    else if (pi->num != 1) s = std::to_string(pi->num);
    s += "pi";
    if (pi->den != 1) s += "/" + std::to_string(pi->den);
    return s;
}

Angle operator+(const Angle& a, const Angle& b) {
    Angle r(a.value + b.value);
    if (a.pi && b.pi) {
        r.pi = *a.pi + *b.pi;
        r.value = r.pi->value() * kPi;
    }
    return r;
}

Angle operator-(const Angle& a, const Angle& b) { return a + (-1) * b; }

Angle operator*(std::int64_t k, const Angle& a) {
    Angle r(static_cast<double>(k) * a.value);
    if (a.pi) {
        r.pi = k * *a.pi;
        r.value = r.pi->value() * kPi;
    }
    return r;
}

int compare_level(const Angle& x, const Rational& level_over_pi, double tol) {
    if (x.pi) return compare(*x.pi, level_over_pi);
    double d = x.value - level_over_pi.value() * kPi;
    if (std::abs(d) <= tol) return 0;
    return d > 0 ? 1 : -1;
}

Angle reduce_mod_2pi(const Angle& a) {
    if (a.pi) {
        std::int64_t two_den = 2 * a.pi->den;
        std::int64_t n = a.pi->num % two_den;
        if (n < 0) n += two_den;
        return Angle::exact(Rational(n, a.pi->den));
    }
    double v = std::fmod(a.value, kTwoPi);
    if (v < 0) v += kTwoPi;
    if (kTwoPi - v <= 1e-9) v = 0.0;
    return Angle(v);
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* why) {
    throw HornError(ErrorCode::ParseError,
                    std::string(why) + " at position " + std::to_string(pos) + " in '" +
                        std::string(text) + "'");
}

std::size_t skip_ws(std::string_view s, std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
}

}  // namespace

Angle parse_angle(std::string_view text) {
    std::size_t i = skip_ws(text, 0);
    std::size_t end = text.size();
    while (end > i && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    std::string_view s = text.substr(0, end);
    if (i >= s.size()) parse_fail(text, i, "empty angle");

    std::size_t pi_pos = s.find("pi", i);
    if (pi_pos == std::string_view::npos) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            parse_fail(text, static_cast<std::size_t>(ptr - s.data()), "expected a number");
        if (v == 0.0) return Angle::exact(0);
        return Angle(v);
    }

    // [sign][integer][*]pi[/integer]
    std::int64_t sign = 1;
    if (s[i] == '-' || s[i] == '+') {
        if (s[i] == '-') sign = -1;
        i = skip_ws(s, i + 1);
    }
    std::int64_t num = 1;
    if (i < pi_pos) {
        std::size_t stop = pi_pos;
        while (stop > i && (s[stop - 1] == '*' || s[stop - 1] == ' ')) --stop;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + stop, num);
        if (ec != std::errc() || ptr != s.data() + stop)
            parse_fail(text, static_cast<std::size_t>(ptr - s.data()), "expected an integer multiple of pi");
    }
    std::size_t j = skip_ws(s, pi_pos + 2);
    std::int64_t den = 1;
    if (j < s.size()) {
        if (s[j] != '/') parse_fail(text, j, "expected '/'");
        j = skip_ws(s, j + 1);
        auto [ptr, ec] = std::from_chars(s.data() + j, s.data() + s.size(), den);
        if (ec != std::errc() || ptr != s.data() + s.size() || den == 0)
            parse_fail(text, static_cast<std::size_t>(ptr - s.data()), "expected a nonzero denominator");
    }
    return Angle::exact(Rational(sign * num, den));
}

}  // namespace horn
