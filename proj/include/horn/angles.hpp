#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace horn {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exact rational number with int64 numerator/denominator, always normalized
// (den > 0, gcd(num, den) = 1).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend Rational operator*(std::int64_t k, const Rational& a);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend int compare(const Rational& a, const Rational& b);
};

// A real angle in radians. When `pi` is set, the angle is exactly pi * (*pi)
// and `value` is its floating point image.
struct Angle {
    double value = 0.0;
    std::optional<Rational> pi;

    Angle() = default;
    Angle(double v) : value(v) {}
    static Angle exact(Rational multiple_of_pi);
    static Angle exact(std::int64_t num, std::int64_t den = 1) { return exact(Rational(num, den)); }

    bool is_exact() const { return pi.has_value(); }
    std::string str() const;

    friend Angle operator+(const Angle& a, const Angle& b);
    friend Angle operator-(const Angle& a, const Angle& b);
    friend Angle operator*(std::int64_t k, const Angle& a);
};

// Sign of x - level*pi: exact when x is exact, otherwise -1/0/+1 with a
// symmetric band of width tol around the level.
int compare_level(const Angle& x, const Rational& level_over_pi, double tol);

// Reduces into [0, 2pi). Floating values within 1e-9 of 2pi wrap to 0.
Angle reduce_mod_2pi(const Angle& a);

// Parses "2pi/3", "-pi", "pi", "11pi/6", "3/4pi" style rationals of pi, or a
// plain decimal. Throws HornError(ParseError).
Angle parse_angle(std::string_view text);

}  // namespace horn
