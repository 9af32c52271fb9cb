#pragma once

#include <optional>
#include <string_view>

#include "csl/checked.hpp"

namespace csl {

// Exact rational on checked 128-bit integers. Always normalized: den > 0,
// gcd(num, den) == 1. Used for sieve parameters (tau, gamma, delta, eta) and
// boundary exponents, where reintroducing rounding would break exact
// identity checks.
struct Rational {
    i128 num = 0;
    i128 den = 1;

    Rational() = default;
    Rational(i128 n) : num(n), den(1) {}
    Rational(i128 n, i128 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = checked_neg(num);
            den = checked_neg(den);
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: divide by zero");
        return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    Rational operator-() const { return Rational(checked_neg(num), den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_zero() const { return num == 0; }
    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return to_string(num);
        return to_string(num) + "/" + to_string(den);
    }
};

// Parses "a/b", a plain integer, or (when allow_decimal) an exact decimal
// like "0.125" which is converted to 1/8 without rounding.
inline std::optional<Rational> parse_rational(std::string_view s, bool allow_decimal = true) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    i128 num = 0, den = 1;
    bool any_digit = false, seen_dot = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            num = checked_add(checked_mul(num, 10), c - '0');
            if (seen_dot) den = checked_mul(den, 10);
            any_digit = true;
        } else if (c == '.' && !seen_dot && !seen_slash && allow_decimal) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot && any_digit) {
            seen_slash = true;
            i128 d = 0;
            bool dd = false;
            for (++i; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') return std::nullopt;
                d = checked_add(checked_mul(d, 10), s[i] - '0');
                dd = true;
            }
            if (!dd || d == 0) return std::nullopt;
            den = d;
            break;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit) return std::nullopt;
    if (neg) num = checked_neg(num);
    return Rational(num, den);
}

}  // namespace csl
