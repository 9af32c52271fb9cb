#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace csl {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// All ring arithmetic in this project is exact signed 128-bit with checked
// operations: overflow throws instead of wrapping.

[[noreturn]] inline void overflow_fail(const char* op) {
    throw std::overflow_error(std::string("exact integer overflow in ") + op);
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) overflow_fail("add");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) overflow_fail("sub");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow_fail("mul");
    return r;
}

inline i128 checked_neg(i128 a) { return checked_sub(i128{0}, a); }

inline i128 abs128(i128 a) { return a < 0 ? checked_neg(a) : a; }

inline i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
    char buf[48];
    int i = 48;
    while (u) {
        buf[--i] = char('0' + int(u % 10));
        u /= 10;
    }
    std::string s;
    if (neg) s.push_back('-');
    s.append(buf + i, buf + 48);
    return s;
}

// Narrowing helpers: fail loudly if the value does not fit.
inline i64 to_i64(i128 v) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        overflow_fail("narrow to i64");
    return i64(v);
}

inline u64 to_u64(i128 v) {
    if (v < 0 || v > i128(std::numeric_limits<u64>::max())) overflow_fail("narrow to u64");
    return u64(v);
}

inline double to_double(i128 v) { return double(v); }

}  // namespace csl
