#pragma once

#include <array>
#include <optional>

#include "csl/checked.hpp"

namespace csl {

using Vec3 = std::array<i128, 3>;

/// An element a + b*cbrt(2) + c*cbrt(4) of Z[cbrt(2)], stored exactly.
/// All values are immutable after construction; every operation here is
/// pure and safe to call concurrently.
struct CubicInt {
    i128 a = 0;
    i128 b = 0;
    i128 c = 0;

    CubicInt() = default;
    CubicInt(i128 a_, i128 b_, i128 c_) : a(a_), b(b_), c(c_) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    Vec3 hat() const { return {a, b, c}; }
    // gamma(beta) = (c, b, a); the reversed coordinate vector used by the
    // cross-product machinery.
    Vec3 gamma_vec() const { return {c, b, a}; }

    friend bool operator==(const CubicInt&, const CubicInt&) = default;

    CubicInt operator-() const { return {checked_neg(a), checked_neg(b), checked_neg(c)}; }
    friend CubicInt operator+(const CubicInt& x, const CubicInt& y) {
        return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c)};
    }
    friend CubicInt operator-(const CubicInt& x, const CubicInt& y) {
        return {checked_sub(x.a, y.a), checked_sub(x.b, y.b), checked_sub(x.c, y.c)};
    }

    std::string str() const;
};

/// The fundamental unit 1 + cbrt(2) + cbrt(4) and its inverse cbrt(2) - 1.
inline CubicInt fundamental_unit() { return {1, 1, 1}; }
inline CubicInt fundamental_unit_inv() { return {-1, 1, 0}; }

/// Field norm N(a,b,c) = a^3 + 2b^3 + 4c^3 - 6abc.
i128 norm(const CubicInt& x);

/// Ring product; coordinates are (L3(x).hat(y), L2(x).hat(y), L1(x).hat(y)).
CubicInt mul(const CubicInt& x, const CubicInt& y);

struct LMaps {
    Vec3 L1, L2, L3;
};

/// L1 = (c,b,a), L2 = (b,a,2c), L3 = (a,2c,2b).
LMaps l_maps(const CubicInt& x);

/// det(rows L3, L2, L1) == norm(x); always true, kept as a property check.
bool det_identity_check(const CubicInt& x);

/// Sign of the real embedding a + b*2^(1/3) + c*4^(1/3), decided exactly:
/// zero iff x == 0, otherwise by adaptive-precision evaluation.
int sign_real(const CubicInt& x);

/// Compares the real embeddings of two elements exactly.
int cmp_real(const CubicInt& x, const CubicInt& y);

/// The unique associate beta = +-eps0^n * x with positive real embedding in
/// the window (N^{1/3} eps0^{-1/2}, N^{1/3} eps0^{1/2}]. Idempotent.
/// Throws std::domain_error when norm(x) == 0.
CubicInt normalize_associate(const CubicInt& x);

/// For unit tests: the exponent n and sign s with result == s * eps0^n * x.
struct AssociateResult {
    CubicInt value;
    long unit_exponent;
    int sign;
};
AssociateResult normalize_associate_full(const CubicInt& x);

struct CrossDelta {
    Vec3 cross;   // gamma(b1) x gamma(b2)
    i128 delta;   // gcd of the coordinates, Delta(beta1, beta2)
};

/// Cross product of the gamma vectors and its coordinate gcd.
/// Throws std::invalid_argument when the gamma vectors are parallel.
CrossDelta cross_delta(const CubicInt& b1, const CubicInt& b2);

/// Reconstructs the primitive alpha with hat(alpha) = +-Delta^{-1}(g1 x g2),
/// sign chosen so L2(alpha).hat(b1) > 0 (falling back to L3 when that dot
/// product vanishes). Returns nullopt for parallel gamma vectors.
std::optional<CubicInt> reconstruct_alpha(const CubicInt& b1, const CubicInt& b2);

/// Real embedding value at the given precision (>= 96 bits by default).
struct EmbeddingValue {
    double approx;
    long precision_bits;
};
EmbeddingValue embedding(const CubicInt& x, long precision_bits = 96);

inline i128 dot(const Vec3& u, const Vec3& v) {
    return checked_add(checked_add(checked_mul(u[0], v[0]), checked_mul(u[1], v[1])),
                       checked_mul(u[2], v[2]));
}

}  // namespace csl
