#include "csl/cubic_field.hpp"

#include <cmath>
#include <stdexcept>

#include "csl/bigfloat.hpp"

namespace csl {

std::string CubicInt::str() const {
    return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
}

i128 norm(const CubicInt& x) {
    i128 a3 = checked_mul(checked_mul(x.a, x.a), x.a);
    i128 b3 = checked_mul(checked_mul(x.b, x.b), x.b);
    i128 c3 = checked_mul(checked_mul(x.c, x.c), x.c);
    i128 abc = checked_mul(checked_mul(x.a, x.b), x.c);
    i128 r = checked_add(a3, checked_mul(2, b3));
    r = checked_add(r, checked_mul(4, c3));
    r = checked_sub(r, checked_mul(6, abc));
    return r;
}

LMaps l_maps(const CubicInt& x) {
    LMaps m;
    m.L1 = {x.c, x.b, x.a};
    m.L2 = {x.b, x.a, checked_mul(2, x.c)};
    m.L3 = {x.a, checked_mul(2, x.c), checked_mul(2, x.b)};
    return m;
}

CubicInt mul(const CubicInt& x, const CubicInt& y) {
    LMaps m = l_maps(x);
    Vec3 yh = y.hat();
    return {dot(m.L3, yh), dot(m.L2, yh), dot(m.L1, yh)};
}

static i128 det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    i128 d = checked_mul(r0[0], checked_sub(checked_mul(r1[1], r2[2]), checked_mul(r1[2], r2[1])));
    d = checked_sub(d, checked_mul(r0[1], checked_sub(checked_mul(r1[0], r2[2]),
                                                      checked_mul(r1[2], r2[0]))));
    d = checked_add(d, checked_mul(r0[2], checked_sub(checked_mul(r1[0], r2[1]),
                                                      checked_mul(r1[1], r2[0]))));
    return d;
}

bool det_identity_check(const CubicInt& x) {
    LMaps m = l_maps(x);
    return det3(m.L3, m.L2, m.L1) == norm(x);
}

// Evaluates the real embedding at precision p and reports whether the sign
// is certain (|value| exceeds a small-multiple-of-ulp error bound).
static int sign_real_at(const CubicInt& x, mpfr_prec_t p, bool& certain) {
    BigFloat t2 = cbrt2(p), t4 = cbrt4(p);
    BigFloat va(p), vb(p), vc(p), sum(p), mag(p);
    va.set_i128(x.a);
    vb.set_i128(x.b);
    vc.set_i128(x.c);
    mpfr_mul(vb.raw(), vb.raw(), t2.raw(), MPFR_RNDN);
    mpfr_mul(vc.raw(), vc.raw(), t4.raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), va.raw(), vb.raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), vc.raw(), MPFR_RNDN);
    // Error bound: a handful of correctly rounded ops on three terms.
    mpfr_abs(va.raw(), va.raw(), MPFR_RNDN);
    mpfr_abs(vb.raw(), vb.raw(), MPFR_RNDN);
    mpfr_abs(vc.raw(), vc.raw(), MPFR_RNDN);
    mpfr_add(mag.raw(), va.raw(), vb.raw(), MPFR_RNDN);
    mpfr_add(mag.raw(), mag.raw(), vc.raw(), MPFR_RNDN);
    mpfr_mul_2si(mag.raw(), mag.raw(), 4 - long(p), MPFR_RNDN);
    BigFloat asum(p);
    mpfr_abs(asum.raw(), sum.raw(), MPFR_RNDN);
    certain = mpfr_cmp(asum.raw(), mag.raw()) > 0;
    return mpfr_sgn(sum.raw());
}

int sign_real(const CubicInt& x) {
    if (x.is_zero()) return 0;
    for (mpfr_prec_t p = 96; p <= (mpfr_prec_t(1) << 20); p *= 2) {
        bool certain = false;
        int s = sign_real_at(x, p, certain);
        if (certain) return s;
    }
    throw std::runtime_error("sign_real: precision exhaustion");
}

int cmp_real(const CubicInt& x, const CubicInt& y) { return sign_real(x - y); }

EmbeddingValue embedding(const CubicInt& x, long precision_bits) {
    if (precision_bits < 96) precision_bits = 96;
    mpfr_prec_t p = precision_bits;
    BigFloat t2 = cbrt2(p), t4 = cbrt4(p);
    BigFloat va(p), vb(p), vc(p);
    va.set_i128(x.a);
    vb.set_i128(x.b);
    vc.set_i128(x.c);
    mpfr_fma(vb.raw(), vb.raw(), t2.raw(), va.raw(), MPFR_RNDN);
    mpfr_fma(vc.raw(), vc.raw(), t4.raw(), vb.raw(), MPFR_RNDN);
    return {vc.to_double(), precision_bits};
}

static CubicInt pow6(const CubicInt& z) {
    CubicInt z2 = mul(z, z);
    CubicInt z3 = mul(z2, z);
    return mul(z3, z3);
}

// Window test against (t^{1/3} eps0^{-1/2}, t^{1/3} eps0^{1/2}] for t = |N(z)|,
// decided exactly: z^6 vs t^2 eps0^{+-3} are ring elements, so the comparison
// reduces to sign_real of an exact difference.
namespace {
enum class WindowPos { below, inside, above };

WindowPos window_position(const CubicInt& z, i128 t) {
    static const CubicInt eps0_cubed = mul(mul(fundamental_unit(), fundamental_unit()),
                                           fundamental_unit());  // (19,15,12)
    i128 t2 = checked_mul(t, t);
    CubicInt z6 = pow6(z);
    CubicInt upper{checked_mul(t2, eps0_cubed.a), checked_mul(t2, eps0_cubed.b),
                   checked_mul(t2, eps0_cubed.c)};
    if (sign_real(z6 - upper) > 0) return WindowPos::above;
    CubicInt z6e = mul(z6, eps0_cubed);
    if (sign_real(z6e - CubicInt{t2, 0, 0}) <= 0) return WindowPos::below;
    return WindowPos::inside;
}
}  // namespace

AssociateResult normalize_associate_full(const CubicInt& x) {
    if (norm(x) == 0) throw std::domain_error("normalize_associate: zero norm");
    CubicInt z = x;
    int sign = 1;
    if (sign_real(z) < 0) {
        z = -z;
        sign = -1;
    }
    i128 t = abs128(norm(z));

    // Land near the window with a floating estimate of n = -log_eps0(w),
    // then settle the boundary exactly. sign of N(z) equals sign of the real
    // embedding in this field, so t^{1/3} is the true cube root of N(z).
    mpfr_prec_t p = 96;
    BigFloat val(p), tt(p), eps(p);
    val.set_i128(0);
    {
        BigFloat t2c = cbrt2(p), t4c = cbrt4(p), va(p), vb(p), vc(p);
        va.set_i128(z.a);
        vb.set_i128(z.b);
        vc.set_i128(z.c);
        mpfr_fma(vb.raw(), vb.raw(), t2c.raw(), va.raw(), MPFR_RNDN);
        mpfr_fma(val.raw(), vc.raw(), t4c.raw(), vb.raw(), MPFR_RNDN);
        tt.set_i128(t);
        mpfr_cbrt(tt.raw(), tt.raw(), MPFR_RNDN);
        mpfr_div(val.raw(), val.raw(), tt.raw(), MPFR_RNDN);  // w = z / t^{1/3}
        mpfr_log(val.raw(), val.raw(), MPFR_RNDN);
        mpfr_set_ui(eps.raw(), 1, MPFR_RNDN);
        BigFloat e0(p);
        e0.set_i128(0);
        mpfr_add(e0.raw(), t2c.raw(), t4c.raw(), MPFR_RNDN);
        mpfr_add_ui(e0.raw(), e0.raw(), 1, MPFR_RNDN);
        mpfr_log(e0.raw(), e0.raw(), MPFR_RNDN);
        mpfr_div(val.raw(), val.raw(), e0.raw(), MPFR_RNDN);  // log_eps0(w)
    }
    long n = -lround(val.to_double());

    const CubicInt e0 = fundamental_unit(), e0i = fundamental_unit_inv();
    long applied = 0;
    for (long i = 0; i < n; ++i) {
        z = mul(z, e0);
        ++applied;
    }
    for (long i = 0; i < -n; ++i) {
        z = mul(z, e0i);
        --applied;
    }
    for (;;) {
        WindowPos pos = window_position(z, t);
        if (pos == WindowPos::inside) break;
        if (pos == WindowPos::above) {
            z = mul(z, e0i);
            --applied;
        } else {
            z = mul(z, e0);
            ++applied;
        }
    }
    return {z, applied, sign};
}

CubicInt normalize_associate(const CubicInt& x) { return normalize_associate_full(x).value; }

static Vec3 cross3(const Vec3& u, const Vec3& v) {
    return {checked_sub(checked_mul(u[1], v[2]), checked_mul(u[2], v[1])),
            checked_sub(checked_mul(u[2], v[0]), checked_mul(u[0], v[2])),
            checked_sub(checked_mul(u[0], v[1]), checked_mul(u[1], v[0]))};
}

CrossDelta cross_delta(const CubicInt& b1, const CubicInt& b2) {
    Vec3 g1 = b1.gamma_vec(), g2 = b2.gamma_vec();
    Vec3 cr = cross3(g1, g2);
    if (cr[0] == 0 && cr[1] == 0 && cr[2] == 0)
        throw std::invalid_argument("cross_delta: parallel gamma vectors");
    i128 d = gcd128(gcd128(cr[0], cr[1]), cr[2]);
    return {cr, d};
}

std::optional<CubicInt> reconstruct_alpha(const CubicInt& b1, const CubicInt& b2) {
    Vec3 g1 = b1.gamma_vec(), g2 = b2.gamma_vec();
    Vec3 cr = cross3(g1, g2);
    if (cr[0] == 0 && cr[1] == 0 && cr[2] == 0) return std::nullopt;
    i128 d = gcd128(gcd128(cr[0], cr[1]), cr[2]);
    CubicInt alpha{cr[0] / d, cr[1] / d, cr[2] / d};
    LMaps m = l_maps(alpha);
    i128 d2 = dot(m.L2, b1.hat());
    if (d2 < 0) {
        alpha = -alpha;
    } else if (d2 == 0) {
        i128 d3 = dot(m.L3, b1.hat());
        if (d3 < 0) alpha = -alpha;
    }
    return alpha;
}

}  // namespace csl
