#pragma once

#include <mpfr.h>

#include <utility>

#include "csl/checked.hpp"

namespace csl {

// Thin RAII wrapper over an mpfr_t with per-instance precision. Only the
// handful of operations the lattice code needs.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 96) { mpfr_init2(v_, prec); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    void set_i128(i128 x) {
        bool neg = x < 0;
        u128 u = neg ? u128(-(x + 1)) + 1 : u128(x);
        mpfr_set_ui(v_, u64(u >> 64), MPFR_RNDN);
        mpfr_mul_2ui(v_, v_, 64, MPFR_RNDN);
        mpfr_add_ui(v_, v_, u64(u), MPFR_RNDN);
        if (neg) mpfr_neg(v_, v_, MPFR_RNDN);
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

// cbrt(2) and cbrt(4) at the requested precision.
inline BigFloat cbrt2(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui(r.raw(), 2, MPFR_RNDN);
    mpfr_cbrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

inline BigFloat cbrt4(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui(r.raw(), 4, MPFR_RNDN);
    mpfr_cbrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace csl
