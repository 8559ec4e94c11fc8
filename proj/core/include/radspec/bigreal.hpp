#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace radspec {

/// Raised when a kernel operation cannot produce a meaningful result
/// (NaN intermediate, iteration cap, failed factorization, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IterationLimit : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Process-wide working precision in bits. Minimum 64, default 256.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Arbitrary-precision binary floating-point number at the process-wide
/// working precision. All operations round to nearest (ties to even).
/// A NaN result raises NumericalError instead of propagating.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, precision_bits()); mpfr_set_zero(v_, 1); }
    BigReal(int x) : BigReal(static_cast<long>(x)) {}
    BigReal(long x) { mpfr_init2(v_, precision_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit BigReal(double x) {
        mpfr_init2(v_, precision_bits());
        mpfr_set_d(v_, x, MPFR_RNDN);
        check("construction from double");
    }
    explicit BigReal(const std::string& decimal) {
        mpfr_init2(v_, precision_bits());
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigReal: cannot parse '" + decimal + "'");
    }

    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator/=(const BigReal& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        check("division");
        return *this;
    }

    friend BigReal operator+(BigReal a, const BigReal& b) { a += b; return a; }
    friend BigReal operator-(BigReal a, const BigReal& b) { a -= b; return a; }
    friend BigReal operator*(BigReal a, const BigReal& b) { a *= b; return a; }
    friend BigReal operator/(BigReal a, const BigReal& b) { a /= b; return a; }
    friend BigReal operator-(BigReal a) { mpfr_neg(a.v_, a.v_, MPFR_RNDN); return a; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static BigReal pi() {
        BigReal r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

private:
    static int cmp(const BigReal& a, const BigReal& b) {
        if (mpfr_nan_p(a.v_) || mpfr_nan_p(b.v_))
            throw NumericalError("BigReal: comparison with NaN");
        return mpfr_cmp(a.v_, b.v_);
    }
    void check(const char* op) const {
        if (mpfr_nan_p(v_))
            throw NumericalError(std::string("BigReal: NaN from ") + op);
    }

    mpfr_t v_;

    friend BigReal sqrt(const BigReal&);
    friend BigReal abs(BigReal);
    friend BigReal exp(const BigReal&);
    friend BigReal log(const BigReal&);
    friend BigReal log2(const BigReal&);
    friend BigReal log10(const BigReal&);
    friend BigReal tgamma(const BigReal&);
    friend BigReal pow2(long);
    friend BigReal pow(const BigReal&, const BigReal&);
    friend BigReal max(const BigReal&, const BigReal&);
    friend BigReal min(const BigReal&, const BigReal&);
};

inline BigReal sqrt(const BigReal& x) {
    BigReal r;
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    r.check("sqrt of negative value");
    return r;
}

inline BigReal abs(BigReal x) {
    mpfr_abs(x.v_, x.v_, MPFR_RNDN);
    return x;
}

inline BigReal exp(const BigReal& x) {
    BigReal r;
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    r.check("exp");
    return r;
}

inline BigReal log(const BigReal& x) {
    BigReal r;
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    r.check("log of non-positive value");
    return r;
}

inline BigReal log2(const BigReal& x) {
    BigReal r;
    mpfr_log2(r.v_, x.v_, MPFR_RNDN);
    r.check("log2 of non-positive value");
    return r;
}

inline BigReal log10(const BigReal& x) {
    BigReal r;
    mpfr_log10(r.v_, x.v_, MPFR_RNDN);
    r.check("log10 of non-positive value");
    return r;
}

/// Gamma function. Exact recursion at half-integer arguments is a special
/// case of the correctly rounded evaluation used here.
inline BigReal tgamma(const BigReal& x) {
    BigReal r;
    mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
    r.check("gamma at a non-positive integer");
    return r;
}

inline BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r;
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    r.check("pow");
    return r;
}

/// 2^e, exact.
inline BigReal pow2(long e) {
    BigReal r(1L);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

inline BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
inline BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }

}  // namespace radspec
