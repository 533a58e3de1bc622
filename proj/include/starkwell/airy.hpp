#ifndef STARKWELL_AIRY_HPP
#define STARKWELL_AIRY_HPP

#include <complex>
#include <utility>
#include <vector>

namespace starkwell {

using Complex = std::complex<double>;

// A complex number stored as mant * exp(log_scale). Lets products like
// Ai(-rho_-) * Ci+(-rho_+) be formed even when one factor alone would
// overflow the double exponent range.
struct ScaledComplex {
    Complex mant{0.0, 0.0};
    double log_scale = 0.0;

    static ScaledComplex from(Complex v) { return {v, 0.0}; }
    bool is_zero() const { return mant == Complex(0.0, 0.0); }
    double log_abs() const;
    // Plain complex value. Throws OverflowError past the exponent range;
    // quietly underflows to zero on the other side.
    Complex value() const;
    ScaledComplex& normalize();
};

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex operator*(const ScaledComplex& a, Complex b);
ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b);
ScaledComplex operator-(const ScaledComplex& a);

// Ai, Ai', Bi, Bi' at a single point, plus an absolute error estimate for
// the dominant value. Invariant: |ai*bip - aip*bi - 1/pi| stays within
// 10 * est_error * max(1, sqrt|z|).
struct AiryValues {
    Complex z;
    Complex ai, aip, bi, bip;
    double est_error = 0.0;
};

// Same content in scaled form; est_rel is relative to the dominant value.
struct ScaledAiry {
    Complex z;
    ScaledComplex ai, aip, bi, bip;
    double est_rel = 0.0;
};

// n-th real zero a_n of Ai, ordered by increasing |a_n| (all negative).
struct AiryZero {
    int n = 0;
    double a_n = 0.0;
};

// Full complex plane evaluation: double-double Maclaurin series for
// |z| <= 9, one-exponential asymptotic series plus connection-formula
// rotations beyond. Throws OverflowError when a value exceeds ~exp(700).
AiryValues airy_eval(Complex z);

// Overflow-safe variant; never throws for finite z.
ScaledAiry airy_eval_scaled(Complex z);

// Ci+(z) = Bi(z) + i Ai(z) and its derivative, computed through the
// rotation Ci+(z) = 2 exp(i pi/6) Ai(z exp(2i pi/3)) which stays
// cancellation-free near the negative real axis.
std::pair<Complex, Complex> ci_plus(Complex z);
std::pair<ScaledComplex, ScaledComplex> ci_plus_scaled(Complex z);

// First `count` zeros of Ai, each with |Ai(a_n)| <= 1e-12.
std::vector<AiryZero> airy_zeros(int count);

} // namespace starkwell

#endif
