#include "starkwell/airy.hpp"
#include "starkwell/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace starkwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPiThirds = 2.0 * kPi / 3.0;
// Guard band around the Stokes lines arg z = +-2pi/3: inside it the direct
// expansion is replaced by the rotation identity from the adjacent sector.
constexpr double kStokesGuard = 0.1;
// Power series / asymptotics crossover. With double-double accumulation the
// series keeps full relative accuracy out to here, and at |z| = 9 the
// optimally truncated asymptotic series bottoms out near machine epsilon.
constexpr double kSeriesRadius = 9.0;
constexpr double kLogOverflow = 700.0;

// ---------------------------------------------------------------------
// Double-double arithmetic, used only to accumulate the Maclaurin series.
// The alternating series loses ~e^{(4/3)|z|^{3/2}} of relative accuracy to
// cancellation; two doubles recover it for |z| <= 9.
// ---------------------------------------------------------------------
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, {-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double d) {
    double q1 = a.hi / d;
    DD p = two_prod(q1, d);
    double q2 = ((a.hi - p.hi) - p.lo + a.lo) / d;
    return quick_two_sum(q1, q2);
}

inline DD dd_mul_d(DD a, double d) {
    DD p = two_prod(a.hi, d);
    p.lo += a.lo * d;
    return quick_two_sum(p.hi, p.lo);
}

struct CDD {
    DD re, im;
};

inline CDD cdd_from(Complex z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline CDD cdd_mul(CDD a, CDD b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline CDD cdd_div_d(CDD a, double d) { return {dd_div_d(a.re, d), dd_div_d(a.im, d)}; }

inline CDD cdd_mul_d(CDD a, double d) { return {dd_mul_d(a.re, d), dd_mul_d(a.im, d)}; }

inline double cdd_mod(CDD a) { return std::hypot(a.re.hi, a.im.hi); }

inline Complex cdd_value(CDD a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

// Ai(0), -Ai'(0) and sqrt(3) split to double-double precision.
constexpr DD kC1 = {0.3550280538878172, 2.05233632436212e-17};
constexpr DD kC2 = {0.2588194037928068, -2.522243111610832e-17};
constexpr DD kSqrt3 = {1.7320508075688772, 1.0035084221806903e-16};

struct SeriesResult {
    Complex ai, aip, bi, bip;
    double est_rel;
};

// Maclaurin series of Ai, Bi and derivatives around z = 0.
SeriesResult airy_series(Complex z) {
    CDD zc = cdd_from(z);
    CDD z3 = cdd_mul(cdd_mul(zc, zc), zc);

    // f  = sum a_k z^{3k},        a_0 = 1,  a_k = a_{k-1}/((3k-1)(3k))
    // f' = sum a_k 3k z^{3k-1}
    // g  = sum b_k z^{3k+1},      b_0 = 1,  b_k = b_{k-1}/((3k)(3k+1))
    // g' = sum b_k (3k+1) z^{3k}
    CDD t = cdd_from(1.0);                                   // f terms
    CDD u = cdd_div_d(cdd_mul(zc, zc), 2.0);                 // f' terms, k = 1
    CDD v = zc;                                              // g terms
    CDD w = cdd_from(1.0);                                   // g' terms

    CDD f = t, fp = u, g = v, gp = w;
    double max_term = 1.0;
    for (int k = 0; k < 200; ++k) {
        double k3 = 3.0 * k;
        t = cdd_div_d(cdd_mul(t, z3), (k3 + 2.0) * (k3 + 3.0));
        v = cdd_div_d(cdd_mul(v, z3), (k3 + 3.0) * (k3 + 4.0));
        w = cdd_div_d(cdd_mul(w, z3), (k3 + 1.0) * (k3 + 3.0));
        if (k >= 1) {
            // u_{k+1} = u_k z^3 (k+1) / (k (3k+2)(3k+3)); both factors exact.
            u = cdd_div_d(cdd_mul_d(cdd_mul(u, z3), k + 1.0),
                          k * (k3 + 2.0) * (k3 + 3.0));
        }
        f = cdd_add(f, t);
        g = cdd_add(g, v);
        gp = cdd_add(gp, w);
        if (k >= 1) fp = cdd_add(fp, u);
        double m = std::max(std::max(cdd_mod(t), cdd_mod(u)),
                            std::max(cdd_mod(v), cdd_mod(w)));
        max_term = std::max(max_term, m);
        if (m < 1e-36 * max_term) break;
    }

    auto combine = [](CDD a, CDD b, DD ca, DD cb, bool diff) {
        CDD ra = {dd_mul(ca, a.re), dd_mul(ca, a.im)};
        CDD rb = {dd_mul(cb, b.re), dd_mul(cb, b.im)};
        if (diff) rb = {{-rb.re.hi, -rb.re.lo}, {-rb.im.hi, -rb.im.lo}};
        return cdd_add(ra, rb);
    };

    SeriesResult r;
    r.ai = cdd_value(combine(f, g, kC1, kC2, true));
    r.aip = cdd_value(combine(fp, gp, kC1, kC2, true));
    CDD bi = combine(f, g, kC1, kC2, false);
    CDD bip = combine(fp, gp, kC1, kC2, false);
    r.bi = cdd_value({dd_mul(kSqrt3, bi.re), dd_mul(kSqrt3, bi.im)});
    r.bip = cdd_value({dd_mul(kSqrt3, bip.re), dd_mul(kSqrt3, bip.im)});

    double dominant = std::max(std::max(std::abs(r.ai), std::abs(r.bi)),
                               std::max(std::abs(r.aip), std::abs(r.bip)));
    // Rounding to double dominates; double-double residue is ~1e-32*max_term.
    r.est_rel = 4e-16 + 1e-32 * max_term / std::max(dominant, 1e-300);
    return r;
}

// One-exponential asymptotic expansion of Ai, Ai' with the factor
// exp(-zeta) carried in log form. Accurate for |z| >= kSeriesRadius and
// |arg z| up to slightly beyond the Stokes line at 2pi/3.
struct AsymResult {
    ScaledComplex ai, aip;
    double est_rel;
};

AsymResult airy_asymptotic(Complex z) {
    Complex s = std::sqrt(z);
    Complex zeta = (2.0 / 3.0) * z * s;
    Complex z14 = std::sqrt(s);
    Complex inv = 1.0 / zeta;

    Complex sum_a = 1.0, sum_ap = 1.0;
    Complex pow = 1.0;
    double uk = 1.0;
    double prev = 1.0;
    double trunc = 1.0;
    for (int k = 1; k <= 46; ++k) {
        uk *= (6.0 * k - 1.0) * (6.0 * k - 5.0) / (72.0 * k);
        double vk = uk * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        pow *= -inv;
        double mag = uk * std::abs(pow);
        trunc = mag;
        if (mag > prev) break;  // divergent tail reached
        sum_a += uk * pow;
        sum_ap += vk * pow;
        prev = mag;
        if (mag < 1e-18) break;
    }

    const double inv_2sqrtpi = 0.28209479177387814;  // 1/(2 sqrt(pi))
    Complex phase = std::exp(Complex(0.0, -zeta.imag()));
    AsymResult r;
    r.ai = {inv_2sqrtpi * phase * sum_a / z14, -zeta.real()};
    r.aip = {-inv_2sqrtpi * phase * sum_ap * z14, -zeta.real()};
    r.est_rel = trunc + 4e-16;
    return r;
}

struct AiPair {
    ScaledComplex ai, aip;
    double est_rel;
};

const Complex kOmega{-0.5, 0.8660254037844386};     // exp(+2i pi/3)
const Complex kOmegaBar{-0.5, -0.8660254037844386}; // exp(-2i pi/3)

// Ai, Ai' anywhere in the plane for |z| >= kSeriesRadius: direct expansion
// in |arg z| <= 2pi/3 - guard, connection formula
//   Ai(z) = -omega Ai(omega z) - conj(omega) Ai(conj(omega) z)
// in the remaining sector (both rotated arguments land in the direct one).
AiPair ai_large(Complex z) {
    double th = std::arg(z);
    if (std::abs(th) <= kTwoPiThirds - kStokesGuard) {
        AsymResult a = airy_asymptotic(z);
        return {a.ai, a.aip, a.est_rel};
    }
    AsymResult a1 = airy_asymptotic(z * kOmega);
    AsymResult a2 = airy_asymptotic(z * kOmegaBar);
    ScaledComplex ai = (-(a1.ai * kOmega)) + (-(a2.ai * kOmegaBar));
    ScaledComplex aip = (-(a1.aip * kOmegaBar)) + (-(a2.aip * kOmega));
    return {ai.normalize(), aip.normalize(), std::max(a1.est_rel, a2.est_rel)};
}

} // namespace

double ScaledComplex::log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mant)) + log_scale;
}

Complex ScaledComplex::value() const {
    if (is_zero()) return {0.0, 0.0};
    double la = log_abs();
    if (la > kLogOverflow) {
        throw OverflowError("airy: value exceeds double range (log|v| = " +
                            std::to_string(la) + ")");
    }
    if (la < -745.0) return {0.0, 0.0};
    if (log_scale > 600.0 || log_scale < -600.0) {
        return std::polar(std::exp(la), std::arg(mant));
    }
    return mant * std::exp(log_scale);
}

ScaledComplex& ScaledComplex::normalize() {
    if (is_zero()) {
        log_scale = 0.0;
        return *this;
    }
    double m = std::abs(mant);
    if (m > 1e8 || m < 1e-8) {
        double l = std::log(m);
        mant /= std::exp(l);
        log_scale += l;
    }
    return *this;
}

ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    return {a.mant * b.mant, a.log_scale + b.log_scale};
}

ScaledComplex operator*(const ScaledComplex& a, Complex b) {
    return {a.mant * b, a.log_scale};
}

ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double e = std::max(a.log_scale, b.log_scale);
    double da = a.log_scale - e, db = b.log_scale - e;
    Complex m = (da > -745.0 ? a.mant * std::exp(da) : Complex{0.0, 0.0}) +
                (db > -745.0 ? b.mant * std::exp(db) : Complex{0.0, 0.0});
    return {m, e};
}

ScaledComplex operator-(const ScaledComplex& a) { return {-a.mant, a.log_scale}; }

ScaledAiry airy_eval_scaled(Complex z) {
    ScaledAiry out;
    out.z = z;
    if (std::abs(z) <= kSeriesRadius) {
        SeriesResult s = airy_series(z);
        out.ai = ScaledComplex::from(s.ai);
        out.aip = ScaledComplex::from(s.aip);
        out.bi = ScaledComplex::from(s.bi);
        out.bip = ScaledComplex::from(s.bip);
        out.est_rel = s.est_rel;
        return out;
    }

    AiPair a = ai_large(z);
    out.ai = a.ai;
    out.aip = a.aip;

    // Bi from whichever of
    //   Bi = 2 exp(+i pi/6) Ai(omega z)      - i Ai(z)   [via Ci+]
    //   Bi = 2 exp(-i pi/6) Ai(conj(omega) z) + i Ai(z)  [via Ci-]
    // keeps the rotated argument inside the directly evaluated sector.
    double th = std::arg(z);
    double arg_p = std::remainder(th + kTwoPiThirds, 2.0 * kPi);
    double arg_m = std::remainder(th - kTwoPiThirds, 2.0 * kPi);
    bool use_plus = std::abs(arg_p) <= std::abs(arg_m);
    Complex w = use_plus ? z * kOmega : z * kOmegaBar;
    AsymResult rot = airy_asymptotic(w);
    const Complex i{0.0, 1.0};
    ScaledComplex bi, bip;
    if (use_plus) {
        const Complex e16 = std::polar(2.0, kPi / 6.0);
        const Complex e56 = std::polar(2.0, 5.0 * kPi / 6.0);
        bi = rot.ai * e16 + out.ai * (-i);
        bip = rot.aip * e56 + out.aip * (-i);
    } else {
        const Complex e16 = std::polar(2.0, -kPi / 6.0);
        const Complex e56 = std::polar(2.0, -5.0 * kPi / 6.0);
        bi = rot.ai * e16 + out.ai * i;
        bip = rot.aip * e56 + out.aip * i;
    }
    out.bi = bi.normalize();
    out.bip = bip.normalize();
    out.est_rel = std::max(a.est_rel, rot.est_rel);

    if (z.imag() == 0.0) {
        // Ai and Bi are real on the real axis; rounding residue only.
        out.ai.mant.imag(0.0);
        out.aip.mant.imag(0.0);
        out.bi.mant.imag(0.0);
        out.bip.mant.imag(0.0);
    }
    return out;
}

AiryValues airy_eval(Complex z) {
    ScaledAiry s = airy_eval_scaled(z);
    AiryValues v;
    v.z = z;
    v.ai = s.ai.value();
    v.aip = s.aip.value();
    v.bi = s.bi.value();
    v.bip = s.bip.value();
    double dominant = std::max(std::max(std::abs(v.ai), std::abs(v.bi)),
                               std::max(std::abs(v.aip), std::abs(v.bip)));
    v.est_error = s.est_rel * std::max(1.0, dominant);
    return v;
}

std::pair<Complex, Complex> ci_plus(Complex z) {
    auto [c, cp] = ci_plus_scaled(z);
    return {c.value(), cp.value()};
}

std::pair<ScaledComplex, ScaledComplex> ci_plus_scaled(Complex z) {
    Complex w = z * kOmega;
    ScaledComplex ai, aip;
    if (std::abs(w) <= kSeriesRadius) {
        SeriesResult s = airy_series(w);
        ai = ScaledComplex::from(s.ai);
        aip = ScaledComplex::from(s.aip);
    } else {
        AiPair p = ai_large(w);
        ai = p.ai;
        aip = p.aip;
    }
    const Complex e16 = std::polar(2.0, kPi / 6.0);
    const Complex e56 = std::polar(2.0, 5.0 * kPi / 6.0);
    return {ai * e16, aip * e56};
}

std::vector<AiryZero> airy_zeros(int count) {
    if (count < 1) throw ConfigError("airy_zeros: count must be >= 1");
    std::vector<AiryZero> zeros;
    zeros.reserve(count);
    for (int n = 1; n <= count; ++n) {
        double t = 3.0 * kPi * (4.0 * n - 1.0) / 8.0;
        double a = -std::pow(t, 2.0 / 3.0);
        for (int it = 0; it < 60; ++it) {
            AiryValues v = airy_eval(Complex(a, 0.0));
            double step = v.ai.real() / v.aip.real();
            a -= step;
            if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(a))) break;
        }
        zeros.push_back({n, a});
    }
    return zeros;
}

} // namespace starkwell
