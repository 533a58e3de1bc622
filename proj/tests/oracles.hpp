// Test-side oracles, independent of the library implementation paths.
#ifndef STARKWELL_TEST_ORACLES_HPP
#define STARKWELL_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// Plain-double Maclaurin series for Ai, Bi and derivatives. Trustworthy to
// ~1e-12 relative for |z| <= 4 (cancellation grows like e^{(4/3)|z|^{3/2}}).
struct AirySeries {
    Complex ai, aip, bi, bip;
};

inline AirySeries airy_series_ref(Complex z) {
    const double c1 = 0.3550280538878172;  // Ai(0)
    const double c2 = 0.2588194037928068;  // -Ai'(0)
    Complex z3 = z * z * z;
    Complex t = 1.0, u = z * z / 2.0, v = z, w = 1.0;
    Complex f = t, fp = u, g = v, gp = w;
    for (int k = 0; k < 80; ++k) {
        double k3 = 3.0 * k;
        t *= z3 / ((k3 + 2.0) * (k3 + 3.0));
        v *= z3 / ((k3 + 3.0) * (k3 + 4.0));
        w *= z3 / ((k3 + 1.0) * (k3 + 3.0));
        if (k >= 1) u *= z3 * (k + 1.0) / (k * (k3 + 2.0) * (k3 + 3.0));
        f += t;
        g += v;
        gp += w;
        if (k >= 1) fp += u;
        if (std::abs(t) + std::abs(v) < 1e-25) break;
    }
    const double s3 = 1.7320508075688772;
    return {c1 * f - c2 * g, c1 * fp - c2 * gp, s3 * (c1 * f + c2 * g),
            s3 * (c1 * fp + c2 * gp)};
}

// Low-discrepancy points in the disk |z| <= R (additive recurrence on the
// square, rejection onto the disk). Deterministic.
inline std::vector<Complex> disk_points(int count, double radius) {
    std::vector<Complex> pts;
    pts.reserve(count);
    const double a1 = 0.7548776662466927;  // 1/plastic
    const double a2 = 0.5698402909980532;  // 1/plastic^2
    double x = 0.5, y = 0.5;
    while ((int)pts.size() < count) {
        x += a1;
        x -= std::floor(x);
        y += a2;
        y -= std::floor(y);
        Complex z(radius * (2.0 * x - 1.0), radius * (2.0 * y - 1.0));
        if (std::abs(z) <= radius) pts.push_back(z);
    }
    return pts;
}

// Adaptive Simpson, independent of the library's Gauss-Kronrod.
inline Complex simpson_rec(const std::function<Complex(double)>& f, double a,
                           double b, Complex fa, Complex fm, Complex fb,
                           Complex whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    Complex fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
    Complex left = (m - a) / 6.0 * (fa + 4.0 * fl + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, fl, fm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, fr, fb, right, tol / 2.0, depth - 1);
}

inline Complex simpson(const std::function<Complex(double)>& f, double a,
                       double b, double tol = 1e-11, int depth = 48) {
    Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

} // namespace oracle

#endif
