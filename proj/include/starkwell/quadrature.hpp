#ifndef STARKWELL_QUADRATURE_HPP
#define STARKWELL_QUADRATURE_HPP

#include "starkwell/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace starkwell {

// Adaptive Gauss-Kronrod (15-point Kronrod / 7-point Gauss) on a finite
// interval, bisecting the interval with the largest error estimate first.
// T is double or std::complex<double>.

namespace gk {

// QUADPACK dqk15 nodes and weights.
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Segment {
    double a, b;
    T value;
    double error;
};

template <typename T>
Segment<T> rule(const std::function<T(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T res_g = wg[3] * fc;
    T res_k = wgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        double dx = h * xgk[j];
        T fsum = f(c - dx) + f(c + dx);
        res_k += wgk[j] * fsum;
        if (j % 2 == 1) res_g += wg[j / 2] * fsum;
    }
    res_g *= h;
    res_k *= h;
    double err = std::abs(res_k - res_g);
    // quadpack-style sharpening of the raw difference
    double resasc = std::abs(res_k);
    if (resasc > 0.0 && err > 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, res_k, err};
}

} // namespace gk

struct QuadratureResult {
    std::complex<double> value;
    double error;
    int evaluations;
};

template <typename T>
QuadratureResult integrate_adaptive(const std::function<T(double)>& f, double a,
                                    double b, double abs_tol, double rel_tol = 1e-13,
                                    int max_segments = 2000) {
    std::vector<gk::Segment<T>> segs{gk::rule<T>(f, a, b)};
    int evals = 15;
    while ((int)segs.size() < max_segments) {
        T total{};
        double err = 0.0;
        for (const auto& s : segs) {
            total += s.value;
            err += s.error;
        }
        if (err <= std::max(abs_tol, rel_tol * std::abs(total)))
            return {total, err, evals};
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const auto& l, const auto& r) { return l.error < r.error; });
        double mid = 0.5 * (worst->a + worst->b);
        if (mid <= worst->a || mid >= worst->b) break;  // interval exhausted
        gk::Segment<T> left = gk::rule<T>(f, worst->a, mid);
        gk::Segment<T> right = gk::rule<T>(f, mid, worst->b);
        *worst = left;
        segs.push_back(right);
        evals += 30;
    }
    T total{};
    double err = 0.0;
    for (const auto& s : segs) {
        total += s.value;
        err += s.error;
    }
    if (err > std::max(abs_tol, rel_tol * std::abs(total)))
        throw NumericalError("quadrature did not reach requested tolerance (err = " +
                             std::to_string(err) + ")");
    return {total, err, evals};
}

} // namespace starkwell

#endif
