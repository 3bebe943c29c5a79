#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dhopf {

struct QuadratureSettings {
    double abs_tol = 1e-11;
    int max_subdivisions = 512;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double kGk15Node[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGk15WeightK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGk15WeightG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class T, class F>
void gk15(F&& f, double a, double b, T& kronrod, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T resk = kGk15WeightK[7] * f(mid);
    T resg = kGk15WeightG[3] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGk15Node[i];
        const T pair = f(mid - dx) + f(mid + dx);
        resk += kGk15WeightK[i] * pair;
        if (i % 2 == 1) resg += kGk15WeightG[i / 2] * pair;
    }
    kronrod = resk * half;
    err = std::abs((resk - resg) * half);
}

template <class T, class F>
T adaptive(F&& f, double a, double b, double tol, int depth, int& budget) {
    T val;
    double err;
    gk15<T>(f, a, b, val, err);
    if (err <= tol || depth > 60) {
        if (err > tol) throw std::runtime_error("quadrature tolerance not met");
        return val;
    }
    if (--budget <= 0) throw std::runtime_error("quadrature subdivision budget exhausted");
    const double mid = 0.5 * (a + b);
    return adaptive<T>(f, a, mid, 0.5 * tol, depth + 1, budget) +
           adaptive<T>(f, mid, b, 0.5 * tol, depth + 1, budget);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of a real-valued integrand over [a, b].
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSettings& q = {}) {
    if (a == b) return 0.0;
    int budget = q.max_subdivisions;
    return detail::adaptive<double>(f, a, b, q.abs_tol, 0, budget);
}

/// Adaptive Gauss-Kronrod integration of a complex-valued function along the
/// straight segment from z0 to z1.
template <class F>
std::complex<double> integrate_segment(F&& f, std::complex<double> z0, std::complex<double> z1,
                                       const QuadratureSettings& q = {}) {
    if (z0 == z1) return {0.0, 0.0};
    const std::complex<double> dz = z1 - z0;
    auto g = [&](double t) { return f(z0 + t * dz) * dz; };
    int budget = q.max_subdivisions;
    return detail::adaptive<std::complex<double>>(g, 0.0, 1.0, q.abs_tol, 0, budget);
}

}  // namespace dhopf
