#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <type_traits>

namespace daubnorm {

/// A numeric value with an absolute error estimate and the number of
/// integrand evaluations spent on it.
struct QuadResult {
    double value = 0;
    double abs_error = 0;
    std::size_t evaluations = 0;
};

namespace quad_detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15 nodes).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class T, class F>
struct Adaptive {
    F& f;
    double tol_density;
    int max_depth;
    T value{};
    double error = 0;
    std::size_t evaluations = 0;

    void rule(double a, double b, T& kronrod, T& gauss, double& scale) {
        const double center = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        const T fc = f(center);
        kronrod = fc * kKronrodWeights[7];
        gauss = fc * kGaussWeights[3];
        scale = magnitude(fc) * kKronrodWeights[7];
        for (int i = 0; i < 7; ++i) {
            const double dx = half * kKronrodNodes[static_cast<std::size_t>(i)];
            const T f1 = f(center - dx);
            const T f2 = f(center + dx);
            kronrod += (f1 + f2) * kKronrodWeights[static_cast<std::size_t>(i)];
            scale += (magnitude(f1) + magnitude(f2)) * kKronrodWeights[static_cast<std::size_t>(i)];
            if (i % 2 == 1) gauss += (f1 + f2) * kGaussWeights[static_cast<std::size_t>(i / 2)];
        }
        evaluations += 15;
        kronrod *= half;
        gauss *= half;
        scale *= std::abs(half);
    }

    // Local acceptance test: a panel is kept once its estimate fits its share
    // of the tolerance, so a tighter tolerance only ever refines the tree.
    void recurse(double a, double b, int depth) {
        T kronrod{};
        T gauss{};
        double scale = 0;
        rule(a, b, kronrod, gauss, scale);
        const double est = magnitude(kronrod - gauss);
        const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * scale;
        if (est <= std::max(tol_density * (b - a), roundoff) || depth >= max_depth) {
            value += kronrod;
            error += std::max(est, roundoff);
            return;
        }
        const double mid = 0.5 * (a + b);
        recurse(a, mid, depth + 1);
        recurse(mid, b, depth + 1);
    }
};

}  // namespace quad_detail

/// Adaptive Gauss-Kronrod (7/15) bisection on [a, b]. The error estimate of
/// each accepted panel is |K15 - G7|, floored at the roundoff level.
template <class T = double, class F>
T integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth, double& abs_error,
                     std::size_t& evaluations, double reference_width = 0) {
    const double width = reference_width > 0 ? reference_width : (b - a);
    quad_detail::Adaptive<T, std::remove_reference_t<F>> engine{f, abs_tol / width, max_depth};
    if (b > a) engine.recurse(a, b, 0);
    abs_error += engine.error;
    evaluations += engine.evaluations;
    return engine.value;
}

template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol, int max_depth = 24) {
    QuadResult r;
    r.value = integrate_adaptive<double>(f, a, b, abs_tol, max_depth, r.abs_error, r.evaluations);
    return r;
}

}  // namespace daubnorm
