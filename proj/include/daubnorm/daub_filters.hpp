#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace daubnorm {

/// Largest order construct_filter accepts. Root finding beyond this in
/// double precision does not reach the reconstruction tolerance.
inline constexpr int kMaxFilterOrder = 16;

/// Raised when spectral factorization cannot produce taps that satisfy the
/// filter invariants; carries the worst residual observed.
class FilterConstructionError : public std::runtime_error {
public:
    FilterConstructionError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Daubechies filter of order m: 2m real taps, H(w) = 2^{-1/2} sum h_l e^{i l w}.
/// Immutable once built; obtain one through construct_filter.
class FilterSpec {
public:
    int order() const noexcept { return m_; }
    const std::vector<double>& taps() const noexcept { return taps_; }

    /// 2^{-1/2} sum_l l h_l, the slope of arg H at the origin.
    double phase_slope() const noexcept { return phase_slope_; }

private:
    friend FilterSpec construct_filter(int m);
    FilterSpec(int m, std::vector<double> taps);

    int m_;
    std::vector<double> taps_;
    double phase_slope_;
};

/// P_{m-1}(x) = sum_{k<m} C(m-1+k, k) x^k, Horner form.
double eval_P(int m, double x);

/// |H_m(w)|^2 = cos^{2m}(w/2) P_{m-1}(sin^2(w/2)).
double magnitude_squared_H(int m, double omega);

/// |H_m(w)|^2 through the integral identity 1 - c_m int_0^w sin^{2m-1} t dt,
/// reduced to [0, pi] by periodicity and evenness.
double magnitude_squared_H_integral(int m, double omega);

/// int_0^x sin^n t dt for odd n >= 1, by the reduction recurrence.
double sin_power_integral(int n, double x);

/// Minimum-phase Daubechies filter by spectral factorization.
/// Taps follow the classical ordering (h_0 = (1+sqrt3)/(4 sqrt2) for m = 2):
/// every zero of sum_l h_l z^{-l} lies in the closed unit disc.
/// Throws std::domain_error outside 1..kMaxFilterOrder and
/// FilterConstructionError if any invariant residual is too large.
FilterSpec construct_filter(int m);

/// Cached filter for order m (thread-safe, built on first use).
const FilterSpec& filter_for_order(int m);

/// H(w) from the taps.
std::complex<double> eval_H(const FilterSpec& filter, double omega);

/// Invariant residuals of a tap set; the construction check uses these.
struct FilterResiduals {
    double tap_sum;          // |sum h - sqrt 2|
    double orthonormality;   // max_n |sum h_l h_{l+2n} - delta_n|
    double reconstruction;   // max over grid of ||H|^2 - magnitude_squared_H|
};

FilterResiduals filter_residuals(int m, const std::vector<double>& taps, int grid_points = 2048);

}  // namespace daubnorm
