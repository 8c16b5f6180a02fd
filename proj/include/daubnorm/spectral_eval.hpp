#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace daubnorm {

/// Truncation and quadrature controls shared by every spectral evaluation.
struct EvalConfig {
    double product_tol = 1e-12;  // relative truncation tolerance of the infinite product
    int min_depth = 16;
    int max_depth = 64;
    double quad_tol = 1e-10;     // absolute tolerance handed to the adaptive integrator
    int quad_max_depth = 24;     // bisection levels per panel

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// The omitted tail of the product could not be pushed below product_tol
/// within max_depth factors. bound() is the relative error actually reached.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double bound)
        : std::runtime_error(what), bound_(bound) {}
    double bound() const noexcept { return bound_; }

private:
    double bound_;
};

/// phi-hat(w) = (2 pi)^{-1/2} prod_{l>=1} H(w 2^{-l}), from the taps.
std::complex<double> scaling_hat(int m, double omega, const EvalConfig& cfg = {});

/// psi-hat(w) = e^{-iw/2} conj(H(w/2 + pi)) phi-hat(w/2).
std::complex<double> wavelet_hat(int m, double omega, const EvalConfig& cfg = {});

/// |psi-hat(w)|^2 from the closed magnitude formula only; no taps involved.
double wavelet_hat_abs2(int m, double omega, const EvalConfig& cfg = {});

/// |phi-hat(w)|^2 from the closed magnitude formula.
double scaling_hat_abs2(int m, double omega, const EvalConfig& cfg = {});

/// Number of product factors used at frequency omega (after the guard check).
int product_depth(int m, double omega, const EvalConfig& cfg);

/// (2 pi)^{-1/2} on [-2pi, -pi] U [pi, 2pi] (closed), zero elsewhere.
double ideal_band_indicator(double omega);

/// Power-law envelope |psi-hat(w)| <= C_tilde w^{-exponent} fitted on [lo, hi].
/// Valid for every order including m = 1.
struct EnvelopeFit {
    double C_tilde;
    double exponent;
    double omega_lo;
    double omega_hi;
    double residual;
};

/// The decay model C_tilde |w|^{-c log m}; c uses the natural logarithm.
struct DecayFit {
    double C_tilde;
    double c;
    double omega_lo;
    double omega_hi;
    double residual;
    int m;

    /// c log m, the total power-law exponent.
    double exponent() const;
    /// c re-expressed for a different logarithm base in c log_b m.
    double c_for_log_base(double base) const;
};

/// Least-squares fit of log block maxima (8 log-spaced blocks) of |psi-hat|
/// against log w; C_tilde is inflated until the envelope dominates every sample.
EnvelopeFit fit_envelope(int m, double omega_lo, double omega_hi, int samples,
                         const EvalConfig& cfg = {});

/// fit_envelope re-parametrised as C_tilde w^{-c log m}.
/// Throws std::domain_error for m = 1 and std::runtime_error if c <= 0.
DecayFit estimate_decay(int m, double omega_lo, double omega_hi, int samples,
                        const EvalConfig& cfg = {});

}  // namespace daubnorm
