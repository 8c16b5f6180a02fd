#pragma once

#include "daubnorm/norms.hpp"

#include <complex>
#include <functional>
#include <optional>

namespace daubnorm {

/// Gaussian test function f(x) = amplitude exp(-(x - center)^2 / (2 sigma^2)),
/// with unitary transform f-hat(w) = amplitude sigma exp(-sigma^2 w^2 / 2) e^{-i w center}.
struct GaussianTest {
    double sigma = 1.0;
    double center = 0.0;
    double amplitude = 1.0;

    std::complex<double> transform(double omega) const;
    double transform_abs(double omega) const;
    /// |w| beyond which |f-hat| is below 1e-19 of its peak.
    double frequency_cutoff() const;
};

/// || |w|^k f-hat ||_q in closed form (Gamma function).
double gaussian_weighted_norm_exact(const GaussianTest& f, int k, double q);

/// The same norm by adaptive quadrature.
QuadResult gaussian_weighted_norm(const GaussianTest& f, int k, double q, const EvalConfig& cfg = {});

/// Gaussian scaled into the unit ball of the class, || (iw)^k f-hat ||_{p'} = 1
/// with 1/p + 1/p' = 1.
GaussianTest make_class_gaussian(double sigma, double center, int k, double p);

/// A complex quadrature value with its error estimate.
struct ComplexQuad {
    std::complex<double> value;
    double abs_error = 0;
    std::size_t evaluations = 0;
};

/// <g, psi_{j,nu}> = int g-hat(w) conj(psi-hat_{j,nu}(w)) dw over |w| <= omega_cutoff, where
/// psi-hat_{j,nu}(w) = 2^{-j/2} e^{-i w 2^{-j} nu} psi-hat(2^{-j} w).
/// oscillation is the extra phase rate (in w) carried by g-hat, used to size panels.
ComplexQuad frequency_inner_product(const std::function<std::complex<double>(double)>& g_hat,
                                    double omega_cutoff, double oscillation, int m, int j, int nu,
                                    const EvalConfig& cfg = {});

/// <f, psi_{j,nu}> for the Gaussian test function (Parseval route).
/// Requires j in [-6, 10] and |nu| <= 64.
ComplexQuad wavelet_coefficient(const GaussianTest& f, int m, int j, int nu, const EvalConfig& cfg = {});

/// 2^{-j(k + 1/2 - 1/p)}: the factor by which the weighted norm of psi-hat_{j,nu}
/// differs from that of psi-hat.
double dyadic_factor(int k, double p, int j);

/// Right-hand side C_{k,p} 2^{-j(k+1/2-1/p)} ||psi-hat||_p ||(iw)^k f-hat||_{p'}.
struct BernsteinRhs {
    double value;
    double abs_error;
    double best_constant;
    double dyadic;
    double psi_norm;
    double f_norm;
};

BernsteinRhs bernstein_rhs(int m, int k, double p, int j, const GaussianTest& f, const EvalConfig& cfg = {},
                           std::optional<TailDecay> decay = std::nullopt);

}  // namespace daubnorm
