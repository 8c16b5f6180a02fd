#include "daubnorm/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace daubnorm {

namespace {

constexpr double kPi = std::numbers::pi;
// exp(-x^2/2) < 1e-19 once x > 9.4
constexpr double kGaussianReach = 9.4;

double conjugate_exponent(double p) { return p / (p - 1.0); }

}  // namespace

std::complex<double> GaussianTest::transform(double omega) const {
    return transform_abs(omega) * std::polar(1.0, -omega * center);
}

double GaussianTest::transform_abs(double omega) const {
    const double s = sigma * omega;
    return std::abs(amplitude) * sigma * std::exp(-0.5 * s * s);
}

double GaussianTest::frequency_cutoff() const { return kGaussianReach / sigma; }

double gaussian_weighted_norm_exact(const GaussianTest& f, int k, double q) {
    // int |w|^{kq} (A sigma)^q e^{-q sigma^2 w^2 / 2} dw
    //   = (A sigma)^q Gamma((kq+1)/2) (2 / (q sigma^2))^{(kq+1)/2}
    const double a = (k * q + 1.0) / 2.0;
    const double log_int = q * std::log(std::abs(f.amplitude) * f.sigma) + std::lgamma(a) +
                           a * std::log(2.0 / (q * f.sigma * f.sigma));
    return std::exp(log_int / q);
}

QuadResult gaussian_weighted_norm(const GaussianTest& f, int k, double q, const EvalConfig& cfg) {
    const double reach = f.frequency_cutoff();
    auto integrand = [&](double w) { return std::pow(w, k * q) * std::pow(f.transform_abs(w), q); };
    QuadResult r;
    const int panels = 16;
    double half = 0;
    for (int i = 0; i < panels; ++i) {
        half += integrate_adaptive<double>(integrand, reach * i / panels, reach * (i + 1) / panels,
                                           cfg.quad_tol / 2.0, cfg.quad_max_depth, r.abs_error,
                                           r.evaluations, reach);
    }
    const double total = 2.0 * half;
    const double total_err = 2.0 * r.abs_error;
    r.value = std::pow(total, 1.0 / q);
    r.abs_error = r.value - std::pow(std::max(total - total_err, 0.0), 1.0 / q);
    return r;
}

GaussianTest make_class_gaussian(double sigma, double center, int k, double p) {
    if (!(sigma > 0)) throw std::domain_error("make_class_gaussian: sigma must be positive");
    if (!(p > 1)) throw std::domain_error("make_class_gaussian: p must exceed 1");
    GaussianTest f{sigma, center, 1.0};
    f.amplitude = 1.0 / gaussian_weighted_norm_exact(f, k, conjugate_exponent(p));
    return f;
}

ComplexQuad frequency_inner_product(const std::function<std::complex<double>(double)>& g_hat,
                                    double omega_cutoff, double oscillation, int m, int j, int nu,
                                    const EvalConfig& cfg) {
    cfg.validate();
    // Substitute w = 2^j u:
    //   2^{j/2} int g-hat(2^j u) e^{i u nu} conj(psi-hat(u)) du over |u| <= 2^{-j} cutoff.
    const double scale = std::ldexp(1.0, j);
    const double reach = omega_cutoff / scale;
    const double prefactor = std::sqrt(scale);
    auto integrand = [&](double u) {
        return prefactor * g_hat(scale * u) * std::polar(1.0, u * nu) * std::conj(wavelet_hat(m, u, cfg));
    };

    // Panel width follows the fastest phase rate so each panel spans at most
    // half a period; the adaptive rule refines within panels.
    const double rate = std::abs(nu) + scale * oscillation + 1.0;
    const double width = std::min(kPi / 2.0, kPi / rate);
    const auto panels = static_cast<long>(std::ceil(reach / width));

    ComplexQuad out;
    std::complex<double> sum = 0;
    for (long i = 0; i < panels; ++i) {
        const double a = reach * static_cast<double>(i) / static_cast<double>(panels);
        const double b = reach * static_cast<double>(i + 1) / static_cast<double>(panels);
        sum += integrate_adaptive<std::complex<double>>(integrand, a, b, cfg.quad_tol / 2.0,
                                                        cfg.quad_max_depth, out.abs_error,
                                                        out.evaluations, 2.0 * reach);
        sum += integrate_adaptive<std::complex<double>>(integrand, -b, -a, cfg.quad_tol / 2.0,
                                                        cfg.quad_max_depth, out.abs_error,
                                                        out.evaluations, 2.0 * reach);
    }
    out.value = sum;
    return out;
}

ComplexQuad wavelet_coefficient(const GaussianTest& f, int m, int j, int nu, const EvalConfig& cfg) {
    if (j < -6 || j > 10) throw std::domain_error("wavelet_coefficient: j must lie in [-6, 10]");
    if (nu < -64 || nu > 64) throw std::domain_error("wavelet_coefficient: |nu| must be <= 64");
    return frequency_inner_product([&f](double w) { return f.transform(w); }, f.frequency_cutoff(),
                                   std::abs(f.center), m, j, nu, cfg);
}

double dyadic_factor(int k, double p, int j) { return std::pow(2.0, -j * (k + 0.5 - 1.0 / p)); }

BernsteinRhs bernstein_rhs(int m, int k, double p, int j, const GaussianTest& f, const EvalConfig& cfg,
                           std::optional<TailDecay> decay) {
    if (k < 0 || k >= m) throw std::domain_error("bernstein_rhs: need 0 <= k < m");
    if (!(p > 1)) throw std::domain_error("bernstein_rhs: p must exceed 1");
    const RatioResult ratio = best_constant_detailed(m, k, p, cfg, decay);
    const QuadResult f_norm = gaussian_weighted_norm(f, k, conjugate_exponent(p), cfg);

    BernsteinRhs rhs{};
    rhs.best_constant = ratio.value;
    rhs.dyadic = dyadic_factor(k, p, j);
    rhs.psi_norm = ratio.denominator.value;
    rhs.f_norm = f_norm.value;
    rhs.value = rhs.best_constant * rhs.dyadic * rhs.psi_norm * rhs.f_norm;
    rhs.abs_error = rhs.value * (ratio.abs_error / ratio.value + ratio.denominator.abs_error / ratio.denominator.value +
                                 f_norm.abs_error / f_norm.value);
    return rhs;
}

}  // namespace daubnorm
