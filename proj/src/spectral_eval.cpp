#include "daubnorm/spectral_eval.hpp"

#include "daubnorm/daub_filters.hpp"
#include "daubnorm/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace daubnorm {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);
constexpr int kEnvelopeBlocks = 8;

// Beyond depth L every omitted factor obeys 1 >= |H(x)|^2 >= 1 - c_m x^{2m}/(2m),
// and the omitted terms form a geometric series with ratio 2^{-2m}. Choosing
// x_L <= theta with c_m theta^{2m}/(2m) = tol/2 keeps the tail within 1 + O(tol).
double modulus_threshold(int m, double tol) {
    return std::pow(tol * m / cm_constant(m), 1.0 / (2.0 * m));
}

// The complex product also carries a phase. arg H is odd with slope mu at the
// origin, so after the analytic correction e^{i mu w 2^{-L}} the residual is
// cubic in x_L.
double phase_threshold(int m, double tol) {
    return std::min(modulus_threshold(m, tol), std::cbrt(tol));
}

double tail_bound(int m, double x_last) {
    // 2 * sum_{l>L} c_m x_l^{2m}/(2m) with x_{L+1} = x_last / 2.
    const double r = std::pow(0.5, 2 * m);
    return 2.0 * cm_constant(m) * std::pow(x_last, 2 * m) / (2.0 * m) * r / (1.0 - r);
}

int depth_for(int m, double omega, double theta, const EvalConfig& cfg) {
    const double a = std::abs(omega);
    int depth = cfg.min_depth;
    if (a > 0) {
        depth = std::max(depth, static_cast<int>(std::ceil(std::log2(a / theta))));
    }
    if (depth > cfg.max_depth) {
        const double achieved = tail_bound(m, std::ldexp(a, -cfg.max_depth));
        throw TruncationError("infinite product needs depth " + std::to_string(depth) +
                                  " > max_depth " + std::to_string(cfg.max_depth) +
                                  " at omega = " + std::to_string(omega),
                              achieved);
    }
    return depth;
}

}  // namespace

void EvalConfig::validate() const {
    if (!(product_tol > 0 && product_tol < 1e-3)) {
        throw std::invalid_argument("EvalConfig: product_tol must lie in (0, 1e-3)");
    }
    if (min_depth < 8) throw std::invalid_argument("EvalConfig: min_depth must be >= 8");
    if (max_depth < min_depth) throw std::invalid_argument("EvalConfig: max_depth < min_depth");
    if (!(quad_tol > 0)) throw std::invalid_argument("EvalConfig: quad_tol must be positive");
    if (quad_max_depth < 1) throw std::invalid_argument("EvalConfig: quad_max_depth must be >= 1");
}

int product_depth(int m, double omega, const EvalConfig& cfg) {
    return depth_for(m, omega, modulus_threshold(m, cfg.product_tol), cfg);
}

std::complex<double> scaling_hat(int m, double omega, const EvalConfig& cfg) {
    const FilterSpec& filter = filter_for_order(m);
    const int depth = depth_for(m, omega, phase_threshold(m, cfg.product_tol), cfg);
    std::complex<double> product = 1.0;
    for (int l = 1; l <= depth; ++l) {
        product *= eval_H(filter, std::ldexp(omega, -l));
    }
    product *= std::polar(1.0, filter.phase_slope() * std::ldexp(omega, -depth));
    return kInvSqrt2Pi * product;
}

std::complex<double> wavelet_hat(int m, double omega, const EvalConfig& cfg) {
    const FilterSpec& filter = filter_for_order(m);
    return std::polar(1.0, -0.5 * omega) * std::conj(eval_H(filter, 0.5 * omega + kPi)) *
           scaling_hat(m, 0.5 * omega, cfg);
}

double scaling_hat_abs2(int m, double omega, const EvalConfig& cfg) {
    const int depth = depth_for(m, omega, modulus_threshold(m, cfg.product_tol), cfg);
    double product = 1.0;
    for (int l = 1; l <= depth; ++l) {
        product *= magnitude_squared_H(m, std::ldexp(omega, -l));
    }
    return product / (2.0 * kPi);
}

double wavelet_hat_abs2(int m, double omega, const EvalConfig& cfg) {
    if (m < 1) throw std::domain_error("wavelet_hat_abs2: m must be >= 1");
    return magnitude_squared_H(m, 0.5 * omega + kPi) * scaling_hat_abs2(m, 0.5 * omega, cfg);
}

double ideal_band_indicator(double omega) {
    const double a = std::abs(omega);
    return (a >= kPi && a <= 2.0 * kPi) ? kInvSqrt2Pi : 0.0;
}

double DecayFit::exponent() const { return c * std::log(static_cast<double>(m)); }

double DecayFit::c_for_log_base(double base) const {
    return exponent() / (std::log(static_cast<double>(m)) / std::log(base));
}

EnvelopeFit fit_envelope(int m, double omega_lo, double omega_hi, int samples, const EvalConfig& cfg) {
    if (!(omega_lo > 2.0 * kPi && omega_hi > omega_lo)) {
        throw std::domain_error("fit_envelope: need 2 pi < omega_lo < omega_hi");
    }
    if (samples < 16) throw std::domain_error("fit_envelope: samples must be >= 16");
    cfg.validate();

    std::vector<double> omegas(static_cast<std::size_t>(samples));
    std::vector<double> moduli(omegas.size());
    const double log_lo = std::log(omega_lo);
    const double log_step = (std::log(omega_hi) - log_lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double w = std::exp(log_lo + log_step * i);
        omegas[static_cast<std::size_t>(i)] = w;
        moduli[static_cast<std::size_t>(i)] = std::sqrt(wavelet_hat_abs2(m, w, cfg));
    }

    // Upper envelope: block maxima over contiguous log-spaced blocks.
    std::vector<double> xs;
    std::vector<double> ys;
    for (int b = 0; b < kEnvelopeBlocks; ++b) {
        const auto begin = static_cast<std::size_t>(b) * omegas.size() / kEnvelopeBlocks;
        const auto end = static_cast<std::size_t>(b + 1) * omegas.size() / kEnvelopeBlocks;
        const auto it = std::max_element(moduli.begin() + static_cast<long>(begin),
                                          moduli.begin() + static_cast<long>(end));
        if (*it <= 0) continue;
        const auto idx = static_cast<std::size_t>(it - moduli.begin());
        xs.push_back(std::log(omegas[idx]));
        ys.push_back(std::log(*it));
    }
    if (xs.size() < 2) throw std::runtime_error("fit_envelope: envelope vanished on the fit range");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;

    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        rss += r * r;
    }

    EnvelopeFit fit{};
    fit.exponent = -slope;
    fit.omega_lo = omega_lo;
    fit.omega_hi = omega_hi;
    fit.residual = std::sqrt(rss / n);
    fit.C_tilde = std::exp(intercept);
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        fit.C_tilde = std::max(fit.C_tilde, moduli[i] * std::pow(omegas[i], fit.exponent));
    }
    return fit;
}

DecayFit estimate_decay(int m, double omega_lo, double omega_hi, int samples, const EvalConfig& cfg) {
    if (m < 2) throw std::domain_error("estimate_decay: c log m is undefined for m = 1");
    const EnvelopeFit env = fit_envelope(m, omega_lo, omega_hi, samples, cfg);
    if (!(env.exponent > 0)) {
        throw std::runtime_error("estimate_decay: fitted envelope does not decay (exponent " +
                                 std::to_string(env.exponent) + ")");
    }
    return DecayFit{env.C_tilde, env.exponent / std::log(static_cast<double>(m)), env.omega_lo,
                    env.omega_hi, env.residual, m};
}

}  // namespace daubnorm
