#pragma once

#include "daubnorm/quadrature.hpp"
#include "daubnorm/spectral_eval.hpp"

#include <numbers>
#include <optional>

namespace daubnorm {

/// Default integration cutoff, 2^12 pi.
inline constexpr double kDefaultCutoff = 4096.0 * std::numbers::pi;

/// Power-law tail model |psi-hat(w)| <= C_tilde |w|^{-exponent} beyond the cutoff.
struct TailDecay {
    double C_tilde;
    double exponent;

    static TailDecay from(const DecayFit& fit) { return {fit.C_tilde, fit.exponent()}; }
    static TailDecay from(const EnvelopeFit& fit) { return {fit.C_tilde, fit.exponent}; }
    /// Explicit (C_tilde, c) pair; exponent is c ln m.
    static TailDecay from_c(double C_tilde, double c, int m);
};

/// Parameters of || (i w)^{-k} psi-hat_m ||_p.
struct NormRequest {
    int m = 2;
    int k = 0;
    double p = 2.0;
    double cutoff = kDefaultCutoff;
    /// When empty, fitted by fit_envelope over [4 pi, cutoff].
    std::optional<TailDecay> decay;
};

/// Details beyond QuadResult, for diagnostics and reports.
struct NormBreakdown {
    QuadResult result;
    double body = 0;        // 2 * int_0^cutoff of the integrand
    double tail_estimate = 0;  // extrapolated contribution beyond the cutoff (both sides)
    double tail_bound = 0;     // analytic bound 2 C^p cutoff^{1-p(k+a)} / (p(k+a)-1)
    TailDecay decay{};
};

/// Default tail model for order m over [4 pi, cutoff].
TailDecay default_tail_decay(int m, double cutoff = kDefaultCutoff, const EvalConfig& cfg = {});

/// (int_R |w|^{-pk} |psi-hat(w)|^p dw)^{1/p}.
/// Throws std::domain_error if k > m, p <= 1, cutoff <= 2 pi, or the tail
/// model is not integrable (p (k + exponent) <= 1).
QuadResult weighted_lp_norm(const NormRequest& req, const EvalConfig& cfg = {});
NormBreakdown weighted_lp_norm_detailed(const NormRequest& req, const EvalConfig& cfg = {});

/// C_{k,p} = ||(iw)^{-k} psi-hat||_p / ||psi-hat||_p.
double best_constant_Ckp(int m, int k, double p, const EvalConfig& cfg = {});

/// Ratio with a propagated absolute error; both norms share one tail model.
struct RatioResult {
    double value;
    double abs_error;
    QuadResult numerator;
    QuadResult denominator;
};
RatioResult best_constant_detailed(int m, int k, double p, const EvalConfig& cfg = {},
                                   std::optional<TailDecay> decay = std::nullopt,
                                   double cutoff = kDefaultCutoff);

}  // namespace daubnorm
