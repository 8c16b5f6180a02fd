#include "daubnorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace daubnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOriginCut = 1e-6;
constexpr int kEnvelopeSamples = 1024;

void check_request(const NormRequest& req) {
    if (req.m < 1) throw std::domain_error("weighted_lp_norm: m must be >= 1");
    if (req.k < 0) throw std::domain_error("weighted_lp_norm: k must be >= 0");
    if (req.k > req.m) {
        throw std::domain_error("weighted_lp_norm: k = " + std::to_string(req.k) + " > m = " +
                                std::to_string(req.m) + " is not integrable at the origin");
    }
    if (!(req.p > 1.0) || !std::isfinite(req.p)) throw std::domain_error("weighted_lp_norm: p must be in (1, inf)");
    if (!(req.cutoff > 2.0 * kPi)) throw std::domain_error("weighted_lp_norm: cutoff must exceed 2 pi");
}

// Index j of the dyadic band [2^j pi, 2^{j+1} pi) containing w >= pi.
int band_index(double w) { return static_cast<int>(std::floor(std::log2(w / kPi) + 1e-12)); }

bool is_dyadic_multiple_of_pi(double w) {
    const double e = std::round(std::log2(w / kPi));
    return std::abs(w - std::ldexp(kPi, static_cast<int>(e))) <= 1e-9 * w;
}

}  // namespace

TailDecay TailDecay::from_c(double C_tilde, double c, int m) {
    return {C_tilde, c * std::log(static_cast<double>(m))};
}

TailDecay default_tail_decay(int m, double cutoff, const EvalConfig& cfg) {
    return TailDecay::from(fit_envelope(m, 4.0 * kPi, cutoff, kEnvelopeSamples, cfg));
}

NormBreakdown weighted_lp_norm_detailed(const NormRequest& req, const EvalConfig& cfg) {
    check_request(req);
    cfg.validate();

    NormBreakdown out;
    out.decay = req.decay ? *req.decay : default_tail_decay(req.m, req.cutoff, cfg);
    const double p = req.p;
    const double k = req.k;
    const double tail_power = p * (k + out.decay.exponent);
    if (!(tail_power > 1.0)) {
        throw std::domain_error("weighted_lp_norm: tail not integrable, p (k + c log m) = " +
                                std::to_string(tail_power) + " <= 1");
    }

    const int m = req.m;
    auto integrand = [&](double w) {
        const double mod2 = wavelet_hat_abs2(m, w, cfg);
        if (mod2 <= 0) return 0.0;
        return std::pow(w, -p * k) * std::pow(mod2, 0.5 * p);
    };

    // Breakpoints: the origin cut, pi, 2 pi, then every multiple of 4 pi,
    // where all the zeros of |psi-hat| away from the origin sit.
    std::vector<double> breaks{0.0};
    if (req.k >= 1) breaks.push_back(kOriginCut);
    for (double b : {kPi, 2.0 * kPi, 4.0 * kPi}) {
        if (b < req.cutoff) breaks.push_back(b);
    }
    for (long n = 2;; ++n) {
        const double b = 4.0 * kPi * static_cast<double>(n);
        if (b >= req.cutoff * (1.0 - 1e-14)) break;
        breaks.push_back(b);
    }
    breaks.push_back(req.cutoff);

    QuadResult& res = out.result;
    double half_body = 0;
    double half_error = 0;
    std::vector<double> band_sums;

    std::size_t first = 0;
    if (req.k >= 1) {
        // Near the origin |psi-hat|^p ~ a w^{pm}, so the integrand is ~ a w^{p(m-k)};
        // the power law is integrated exactly and its O(w^2) relative defect is
        // charged to the error.
        const double g = integrand(kOriginCut);
        res.evaluations += 1;
        const double near = g * kOriginCut / (p * (m - k) + 1.0);
        half_body += near;
        half_error += 1e-6 * near;
        first = 1;
    }

    for (std::size_t i = first; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i];
        const double b = breaks[i + 1];
        double err = 0;
        const double v = integrate_adaptive<double>(integrand, a, b, cfg.quad_tol / 2.0, cfg.quad_max_depth,
                                                    err, res.evaluations, req.cutoff);
        half_body += v;
        half_error += err;
        if (a >= kPi * (1.0 - 1e-14)) {
            const auto j = static_cast<std::size_t>(band_index(a));
            if (band_sums.size() <= j) band_sums.resize(j + 1, 0.0);
            band_sums[j] += v;
        }
    }

    out.tail_bound = 2.0 * std::pow(out.decay.C_tilde, p) * std::pow(req.cutoff, 1.0 - tail_power) /
                     (tail_power - 1.0);

    // Geometric extrapolation from the last complete dyadic bands.
    double tail_one_side = 0;
    const std::size_t nb = band_sums.size();
    if (is_dyadic_multiple_of_pi(req.cutoff) && nb >= 3 && band_sums[nb - 2] > 0) {
        const double ratio = band_sums[nb - 1] / band_sums[nb - 2];
        if (ratio > 0 && ratio < 1) tail_one_side = band_sums[nb - 1] * ratio / (1.0 - ratio);
    }
    out.tail_estimate = std::min(2.0 * tail_one_side, out.tail_bound);

    out.body = 2.0 * half_body;
    const double total = out.body + out.tail_estimate;
    const double total_error = 2.0 * half_error + out.tail_bound;

    res.value = std::pow(total, 1.0 / p);
    res.abs_error = res.value - std::pow(std::max(total - total_error, 0.0), 1.0 / p);
    return out;
}

QuadResult weighted_lp_norm(const NormRequest& req, const EvalConfig& cfg) {
    return weighted_lp_norm_detailed(req, cfg).result;
}

RatioResult best_constant_detailed(int m, int k, double p, const EvalConfig& cfg,
                                   std::optional<TailDecay> decay, double cutoff) {
    if (k < 0 || k > m) throw std::domain_error("best_constant: need 0 <= k <= m");
    if (!decay) decay = default_tail_decay(m, cutoff, cfg);
    NormRequest req{m, k, p, cutoff, decay};
    RatioResult r{};
    r.numerator = weighted_lp_norm(req, cfg);
    req.k = 0;
    r.denominator = k == 0 ? r.numerator : weighted_lp_norm(req, cfg);
    r.value = r.numerator.value / r.denominator.value;
    r.abs_error = r.value * (r.numerator.abs_error / r.numerator.value +
                             (k == 0 ? 0.0 : r.denominator.abs_error / r.denominator.value));
    return r;
}

double best_constant_Ckp(int m, int k, double p, const EvalConfig& cfg) {
    if (k >= m) throw std::domain_error("best_constant_Ckp: requires k < m");
    return best_constant_detailed(m, k, p, cfg).value;
}

}  // namespace daubnorm
