#include "daubnorm/spectral_eval.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace daubnorm;

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2 * std::numbers::pi);

double haar_phi_abs(double w) {
    const double x = w / 2;
    return (x == 0 ? 1.0 : std::abs(std::sin(x) / x)) * kInvSqrt2Pi;
}

double haar_psi_abs(double w) {
    const double x = w / 4;
    return x == 0 ? 0.0 : std::sin(x) * std::sin(x) / std::abs(x) * kInvSqrt2Pi;
}

}  // namespace

TEST_CASE("Haar transforms match the closed forms") {
    for (int i = -400; i <= 400; ++i) {
        const double w = 0.137 * i;
        CHECK(std::abs(std::abs(scaling_hat(1, w)) - haar_phi_abs(w)) < 1e-10);
        CHECK(std::abs(std::abs(wavelet_hat(1, w)) - haar_psi_abs(w)) < 1e-10);
        CHECK(std::abs(std::sqrt(wavelet_hat_abs2(1, w)) - haar_psi_abs(w)) < 1e-10);
    }
}

TEST_CASE("phi-hat(0) and psi-hat(0)") {
    for (int m = 1; m <= 10; ++m) {
        CHECK(std::abs(scaling_hat(m, 0.0) - kInvSqrt2Pi) < 1e-14);
        CHECK(std::abs(wavelet_hat(m, 0.0)) < 1e-14);
    }
}

TEST_CASE("tap path and magnitude path agree") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> logw(-3.0, 3.5);
    for (int m = 1; m <= 10; ++m) {
        for (int i = 0; i < 60; ++i) {
            const double w = std::pow(10.0, logw(rng));
            const double a = std::norm(wavelet_hat(m, w));
            const double b = wavelet_hat_abs2(m, w);
            CHECK(std::abs(a - b) <= 1e-9 * b + 1e-20);
            const double pa = std::norm(scaling_hat(m, w));
            const double pb = scaling_hat_abs2(m, w);
            CHECK(std::abs(pa - pb) <= 1e-9 * pb + 1e-20);
        }
    }
}

TEST_CASE("conjugate symmetry of real wavelets") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> wd(0.0, 60.0);
    for (int m = 1; m <= 6; ++m) {
        for (int i = 0; i < 30; ++i) {
            const double w = wd(rng);
            CHECK(std::abs(wavelet_hat(m, -w) - std::conj(wavelet_hat(m, w))) < 1e-12);
            CHECK(wavelet_hat_abs2(m, -w) == doctest::Approx(wavelet_hat_abs2(m, w)).epsilon(1e-13));
        }
    }
}

TEST_CASE("zero of order m at the origin") {
    for (int m = 1; m <= 6; ++m) {
        const double a = std::abs(wavelet_hat(m, 1e-2));
        const double b = std::abs(wavelet_hat(m, 2e-2));
        CHECK(b / a == doctest::Approx(std::pow(2.0, m)).epsilon(1e-2));
        const double a2 = wavelet_hat_abs2(m, 1e-3);
        const double b2 = wavelet_hat_abs2(m, 2e-3);
        CHECK(b2 / a2 == doctest::Approx(std::pow(4.0, m)).epsilon(1e-3));
    }
}

TEST_CASE("orthonormality: sum_l |phi-hat(w + 2 pi l)|^2 = 1 / (2 pi)") {
    for (int m = 1; m <= 5; ++m) {
        for (double w : {0.3, 1.7, 2.9}) {
            double s = 0;
            for (int l = -2000; l <= 2000; ++l) s += scaling_hat_abs2(m, w + 2 * std::numbers::pi * l);
            // Haar's slow 1/w^2 decay leaves a truncation remainder of order 1e-4.
            CHECK(s * 2 * std::numbers::pi == doctest::Approx(1.0).epsilon(m == 1 ? 1e-3 : 1e-8));
        }
    }
}

TEST_CASE("self-convergence when the product is taken deeper") {
    EvalConfig loose;
    EvalConfig tight;
    tight.product_tol = 1e-15;
    tight.min_depth = 30;
    for (int m = 2; m <= 8; m += 3) {
        for (double w : {0.5, 7.0, 100.0, 3000.0}) {
            const auto a = wavelet_hat(m, w, loose);
            const auto b = wavelet_hat(m, w, tight);
            CHECK(std::abs(a - b) <= 1e-11 * std::abs(b) + 1e-18);
        }
    }
}

TEST_CASE("product depth grows with frequency") {
    EvalConfig cfg;
    CHECK(product_depth(3, 1.0, cfg) >= cfg.min_depth);
    CHECK(product_depth(3, 1e6, cfg) > product_depth(3, 1.0, cfg));
}

TEST_CASE("truncation error is reported when the depth cap is too low") {
    EvalConfig cfg;
    cfg.min_depth = 8;
    cfg.max_depth = 8;
    CHECK_THROWS_AS(scaling_hat(3, 1e9, cfg), TruncationError);
    try {
        scaling_hat(3, 1e9, cfg);
    } catch (const TruncationError& e) {
        CHECK(e.bound() > cfg.product_tol);
    }
}

TEST_CASE("configuration validation") {
    EvalConfig cfg;
    cfg.product_tol = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    EvalConfig cfg2;
    cfg2.min_depth = 80;
    CHECK_THROWS_AS(cfg2.validate(), std::invalid_argument);
}

TEST_CASE("ideal band indicator on closed intervals") {
    CHECK(ideal_band_indicator(std::numbers::pi) == doctest::Approx(kInvSqrt2Pi));
    CHECK(ideal_band_indicator(-2 * std::numbers::pi) == doctest::Approx(kInvSqrt2Pi));
    CHECK(ideal_band_indicator(4.0) == doctest::Approx(kInvSqrt2Pi));
    CHECK(ideal_band_indicator(3.0) == 0.0);
    CHECK(ideal_band_indicator(7.0) == 0.0);
    CHECK(ideal_band_indicator(0.0) == 0.0);
}

TEST_CASE("envelope fit dominates every sample it was fitted on") {
    const EnvelopeFit fit = fit_envelope(3, 4 * std::numbers::pi, 512 * std::numbers::pi, 128);
    CHECK(fit.exponent > 0);
    for (int i = 0; i < 128; ++i) {
        const double w = 4 * std::numbers::pi * std::pow(128.0, i / 127.0);
        CHECK(std::sqrt(wavelet_hat_abs2(3, w)) <= fit.C_tilde * std::pow(w, -fit.exponent) * (1 + 1e-12));
    }
}

TEST_CASE("decay fit: c > 0, exponent increasing in m") {
    const double lo = 4 * std::numbers::pi, hi = 1024 * std::numbers::pi;
    double prev = 0;
    for (int m : {2, 3, 4, 6, 8}) {
        const DecayFit fit = estimate_decay(m, lo, hi, 256);
        CHECK(fit.c > 0);
        CHECK(fit.m == m);
        CHECK(fit.exponent() == doctest::Approx(fit.c * std::log(m)));
        CHECK(fit.c_for_log_base(2.0) * std::log2(m) == doctest::Approx(fit.exponent()));
        CHECK(fit.exponent() > prev);
        prev = fit.exponent();
    }
}

TEST_CASE("decay fit: m = 1 and bad ranges") {
    CHECK_THROWS_AS(estimate_decay(1, 20.0, 2000.0, 64), std::domain_error);
    CHECK_THROWS(estimate_decay(2, 2000.0, 20.0, 64));
    CHECK_THROWS(estimate_decay(2, 20.0, 2000.0, 1));
}
