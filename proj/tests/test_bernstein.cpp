#include "daubnorm/bernstein.hpp"
#include "daubnorm/spectral_eval.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

using namespace daubnorm;

TEST_CASE("Gaussian weighted norms: closed form against quadrature") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        const GaussianTest f{sigma, 0.7, 1.3};
        for (int k = 0; k <= 3; ++k) {
            for (double q : {1.5, 2.0, 3.0}) {
                const QuadResult r = gaussian_weighted_norm(f, k, q);
                CHECK(std::abs(r.value - gaussian_weighted_norm_exact(f, k, q)) <= r.abs_error + 1e-8);
            }
        }
    }
}

TEST_CASE("class Gaussian has unit weighted norm") {
    for (int k : {0, 1, 2}) {
        for (double p : {1.5, 2.0, 4.0}) {
            const GaussianTest f = make_class_gaussian(1.0, 0.0, k, p);
            CHECK(gaussian_weighted_norm_exact(f, k, p / (p - 1)) == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(make_class_gaussian(0.0, 0.0, 1, 2.0), std::domain_error);
}

TEST_CASE("psi_{j,nu} has unit L2 norm through the frequency route") {
    const int m = 4;
    for (int j : {-2, 0, 3}) {
        for (int nu : {0, 5}) {
            const double s = std::ldexp(1.0, j);
            auto g = [&](double w) {
                return std::polar(1.0 / std::sqrt(s), -w / s * nu) * wavelet_hat(m, w / s);
            };
            const ComplexQuad r = frequency_inner_product(g, 512 * std::numbers::pi * s, nu / s, m, j, nu);
            CHECK(std::abs(r.value - 1.0) < 1e-6);
        }
    }
}

TEST_CASE("Haar coefficients match the time-domain integral") {
    // Even f makes the magnitude independent of the orientation convention.
    const GaussianTest f{1.0, 0.0, 1.0};
    auto F = [](double x) { return std::sqrt(std::numbers::pi / 2) * std::erf(x / std::numbers::sqrt2); };
    for (int j : {-1, 0, 2}) {
        for (int nu : {-3, 0, 1, 4}) {
            const double h = std::ldexp(1.0, -j);
            const double a = nu * h;
            const double time = std::sqrt(1 / h) * ((F(a + h / 2) - F(a)) - (F(a + h) - F(a + h / 2)));
            const ComplexQuad c = wavelet_coefficient(f, 1, j, nu);
            CHECK(std::abs(std::abs(c.value) - std::abs(time)) < 1e-8);
        }
    }
}

TEST_CASE("coefficients of a real f are real") {
    const GaussianTest f = make_class_gaussian(1.0, 0.4, 1, 2.0);
    for (int j : {-2, 1, 4}) {
        for (int nu : {-6, 0, 7}) {
            const ComplexQuad c = wavelet_coefficient(f, 3, j, nu);
            CHECK(std::abs(c.value.imag()) < 1e-9);
        }
    }
}

TEST_CASE("two resolutions agree within the combined error") {
    const GaussianTest f = make_class_gaussian(1.0, 0.0, 1, 2.0);
    EvalConfig coarse;
    coarse.quad_tol = 1e-7;
    for (int j : {-3, 0, 5}) {
        const ComplexQuad a = wavelet_coefficient(f, 2, j, 2);
        const ComplexQuad b = wavelet_coefficient(f, 2, j, 2, coarse);
        CHECK(std::abs(a.value - b.value) <= a.abs_error + b.abs_error + 1e-12);
    }
}

TEST_CASE("far-away Gaussian gives a negligible coefficient") {
    const GaussianTest f{0.1, 1000.0, 1.0};
    const ComplexQuad c = wavelet_coefficient(f, 2, 0, 0);
    CHECK(std::abs(c.value) < 1e-8);
}

TEST_CASE("coefficient range checks") {
    const GaussianTest f;
    CHECK_THROWS_AS(wavelet_coefficient(f, 2, 11, 0), std::domain_error);
    CHECK_THROWS_AS(wavelet_coefficient(f, 2, -7, 0), std::domain_error);
    CHECK_THROWS_AS(wavelet_coefficient(f, 2, 0, 65), std::domain_error);
}

TEST_CASE("right-hand side: dyadic scaling and j = 0") {
    CHECK(dyadic_factor(1, 2.0, 0) == 1.0);
    CHECK(dyadic_factor(1, 2.0, 1) == doctest::Approx(0.5));
    CHECK(dyadic_factor(2, 4.0, -2) == doctest::Approx(std::pow(2.0, 2 * 2.25)));

    const GaussianTest f = make_class_gaussian(1.0, 0.0, 1, 2.0);
    const BernsteinRhs r0 = bernstein_rhs(2, 1, 2.0, 0, f);
    CHECK(r0.dyadic == 1.0);
    CHECK(r0.value == doctest::Approx(r0.best_constant * r0.psi_norm * r0.f_norm).epsilon(1e-15));
    CHECK(r0.value > 0);
    CHECK(std::isfinite(r0.value));
    CHECK(r0.f_norm == doctest::Approx(1.0).epsilon(1e-8));
    for (int j = -3; j < 6; ++j) {
        const BernsteinRhs a = bernstein_rhs(2, 1, 2.0, j, f);
        const BernsteinRhs b = bernstein_rhs(2, 1, 2.0, j + 1, f);
        CHECK(b.value / a.value == doctest::Approx(std::pow(2.0, -1.0)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(bernstein_rhs(2, 2, 2.0, 0, f), std::domain_error);
}
