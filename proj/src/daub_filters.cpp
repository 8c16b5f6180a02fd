#include "daubnorm/daub_filters.hpp"

#include "daubnorm/special_math.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>

namespace daubnorm {

namespace {

using cld = std::complex<long double>;

constexpr double kPi = std::numbers::pi;
constexpr double kReconstructionTol = 1e-10;
constexpr double kOrthonormalityTol = 1e-10;
constexpr double kTapSumTol = 1e-12;
constexpr long double kPairTol = 1e-8L;

std::vector<long double> p_coefficients(int m) {
    std::vector<long double> c(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        c[static_cast<std::size_t>(k)] =
            static_cast<long double>(binomial(static_cast<unsigned>(m - 1 + k), static_cast<unsigned>(k)));
    }
    return c;
}

// Value and derivative of a real-coefficient polynomial (ascending order).
std::pair<cld, cld> horner(const std::vector<long double>& c, cld x) {
    cld value = 0;
    cld deriv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        deriv = deriv * x + value;
        value = value * x + *it;
    }
    return {value, deriv};
}

// Aberth-Ehrlich simultaneous iteration followed by per-root Newton polish.
std::vector<cld> polynomial_roots(const std::vector<long double>& c) {
    const std::size_t degree = c.size() - 1;
    std::vector<cld> roots(degree);
    if (degree == 0) return roots;

    // Cauchy-style radius from the coefficient ratios.
    long double radius = 0;
    for (std::size_t i = 0; i < degree; ++i) {
        radius = std::max(radius, std::pow(std::abs(c[i] / c[degree]),
                                           1.0L / static_cast<long double>(degree - i)));
    }
    for (std::size_t i = 0; i < degree; ++i) {
        long double angle = 2.0L * std::numbers::pi_v<long double> * (i + 0.25L) / degree + 0.4L;
        roots[i] = std::polar(radius, angle);
    }

    for (int iter = 0; iter < 500; ++iter) {
        long double max_step = 0;
        for (std::size_t i = 0; i < degree; ++i) {
            auto [p, dp] = horner(c, roots[i]);
            if (p == cld(0)) continue;
            cld ratio = p / dp;
            cld repulsion = 0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) repulsion += 1.0L / (roots[i] - roots[j]);
            }
            cld step = ratio / (1.0L - ratio * repulsion);
            roots[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(roots[i])));
        }
        if (max_step < 1e-17L) break;
    }

    for (auto& r : roots) {
        for (int iter = 0; iter < 8; ++iter) {
            auto [p, dp] = horner(c, r);
            if (dp == cld(0)) break;
            cld step = p / dp;
            r -= step;
            if (std::abs(step) <= 1e-19L * std::abs(r)) break;
        }
    }
    return roots;
}

// Multiply polynomial (ascending) by (z - a).
void multiply_linear(std::vector<cld>& poly, cld a) {
    poly.push_back(0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) {
        poly[i] = poly[i - 1] - a * poly[i];
    }
    poly[0] = -a * poly[0];
}

}  // namespace

FilterSpec::FilterSpec(int m, std::vector<double> taps) : m_(m), taps_(std::move(taps)) {
    double slope = 0;
    for (std::size_t l = 0; l < taps_.size(); ++l) slope += static_cast<double>(l) * taps_[l];
    phase_slope_ = slope / std::numbers::sqrt2;
}

double eval_P(int m, double x) {
    // Coefficients C(m-1+k, k) built by the ratio (m-1+k)/k, then Horner.
    std::array<double, 2 * kMaxFilterOrder + 1> coef{};
    if (m < 1 || m > static_cast<int>(coef.size())) {
        throw std::domain_error("eval_P: order out of range: " + std::to_string(m));
    }
    coef[0] = 1.0;
    for (int k = 1; k < m; ++k) coef[static_cast<std::size_t>(k)] = coef[static_cast<std::size_t>(k - 1)] * (m - 1 + k) / k;
    double value = 0;
    for (int k = m - 1; k >= 0; --k) value = value * x + coef[static_cast<std::size_t>(k)];
    return value;
}

double magnitude_squared_H(int m, double omega) {
    const double half = 0.5 * omega;
    const double c = std::cos(half);
    const double s = std::sin(half);
    return std::pow(c * c, m) * eval_P(m, s * s);
}

double sin_power_integral(int n, double x) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("sin_power_integral: n must be odd and positive");
    const double s = std::sin(x);
    const double c = std::cos(x);
    // I_1 = 1 - cos x;  I_n = -sin^{n-1} x cos x / n + (n-1)/n I_{n-2}
    double value = 1.0 - c;
    double s_pow = 1.0;
    for (int j = 3; j <= n; j += 2) {
        s_pow *= s * s;
        value = -s_pow * c / j + (j - 1.0) / j * value;
    }
    return value;
}

double magnitude_squared_H_integral(int m, double omega) {
    double w = std::remainder(omega, 2.0 * kPi);
    w = std::abs(w);
    return 1.0 - cm_constant(m) * sin_power_integral(2 * m - 1, w);
}

std::complex<double> eval_H(const FilterSpec& filter, double omega) {
    std::complex<double> sum = 0;
    const auto& taps = filter.taps();
    for (std::size_t l = 0; l < taps.size(); ++l) {
        sum += taps[l] * std::polar(1.0, static_cast<double>(l) * omega);
    }
    return sum / std::numbers::sqrt2;
}

FilterResiduals filter_residuals(int m, const std::vector<double>& taps, int grid_points) {
    FilterResiduals res{};
    double sum = 0;
    for (double h : taps) sum += h;
    res.tap_sum = std::abs(sum - std::numbers::sqrt2);

    const auto len = static_cast<long>(taps.size());
    for (long shift = 0; shift < len; shift += 2) {
        double acc = 0;
        for (long l = 0; l + shift < len; ++l) acc += taps[l] * taps[l + shift];
        res.orthonormality = std::max(res.orthonormality, std::abs(acc - (shift == 0 ? 1.0 : 0.0)));
    }

    for (int g = 0; g < grid_points; ++g) {
        const double omega = 2.0 * kPi * g / grid_points - kPi;
        std::complex<double> h = 0;
        for (long l = 0; l < len; ++l) h += taps[l] * std::polar(1.0, static_cast<double>(l) * omega);
        const double mod2 = std::norm(h) / 2.0;
        res.reconstruction = std::max(res.reconstruction, std::abs(mod2 - magnitude_squared_H(m, omega)));
    }
    return res;
}

FilterSpec construct_filter(int m) {
    if (m < 1 || m > kMaxFilterOrder) {
        throw std::domain_error("construct_filter: order must be in [1, " +
                                std::to_string(kMaxFilterOrder) + "], got " + std::to_string(m));
    }

    // Roots y_r of P_{m-1}; each maps to the pair (a, 1/a) solving
    // z + 1/z = 2 - 4 y_r, and the factor keeps the member inside the disc.
    std::vector<cld> y_roots = polynomial_roots(p_coefficients(m));
    for (auto& y : y_roots) {
        if (std::abs(y.imag()) <= kPairTol * std::abs(y)) y = cld(y.real(), 0);
    }

    std::vector<cld> inner;
    inner.reserve(y_roots.size());
    for (const auto& y : y_roots) {
        cld b = 2.0L - 4.0L * y;
        cld disc = std::sqrt(b * b - 4.0L);
        cld big = std::abs(b + disc) >= std::abs(b - disc) ? (b + disc) / 2.0L : (b - disc) / 2.0L;
        inner.push_back(1.0L / big);
    }

    // Unmatched complex roots mean the conjugate pairing failed.
    for (const auto& a : inner) {
        if (a.imag() == 0) continue;
        bool matched = std::any_of(inner.begin(), inner.end(), [&](const cld& other) {
            return std::abs(other - std::conj(a)) <= kPairTol * std::max(1.0L, std::abs(a));
        });
        if (!matched) {
            throw FilterConstructionError("construct_filter: unpaired complex root", std::abs(a.imag()));
        }
    }

    std::vector<cld> poly{1.0L};
    for (int i = 0; i < m; ++i) multiply_linear(poly, -1.0L);  // (1 + z)^m
    for (const auto& a : inner) multiply_linear(poly, a);

    cld at_one = 0;
    for (const auto& c : poly) at_one += c;

    const std::size_t length = static_cast<std::size_t>(2 * m);
    std::vector<double> taps(length);
    double max_imag = 0;
    for (std::size_t l = 0; l < length; ++l) {
        cld g = poly[length - 1 - l] / at_one;
        max_imag = std::max(max_imag, static_cast<double>(std::abs(g.imag())));
        taps[l] = static_cast<double>(std::numbers::sqrt2_v<long double> * g.real());
    }
    if (max_imag > 1e-12) {
        throw FilterConstructionError("construct_filter: taps have imaginary residue", max_imag);
    }

    FilterResiduals res = filter_residuals(m, taps);
    double worst = std::max({res.tap_sum / kTapSumTol, res.orthonormality / kOrthonormalityTol,
                             res.reconstruction / kReconstructionTol});
    if (worst > 1.0) {
        throw FilterConstructionError(
            "construct_filter: residual check failed for m = " + std::to_string(m) +
                " (sum " + std::to_string(res.tap_sum) + ", orth " + std::to_string(res.orthonormality) +
                ", recon " + std::to_string(res.reconstruction) + ")",
            std::max({res.tap_sum, res.orthonormality, res.reconstruction}));
    }
    return FilterSpec(m, std::move(taps));
}

const FilterSpec& filter_for_order(int m) {
    if (m < 1 || m > kMaxFilterOrder) {
        throw std::domain_error("filter_for_order: order out of range: " + std::to_string(m));
    }
    static std::array<std::once_flag, kMaxFilterOrder + 1> flags;
    static std::array<std::unique_ptr<FilterSpec>, kMaxFilterOrder + 1> cache;
    std::call_once(flags[static_cast<std::size_t>(m)], [m] {
        cache[static_cast<std::size_t>(m)] = std::make_unique<FilterSpec>(construct_filter(m));
    });
    return *cache[static_cast<std::size_t>(m)];
}

}  // namespace daubnorm
