#include "daubnorm/bound_formulas.hpp"

#include "daubnorm/special_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace daubnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_common(const BoundParams& q) {
    if (q.m < 1) throw std::domain_error("bounds: m must be >= 1");
    if (!(q.p > 1.0) || !std::isfinite(q.p)) throw std::domain_error("bounds: p must be in (1, inf)");
    if (!(q.c > 0)) throw std::domain_error("bounds: c must be positive");
    if (!(q.log_base > 1.0)) throw std::domain_error("bounds: log base must exceed 1");
}

void check_theorem1(const BoundParams& q) {
    check_common(q);
    if (q.k < 0 || q.k >= q.m) throw std::domain_error("bounds A/B: need 0 <= k < m");
    if (!(q.eps > 0 && q.eps <= kPi)) throw std::domain_error("bounds A/B: eps must lie in (0, pi]");
}

void check_theorem2(const BoundParams& q) {
    check_common(q);
    if (q.k != q.m) throw std::domain_error("bounds F/G: require k = m");
    if (!mp_is_even(q.m, q.p)) throw std::domain_error("bounds F/G: m p must be an even integer");
}

// (2 pi)^{2 - c p log m}, the contribution of the decay estimate.
double decay_term(const BoundParams& q, double power) {
    return std::pow(kTwoPi, 2.0 - q.c * power * std::log(static_cast<double>(q.m)) / std::log(q.log_base));
}

}  // namespace

double BoundParams::decay_exponent() const {
    return c * std::log(static_cast<double>(m)) / std::log(log_base);
}

bool mp_is_even(int m, double p) {
    const double n = m * p;
    const double r = std::round(n);
    return std::abs(n - r) <= 1e-12 * std::max(1.0, n) && static_cast<long long>(r) % 2 == 0 && r >= 2;
}

double band_term(double p, int k) {
    const double pk = p * k;
    const double ratio = std::abs(pk - 1.0) < 1e-12 ? std::numbers::ln2
                                                    : (1.0 - std::pow(2.0, 1.0 - pk)) / (pk - 1.0);
    return std::pow(kTwoPi, 1.0 / p - 0.5) * std::pow(kPi, -k) * std::pow(ratio, 1.0 / p);
}

double low_frequency_term(const BoundParams& q, double x) {
    const double p = q.p;
    const double m = q.m;
    return std::pow(2.0, 1.0 - p * (2.0 * m + 0.5)) * std::pow(x, p * (m - q.k - 0.5) + 1.0) *
           std::pow(central_ratio(q.m), p / 2.0);
}

Theorem1Terms theorem1_terms(const BoundParams& q) {
    check_theorem1(q);
    Theorem1Terms t{};
    t.T0 = band_term(q.p, q.k);
    t.T1_pi = low_frequency_term(q, kPi);
    t.T1_eps = low_frequency_term(q, q.eps);
    t.T2 = decay_term(q, q.p);
    t.T3 = std::pow(2.0, 1.0 - q.p / 2.0) * std::pow(kPi, 1.0 - q.p * (q.k + 0.5));
    return t;
}

double bound_A(const BoundParams& q) {
    const Theorem1Terms t = theorem1_terms(q);
    return t.T0 + std::pow(t.T1_pi + t.T2 + t.T3, 1.0 / q.p);
}

double bound_B(const BoundParams& q) {
    const Theorem1Terms t = theorem1_terms(q);
    return t.T0 - std::pow(t.T1_eps + t.T2 + t.T3, 1.0 / q.p);
}

double bound_D(const BoundParams& q) {
    check_common(q);
    const double m = q.m;
    return 2.0 * std::pow(kTwoPi, 1.0 / q.p - 0.5) +
           std::pow(2.0, 0.5 - 2.0 * m) * std::pow(kPi, m + 0.5) * std::sqrt(central_ratio(q.m)) +
           decay_term(q, 1.0);
}

double bound_E(const BoundParams& q) {
    check_common(q);
    const double p = q.p;
    const double m = q.m;
    const double bracket = std::pow(2.0, -p * (0.5 + 2.0 * m) + 1.0) * std::pow(kPi, p * (m - 0.5) + 1.0) *
                               std::pow(central_ratio(q.m), p / 2.0) +
                           decay_term(q, p) + std::pow(kTwoPi, 1.0 - p / 2.0);
    return std::pow(kTwoPi, 1.0 / p - 0.5) - std::pow(bracket, 1.0 / p);
}

double bound_F(const BoundParams& q) {
    check_theorem2(q);
    const double p = q.p;
    const double m = q.m;
    const int n = static_cast<int>(std::lround(m * p));
    // The alternating sum over (mp-1)! equals 2^{mp} / pi times the sinc-power integral.
    const double high = std::pow(2.0, 1.0 - p / 2.0) / (std::pow(kPi, p * (m + 0.5) - 1.0) * (n - 1.0));
    const double low = std::pow(2.0, 1.0 - p * (2.0 * m - 1.0) + n) * std::pow(kPi, -p / 2.0) *
                       sinc_power_integral(n);
    return std::pow(high + low, 1.0 / p);
}

double bound_G(const BoundParams& q) {
    check_theorem2(q);
    const double p = q.p;
    const double m = q.m;
    const double log_gp = (1.0 - 2.0 * p * m) * std::numbers::ln2 + std::log(central_ratio(q.m)) -
                          (p / 2.0 - 1.0) * std::log(kPi) - (p / 2.0) * std::log(m) -
                          m * p * std::log(3.0);
    return std::exp(log_gp / p);
}

BoundSet compute_bounds(const BoundParams& q) {
    check_common(q);
    BoundSet set;
    set.params = q;
    if (q.k >= 0 && q.k < q.m && q.eps > 0 && q.eps <= kPi) {
        set.A = bound_A(q);
        set.B = bound_B(q);
        if (*set.B <= 0) set.flags.emplace_back("B_nonpositive");
    }
    set.D = bound_D(q);
    set.E = bound_E(q);
    if (*set.E <= 0) set.flags.emplace_back("E_nonpositive");
    if (q.k == q.m && mp_is_even(q.m, q.p)) {
        set.F = bound_F(q);
        set.G = bound_G(q);
        set.G_asymptotic = true;
        set.flags.emplace_back("G_asymptotic");
    }
    if (q.m == 1) set.flags.emplace_back("m1_decay_term_vacuous");
    return set;
}

RatioBounds ratio_bounds(const BoundParams& q, RatioKind which) {
    const double D = bound_D(q);
    const double E = bound_E(q);
    double num_lo = 0;
    double num_hi = 0;
    if (which == RatioKind::Corollary2) {
        num_lo = bound_B(q);
        num_hi = bound_A(q);
    } else {
        num_lo = bound_G(q);
        num_hi = bound_F(q);
    }
    RatioBounds r{};
    r.lo_vacuous = num_lo <= 0 || D <= 0;
    r.lo = r.lo_vacuous ? 0.0 : num_lo / D;
    r.hi_vacuous = E <= 0;
    r.hi = r.hi_vacuous ? std::numeric_limits<double>::infinity() : num_hi / E;
    return r;
}

}  // namespace daubnorm
