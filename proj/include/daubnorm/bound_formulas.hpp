#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace daubnorm {

/// Inputs to the closed-form bounds. C_tilde does not enter any displayed
/// expression; it travels with the bounds so reports can say which decay
/// model produced c.
struct BoundParams {
    int m = 2;
    int k = 1;
    double p = 2.0;
    double eps = std::numbers::pi;
    double c = 1.0;
    double C_tilde = 1.0;
    double log_base = std::numbers::e;  // base of the logarithm in c log m

    /// c log_base(m).
    double decay_exponent() const;
};

/// Terms of the first-theorem bounds:
/// A = T0 + [T1(pi) + T2 + T3]^{1/p},  B = T0 - [T1(eps) + T2 + T3]^{1/p}.
struct Theorem1Terms {
    double T0;
    double T1_pi;
    double T1_eps;
    double T2;
    double T3;
};

/// T0 = (2pi)^{1/p-1/2} pi^{-k} ((1 - 2^{1-pk}) / (pk - 1))^{1/p}; the ratio is
/// replaced by its limit ln 2 at pk = 1.
double band_term(double p, int k);

/// T1(x) = 2^{1-p(2m+1/2)} x^{p(m-k-1/2)+1} ((2m)!/(m!(m-1)!))^{p/2}.
double low_frequency_term(const BoundParams& params, double x);

Theorem1Terms theorem1_terms(const BoundParams& params);

double bound_A(const BoundParams& params);
double bound_B(const BoundParams& params);
double bound_D(const BoundParams& params);
double bound_E(const BoundParams& params);

/// F and G need k = m and an even integer mp; std::domain_error otherwise.
double bound_F(const BoundParams& params);
/// G with the (1 - o(1)) factor taken as 1; an asymptotic lower bound.
double bound_G(const BoundParams& params);

/// True when m p is (numerically) an even integer.
bool mp_is_even(int m, double p);

/// All six bounds for one parameter set. Missing values mean the formula's
/// preconditions do not hold; flags name anything formally valid but empty.
struct BoundSet {
    std::optional<double> A, B, D, E, F, G;
    BoundParams params;
    bool G_asymptotic = false;
    std::vector<std::string> flags;
};

BoundSet compute_bounds(const BoundParams& params);

enum class RatioKind { Corollary2, Corollary3 };

/// (lo, hi) sandwich for the best constant: (B/D, A/E) or (G/D, F/E).
/// lo is clamped to 0 when its numerator is negative; hi is +inf when E <= 0.
struct RatioBounds {
    double lo;
    double hi;
    bool lo_vacuous;
    bool hi_vacuous;
};

RatioBounds ratio_bounds(const BoundParams& params, RatioKind which);

}  // namespace daubnorm
