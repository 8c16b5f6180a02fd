#pragma once
// Independent reference computations used only by the tests.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;

inline cpp_int factorial(unsigned n) {
    cpp_int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline cpp_int binomial(unsigned n, unsigned k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// int_0^inf (sin t / t)^n dt: Gauss-Kronrod panels of width pi up to T = panels*pi,
// plus the mean of sin^n over a period times int_T^inf t^{-n}.
inline double sinc_power_quadrature(int n, int panels = 400) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [n](double t) { return t == 0 ? 1.0 : std::pow(std::sin(t) / t, n); };
    double sum = 0;
    for (int i = 0; i < panels; ++i) {
        sum += gauss_kronrod<double, 61>::integrate(f, i * std::numbers::pi, (i + 1) * std::numbers::pi, 4, 1e-14);
    }
    const double T = panels * std::numbers::pi;
    const double mean = static_cast<double>(binomial(n, n / 2)) / std::pow(2.0, n);
    return sum + mean * std::pow(T, 1.0 - n) / (n - 1.0);
}

// Literal evaluation of the bound expressions in 50-digit arithmetic.
struct Bounds50 {
    int m, k;
    Big p, eps, c;

    Big pi() const { return boost::math::constants::pi<Big>(); }
    Big ratio() const {
        return Big(factorial(2 * m)) / Big(factorial(m) * factorial(m - 1));
    }
    Big decay(const Big& power) const { return pow(2 * pi(), 2 - c * power * log(Big(m))); }
    Big T0() const {
        const Big pk = p * k;
        return pow(2 * pi(), 1 / p - Big(0.5)) * pow(pi(), -k) * pow((1 - pow(Big(2), 1 - pk)) / (pk - 1), 1 / p);
    }
    Big T1(const Big& x) const {
        return pow(Big(2), 1 - p * (2 * m + Big(0.5))) * pow(x, p * (m - k - Big(0.5)) + 1) * pow(ratio(), p / 2);
    }
    Big T3() const { return pow(Big(2), 1 - p / 2) * pow(pi(), 1 - p * (k + Big(0.5))); }
    Big A() const { return T0() + pow(T1(pi()) + decay(p) + T3(), 1 / p); }
    Big B() const { return T0() - pow(T1(eps) + decay(p) + T3(), 1 / p); }
    Big D() const {
        return 2 * pow(2 * pi(), 1 / p - Big(0.5)) +
               pow(Big(2), Big(0.5) - 2 * m) * pow(pi(), m + Big(0.5)) * sqrt(ratio()) + decay(Big(1));
    }
    Big E() const {
        const Big bracket = pow(Big(2), -p * (Big(0.5) + 2 * m) + 1) * pow(pi(), p * (m - Big(0.5)) + 1) *
                                pow(ratio(), p / 2) +
                            decay(p) + pow(2 * pi(), 1 - p / 2);
        return pow(2 * pi(), 1 / p - Big(0.5)) - pow(bracket, 1 / p);
    }
    // k = m, n = mp even.
    Big F() const {
        const int n = static_cast<int>(std::lround(static_cast<double>(m * p)));
        cpp_int sum = 0;
        for (int i = 0; i <= n / 2; ++i) {
            cpp_int term = binomial(n, i) * boost::multiprecision::pow(cpp_int(n - 2 * i), n - 1);
            sum += (i % 2 ? -term : term);
        }
        const Big first = pow(Big(2), 1 - p / 2) / (pow(pi(), p * (m + Big(0.5)) - 1) * (n - 1));
        const Big second = pow(Big(2), 1 - p * (2 * m - 1)) / (pow(pi(), p / 2 - 1) * Big(factorial(n - 1))) * Big(sum);
        return pow(first + second, 1 / p);
    }
    Big G() const {
        const Big gp = pow(Big(2), 1 - 2 * p * m) * Big(factorial(2 * m)) /
                       (pow(pi(), p / 2 - 1) * pow(Big(m), p / 2) * pow(Big(3), m * p) *
                        Big(factorial(m) * factorial(m - 1)));
        return pow(gp, 1 / p);
    }
};

}  // namespace oracle
