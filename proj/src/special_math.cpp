#include "daubnorm/special_math.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace daubnorm {

namespace {

// gcd-reduced multiply-then-divide so the running value stays exact and
// never exceeds the final result by more than a factor k.
UInt128 gcd128(UInt128 a, UInt128 b) {
    while (b != 0) {
        UInt128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

UInt128 binomial(unsigned n, unsigned k) {
    if (k > n) {
        throw std::domain_error("binomial: k > n (" + std::to_string(k) + " > " +
                                std::to_string(n) + ")");
    }
    if (k > n - k) k = n - k;
    UInt128 result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step.
        UInt128 num = n - k + i;
        UInt128 den = i;
        UInt128 g = gcd128(result, den);
        UInt128 r = result / g;
        den /= g;
        num /= den;  // den divides num once result's share is removed
        UInt128 prod;
        if (__builtin_mul_overflow(r, num, &prod)) {
            throw std::overflow_error("binomial: C(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") exceeds 128 bits");
        }
        result = prod;
    }
    return result;
}

BigInt binomial_big(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("binomial_big: k > n");
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

double cm_constant(int m) {
    if (m < 1) throw std::domain_error("cm_constant: m must be >= 1");
    const double log_cm = std::lgamma(2.0 * m + 1.0) - 2.0 * m * std::numbers::ln2 -
                          std::lgamma(m + 1.0) - std::lgamma(static_cast<double>(m));
    return std::exp(log_cm);
}

double central_ratio(int m) {
    if (m < 1) throw std::domain_error("central_ratio: m must be >= 1");
    return std::exp(std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 1.0) -
                    std::lgamma(static_cast<double>(m)));
}

BigInt sinc_alternating_sum(unsigned n) {
    BigInt sum = 0;
    for (unsigned i = 0; i <= n / 2; ++i) {
        BigInt term = binomial_big(n, i) * boost::multiprecision::pow(BigInt(n - 2 * i), n - 1);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

double sinc_power_integral(int n) {
    if (n < 2 || n > 128 || n % 2 != 0) {
        throw std::domain_error("sinc_power_integral: n must be even in [2, 128], got " +
                                std::to_string(n));
    }
    using Float = boost::multiprecision::cpp_bin_float_50;
    BigInt denominator = BigInt(1) << n;
    for (int i = 2; i < n; ++i) denominator *= i;
    Float ratio = Float(sinc_alternating_sum(static_cast<unsigned>(n))) / Float(denominator);
    return static_cast<double>(ratio * boost::math::constants::pi<Float>());
}

}  // namespace daubnorm
