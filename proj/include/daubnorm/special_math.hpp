#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace daubnorm {

using BigInt = boost::multiprecision::cpp_int;
using UInt128 = unsigned __int128;

/// Exact binomial coefficient C(n, k).
/// Throws std::domain_error for k > n and std::overflow_error when the
/// value does not fit in 128 bits (n = 128 still fits for every k).
UInt128 binomial(unsigned n, unsigned k);

/// Unbounded variant, used by the alternating sums.
BigInt binomial_big(unsigned n, unsigned k);

/// c_m = Gamma(m + 1/2) / (sqrt(pi) Gamma(m)) = (2m)! / (2^{2m} m! (m-1)!).
/// Evaluated from the factorial form in log space.
double cm_constant(int m);

/// The central binomial ratio (2m)! / (m! (m-1)!) that appears in several bounds.
double central_ratio(int m);

/// Signed sum  sum_{i=0}^{n/2} (-1)^i C(n,i) (n-2i)^{n-1}, exact.
BigInt sinc_alternating_sum(unsigned n);

/// Integral of (sin t / t)^n over [0, inf) for even n in [2, 128].
/// The alternating sum is accumulated exactly and divided once at the end.
double sinc_power_integral(int n);

}  // namespace daubnorm
