#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/scalar.hpp"

#include <cmath>
#include <limits>

namespace hahnosc {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x) by its three-term recurrence.
inline double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be nonnegative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Bessel function J_nu(x) = (x/2)^nu / Gamma(nu+1) * 0F1(; nu+1; -x^2/4).
///
/// The alternating 0F1 sum is carried in extended precision. Supported for
/// nu > -1 and |x| <= 50; negative x only for integer nu.
inline double bessel_J(double nu, double x) {
  if (!(nu > -1.0)) throw DomainError("bessel_J: order must exceed -1");
  if (!std::isfinite(x) || std::abs(x) > 50.0) throw RangeError("bessel_J: |x| > 50 is outside the supported range");
  const bool integer_order = std::floor(nu) == nu;
  if (x < 0.0) {
    if (!integer_order) throw DomainError("bessel_J: negative argument needs an integer order");
    double v = bessel_J(nu, -x);
    return static_cast<long>(nu) % 2 ? -v : v;
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const wide_float z = -wide_float(x) * wide_float(x) / 4;
  const wide_float b = wide_float(nu) + 1;
  wide_float term = 1, sum = 1;
  const wide_float eps("1e-40");
  for (int t = 0; t < 10000; ++t) {
    term *= z / ((b + t) * (t + 1));
    sum += term;
    if (t > x && abs(term) < eps * abs(sum)) break;
  }
  const double pre = std::exp(nu * std::log(x / 2) - std::lgamma(nu + 1));
  return pre * static_cast<double>(sum);
}

}  // namespace hahnosc
