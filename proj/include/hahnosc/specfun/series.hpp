#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hahnosc {

/// Rising factorial a(a+1)...(a+k-1); 1 for k == 0.
template <class T>
T pochhammer(const T& a, unsigned k) {
  T r(1);
  for (unsigned i = 0; i < k; ++i) r *= a + T(static_cast<long>(i));
  return r;
}

/// Real number held as sign and log of magnitude. sign == 0 means exactly zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  static SignedLog zero() { return {-std::numeric_limits<double>::infinity(), 0}; }
  static SignedLog of(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v < 0 ? -1 : 1};
  }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator/(SignedLog a, SignedLog b) {
    if (b.sign == 0) throw DomainError("SignedLog: division by zero");
    if (a.sign == 0) return zero();
    return {a.log_abs - b.log_abs, a.sign * b.sign};
  }
};

/// Log-magnitude/sign form of (a)_k, safe far beyond double range.
inline SignedLog log_pochhammer(double a, unsigned k) {
  SignedLog r{0.0, 1};
  unsigned i = 0;
  // factors a+i <= 0 one by one, so lgamma only sees positive arguments
  for (; i < k && a + i <= 0.0; ++i) {
    double f = a + i;
    if (f == 0.0) return SignedLog::zero();
    r.log_abs += std::log(-f);
    r.sign = -r.sign;
  }
  if (i == k) return r;
  if (k - i <= 32) {
    double prod = 1.0;
    for (; i < k; ++i) prod *= a + i;
    r.log_abs += std::log(prod);
  } else {
    r.log_abs += std::lgamma(a + k) - std::lgamma(a + i);
  }
  return r;
}

inline double log_factorial(unsigned n) { return std::lgamma(n + 1.0); }

/// Neumaier-compensated accumulator; plain sum for exact scalars.
template <class T>
class Accumulator {
 public:
  void add(const T& v) {
    if constexpr (scalar_traits<T>::exact) {
      sum_ += v;
    } else {
      using std::abs;
      T t = sum_ + v;
      if (abs(sum_) >= abs(v))
        comp_ += (sum_ - t) + v;
      else
        comp_ += (v - t) + sum_;
      sum_ = t;
    }
  }
  T value() const {
    if constexpr (scalar_traits<T>::exact)
      return sum_;
    else
      return sum_ + comp_;
  }

 private:
  T sum_{0};
  T comp_{0};
};

/// Terminating generalized hypergeometric series pFq(num; den; z).
///
/// The series stops at the smallest n for which some numerator equals -n.
/// A denominator equal to -d with d < n would divide by zero inside the sum
/// and is rejected here.
template <class T>
class HypSeries {
 public:
  HypSeries(std::vector<T> numerator, std::vector<T> denominator, T argument)
      : num_(std::move(numerator)), den_(std::move(denominator)), arg_(std::move(argument)) {
    std::optional<long> n;
    for (const auto& a : num_) {
      auto m = scalar_traits<T>::nonpositive_integer(a);
      if (m && (!n || *m < *n)) n = m;
    }
    if (!n) throw DomainError("series does not terminate: no nonpositive integer numerator");
    termination_ = static_cast<std::size_t>(*n);
    for (std::size_t i = 0; i < den_.size(); ++i) {
      auto d = scalar_traits<T>::nonpositive_integer(den_[i]);
      if (d && static_cast<std::size_t>(*d) < termination_) {
        std::ostringstream os;
        os << "denominator parameter #" << i << " = -" << *d << " vanishes before termination at t = "
           << termination_;
        throw PoleInRange(os.str(), "denominator[" + std::to_string(i) + "]");
      }
    }
  }

  const std::vector<T>& numerator() const { return num_; }
  const std::vector<T>& denominator() const { return den_; }
  const T& argument() const { return arg_; }
  std::size_t termination_index() const { return termination_; }

 private:
  std::vector<T> num_;
  std::vector<T> den_;
  T arg_;
  std::size_t termination_ = 0;
};

/// Sum of a terminating series via the term ratio t -> t+1.
template <class T>
T terminating_hyp(const HypSeries<T>& s) {
  Accumulator<T> acc;
  T term(1);
  acc.add(term);
  for (std::size_t t = 0; t < s.termination_index(); ++t) {
    const T tt(static_cast<long>(t));
    T ratio = s.argument() / T(static_cast<long>(t + 1));
    for (const auto& a : s.numerator()) ratio *= a + tt;
    for (const auto& b : s.denominator()) ratio /= b + tt;
    term *= ratio;
    acc.add(term);
  }
  return acc.value();
}

template <class T>
T hyp(std::vector<T> num, std::vector<T> den, T z = T(1)) {
  return terminating_hyp(HypSeries<T>(std::move(num), std::move(den), std::move(z)));
}

}  // namespace hahnosc
