#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <optional>

namespace hahnosc {

/// Extended-precision float for ill-conditioned series (about 100 decimal digits).
using wide_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                 boost::multiprecision::et_off>;

/// Per-scalar hooks used by the series engine. Specialized for exact rationals.
template <class T>
struct scalar_traits {
  static constexpr bool exact = false;

  /// n when v == -n for some integer n >= 0.
  static std::optional<long> nonpositive_integer(const T& v) {
    using std::floor;
    if (v > T(0)) return std::nullopt;
    T f = floor(v);
    if (f != v) return std::nullopt;
    return static_cast<long>(-f);
  }

  static double to_double(const T& v) { return static_cast<double>(v); }
};

template <class T>
double to_double(const T& v) {
  return scalar_traits<T>::to_double(v);
}

template <class T>
T from_long(long v) {
  return T(v);
}

/// a == b for exact scalars; otherwise |a-b| <= tol * max(1, |a|, |b|).
template <class T>
bool nearly_equal(const T& a, const T& b, double tol) {
  if constexpr (scalar_traits<T>::exact) {
    return a == b;
  } else {
    using std::abs;
    T scale = abs(a) > abs(b) ? abs(a) : abs(b);
    if (scale < T(1)) scale = T(1);
    return abs(a - b) <= T(tol) * scale;
  }
}

}  // namespace hahnosc
