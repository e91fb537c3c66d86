#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/hahn.hpp"
#include "hahnosc/specfun/series.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hahnosc {

/// Q_k(x; a, a, N) == (-1)^k Q_k(N-x; a, a, N)
template <class T>
bool hahn_parity_check(int k, int x, const T& alpha, int N, double tol = 1e-12) {
  const BasicHahnParams<T> p(alpha, alpha, N);
  T lhs = hahn_Q(k, x, p);
  T rhs = hahn_Q(k, N - x, p);
  if (k % 2) rhs = -rhs;
  return nearly_equal(lhs, rhs, tol);
}

/// Q_d(x; a, a, N) through the 4F3 forms in the quadratic variable.
///
/// Even degree 2k: 4F3(-k, k+a+1/2, -x, x-N; a+1, -N/2, (1-N)/2).
/// Odd degree 2k+1: (N-2x)/N 4F3(-k, k+a+3/2, -x, x-N; a+1, (1-N)/2, (2-N)/2).
template <class T>
T hahn_4f3_form(int degree, int x, const T& alpha, int N) {
  const BasicHahnParams<T> p(alpha, alpha, N);
  detail::check_index(degree, N, "degree");
  detail::check_index(x, N, "point x");
  const T one(1), two(2), half = one / two;
  const int k = degree / 2;
  if (degree % 2 == 0)
    return hyp<T>({T(-k), T(k) + alpha + half, T(-x), T(x - N)},
                  {alpha + one, T(-N) / two, T(1 - N) / two}, one);
  if (N == 0) throw DegenerateError("odd 4F3 form needs N > 0");
  return T(N - 2 * x) / T(N) *
         hyp<T>({T(-k), T(k) + alpha + T(3) / two, T(-x), T(x - N)},
                {alpha + one, T(1 - N) / two, T(2 - N) / two}, one);
}

template <class T>
bool hahn_4f3_forms_check(int degree, int x, const T& alpha, int N, double tol = 1e-12) {
  return nearly_equal(hahn_4f3_form(degree, x, alpha, N),
                      hahn_Q(degree, x, BasicHahnParams<T>(alpha, alpha, N)), tol);
}

/// Q_k(i) - Q_k(i+1) == k(k+2a+1)/((a+1) j) Q_{k-1}(i; a+1, a+1, j-1)
template <class T>
bool forward_shift_check(int k, int i, const T& alpha, int j, double tol = 1e-12) {
  if (k < 1 || k > j) throw DomainError("forward shift needs 1 <= k <= j");
  if (i < 0 || i > j - 1) throw DomainError("forward shift needs 0 <= i <= j-1");
  const T one(1);
  const BasicHahnParams<T> p(alpha, alpha, j);
  const BasicHahnParams<T> s(alpha + one, alpha + one, j - 1);
  T lhs = hahn_Q(k, i, p) - hahn_Q(k, i + 1, p);
  T rhs = T(k) * (T(k) + T(2) * alpha + one) / ((alpha + one) * T(j)) * hahn_Q(k - 1, i, s);
  return nearly_equal(lhs, rhs, tol);
}

enum class ReductionStatus { holds, fails, not_applicable };
enum class Parity { even, odd };

namespace detail {
inline wide_float binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return pochhammer(wide_float(n - k + 1), k) / pochhammer(wide_float(1), k);
}
}  // namespace detail

/// The alpha = -1/2 reductions of the Hahn 3F2 to a 2F1 at argument 2.
///
/// even: 3F2(-k, k, -n; 1/2, -j; 1) = (-1)^n C(2j,2n)/C(j,n) 2F1(-2n, -j-k; -2j; 2)
/// odd:  3F2(-k+1, k+1, -n; 3/2, -j+1; 1)
///         = -(-1)^n/(2k) C(2j,2n+1)/C(j-1,n) 2F1(-2n-1, -j-k; -2j; 2)
///
/// The 2F1 at argument 2 alternates with terms far larger than its value, so
/// both sides are summed in extended precision before the comparison.
inline ReductionStatus krawtchouk_reduction(int k, int n, int j, Parity parity, double tol = 1e-10) {
  if (j < 0 || k < 0 || n < 0 || k > j || n > j) throw DomainError("krawtchouk_reduction needs 0 <= k, n <= j");
  using W = wide_float;
  const W sign = n % 2 ? -1 : 1;
  W lhs, rhs;
  if (parity == Parity::even) {
    lhs = hyp<W>({W(-k), W(k), W(-n)}, {W(1) / 2, W(-j)});
    rhs = sign * detail::binomial(2 * j, 2 * n) / detail::binomial(j, n) *
          hyp<W>({W(-2 * n), W(-j - k)}, {W(-2 * j)}, W(2));
  } else {
    if (k == 0 || n > j - 1) return ReductionStatus::not_applicable;
    lhs = hyp<W>({W(1 - k), W(k + 1), W(-n)}, {W(3) / 2, W(1 - j)});
    rhs = -sign / W(2 * k) * detail::binomial(2 * j, 2 * n + 1) / detail::binomial(j - 1, n) *
          hyp<W>({W(-2 * n - 1), W(-j - k)}, {W(-2 * j)}, W(2));
  }
  return nearly_equal(lhs, rhs, tol) ? ReductionStatus::holds : ReductionStatus::fails;
}

/// Parameters of a terminating 4F3(a, b, c, -N; e, f, g; 1) with a prefactor.
template <class T>
struct Balanced4F3 {
  T prefactor;
  std::array<T, 3> top;  // a, b, c
  int N;
  std::array<T, 3> bottom;  // e, f, g

  T value() const {
    return prefactor * hyp<T>({top[0], top[1], top[2], T(-N)}, {bottom[0], bottom[1], bottom[2]}, T(1));
  }
};

namespace detail {
template <class T>
void require_balance(const T& a, const T& b, const T& c, int N, const T& e, const T& f, const T& g) {
  const T lhs = e + f + g;
  const T rhs = T(1) + a + b + c - T(N);
  bool ok;
  if constexpr (scalar_traits<T>::exact)
    ok = lhs == rhs;
  else
    ok = nearly_equal(lhs, rhs, 1e-12);
  if (!ok) throw BalanceError("4F3 is not Saalschuetzian: e+f+g != 1+a+b+c-N");
}
}  // namespace detail

/// Thomae: 4F3(a,b,c,-N; e,f,g) =
///   (f-c)_N (e+f-a-b)_N / ((f)_N (e+f-a-b-c)_N) 4F3(e-a, e-b, c, -N; e, e+f-a-b, e+g-a-b).
template <class T>
Balanced4F3<T> thomae_transform(const T& a, const T& b, const T& c, int N, const T& e, const T& f,
                                const T& g) {
  if (N < 0) throw DomainError("thomae_transform needs N >= 0");
  detail::require_balance(a, b, c, N, e, f, g);
  const T den = pochhammer(f, N) * pochhammer(e + f - a - b - c, N);
  if (den == T(0)) throw PoleInRange("Thomae prefactor has a vanishing denominator", "f or e+f-a-b-c");
  const T pre = pochhammer(f - c, N) * pochhammer(e + f - a - b, N) / den;
  return {pre, {e - a, e - b, c}, N, {e, e + f - a - b, e + g - a - b}};
}

template <class T>
bool thomae_transform_check(const T& a, const T& b, const T& c, int N, const T& e, const T& f, const T& g,
                            double tol = 1e-10) {
  const Balanced4F3<T> lhs{T(1), {a, b, c}, N, {e, f, g}};
  detail::require_balance(a, b, c, N, e, f, g);
  return nearly_equal(lhs.value(), thomae_transform(a, b, c, N, e, f, g).value(), tol);
}

}  // namespace hahnosc
