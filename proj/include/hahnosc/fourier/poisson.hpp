#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/hahn.hpp"
#include "hahnosc/specfun/series.hpp"

namespace hahnosc {

namespace detail {
inline void check_kernel_indices(int k, int l, int j) {
  if (j < 0 || k < 0 || l < 0 || k > j || l > j)
    throw DomainError("kernel indices need 0 <= k, l <= j");
}
}  // namespace detail

/// S(k,l,alpha,j) = sum_n (-1)^n w(n; alpha, alpha, j) Q_k(n) Q_l(n)
template <class T>
T S_direct(int k, int l, const T& alpha, int j) {
  detail::check_kernel_indices(k, l, j);
  const BasicHahnParams<T> p(alpha, alpha, j);
  Accumulator<T> acc;
  for (int n = 0; n <= j; ++n) {
    T v = hahn_weight(n, p) * hahn_Q(k, n, p) * hahn_Q(l, n, p);
    acc.add(n % 2 ? T(-v) : v);
  }
  return acc.value();
}

namespace detail {

template <class T>
T power(const T& x, int m) {
  T r(1);
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

template <class T>
T kl_even_even(int K, int L, const T& a, int J) {
  const T one(1), half = one / T(2);
  T pre = power(T(4), J) * pochhammer(half, J - K) * pochhammer(half, J - L) * pochhammer(a + one, J) *
          pochhammer(a + T(J + 1), K) * pochhammer(a + T(J + 1), L) /
          (pochhammer(one, 2 * J) * pochhammer(half, J));
  return pre * hyp<T>({T(-K), T(K) + a + half, T(-L), T(L) + a + half}, {a + T(J + 1), a + one, T(-J)});
}

template <class T>
T kl_odd_odd(int K, int L, const T& a, int J) {
  const T one(1), half = one / T(2), three_half = T(3) / T(2);
  T pre = power(T(4), J) * pochhammer(half, J - K) * pochhammer(half, J - L) * pochhammer(a + one, J + 1) *
          pochhammer(a + T(J + 2), K) * pochhammer(a + T(J + 2), L) /
          (pochhammer(one, 2 * J) * T(J) * pochhammer(half, J));
  return pre * hyp<T>({T(-K), T(K) + a + three_half, T(-L), T(L) + a + three_half},
                      {a + T(J + 2), a + one, T(1 - J)});
}

// even 2K against odd 2L+1 in dimension 2J+1 (+1)
template <class T>
T kl_even_odd(int K, int L, const T& a, int J) {
  const T one(1), half = one / T(2), three_half = T(3) / T(2);
  T pre = T(2) * power(T(4), J) * pochhammer(half, J - K + 1) * pochhammer(half, J - L) *
          pochhammer(a + one, J + 1) * pochhammer(a + T(J + 2), K) * pochhammer(a + T(J + 2), L) /
          (pochhammer(one, 2 * J + 1) * pochhammer(half, J + 1));
  return pre * hyp<T>({T(-K), T(K) + a + half, T(-L), T(L) + a + three_half}, {a + T(J + 2), a + one, T(-J)});
}

}  // namespace detail

/// Closed terminating 4F3 form of S(k,l,alpha,j); zero when k+l+j is odd.
///
/// (2K, 2L, 2J) and (2K+1, 2L+1, 2J) have their own forms; (2K, 2L+1, 2J+1)
/// has a third, and (2K+1, 2L, 2J+1) reuses it with K and L exchanged.
template <class T>
T S_closed(int k, int l, const T& alpha, int j) {
  detail::check_kernel_indices(k, l, j);
  if ((k + l + j) % 2) return T(0);
  if (j % 2 == 0) {
    const int J = j / 2;
    if (k % 2 == 0) return detail::kl_even_even(k / 2, l / 2, alpha, J);
    return detail::kl_odd_odd((k - 1) / 2, (l - 1) / 2, alpha, J);
  }
  const int J = (j - 1) / 2;
  if (k % 2 == 0) return detail::kl_even_odd(k / 2, (l - 1) / 2, alpha, J);
  return detail::kl_even_odd(l / 2, (k - 1) / 2, alpha, J);
}

/// T_n(K,L) = (-1)^n w(n; a, a, 2J) 4F3(-K, K+a+1/2, -n, n-2J; a+1, -J, -J+1/2) (same with L)
template <class T>
T poisson_term(int n, int K, int L, const T& alpha, int J) {
  if (n < 0 || n > 2 * J) throw DomainError("term index n outside 0..2J");
  const T one(1), half = one / T(2);
  auto f = [&](int M) {
    return hyp<T>({T(-M), T(M) + alpha + half, T(-n), T(n - 2 * J)}, {alpha + one, T(-J), half - T(J)});
  };
  T v = hahn_weight(n, BasicHahnParams<T>(alpha, alpha, 2 * J)) * f(K) * f(L);
  return n % 2 ? T(-v) : v;
}

/// Sum over 0..2J equals twice the half sum with the middle term halved,
/// and the upper half sum J..2J equals the lower half sum 0..J.
template <class T>
bool sum_split_check(int K, int L, const T& alpha, int J, double tol = 1e-12) {
  if (J < 0 || K < 0 || L < 0 || K > J || L > J) throw DomainError("sum split needs 0 <= K, L <= J");
  Accumulator<T> total, lower, upper, half_sum;
  for (int n = 0; n <= 2 * J; ++n) {
    const T t = poisson_term(n, K, L, alpha, J);
    total.add(t);
    if (n <= J) lower.add(t);
    if (n >= J) upper.add(t);
    if (n < J) half_sum.add(t);
    if (n == J) half_sum.add(t / T(2));
  }
  return nearly_equal(total.value(), T(2) * half_sum.value(), tol) &&
         nearly_equal(upper.value(), lower.value(), tol);
}

}  // namespace hahnosc
