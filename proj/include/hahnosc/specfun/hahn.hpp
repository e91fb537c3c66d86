#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hahnosc {

/// Parameters (alpha, beta, N) of the Hahn family; alpha, beta > -1.
template <class T>
struct BasicHahnParams {
  T alpha;
  T beta;
  int N;

  BasicHahnParams(T a, T b, int n) : alpha(std::move(a)), beta(std::move(b)), N(n) {
    if (!(alpha > T(-1)) || !(beta > T(-1)))
      throw DomainError("Hahn parameters require alpha > -1 and beta > -1");
    if (N < 0) throw DomainError("Hahn parameter N must be nonnegative");
  }
};

using HahnParams = BasicHahnParams<double>;

namespace detail {
inline void check_index(int v, int N, const char* what) {
  if (v < 0 || v > N)
    throw DomainError(std::string(what) + " = " + std::to_string(v) + " outside 0.." +
                      std::to_string(N));
}
}  // namespace detail

/// Q_n(x; alpha, beta, N) from its defining 3F2 at unit argument.
template <class T>
T hahn_Q(int n, int x, const BasicHahnParams<T>& p) {
  detail::check_index(n, p.N, "degree n");
  detail::check_index(x, p.N, "point x");
  const T one(1);
  return hyp<T>({T(-n), T(n) + p.alpha + p.beta + one, T(-x)}, {p.alpha + one, T(-p.N)}, one);
}

/// lambda(n) = n(n + alpha + beta + 1), the dual Hahn variable.
template <class T>
T dual_hahn_lambda(int n, const BasicHahnParams<T>& p) {
  return T(n) * (T(n) + p.alpha + p.beta + T(1));
}

/// R_x(lambda(k)): the Hahn 3F2 read as a polynomial of degree x in lambda(k).
template <class T>
T dual_hahn_R(int x, int k, const BasicHahnParams<T>& p) {
  detail::check_index(x, p.N, "degree x");
  detail::check_index(k, p.N, "index k");
  const T one(1);
  return hyp<T>({T(-x), T(-k), T(k) + p.alpha + p.beta + one}, {p.alpha + one, T(-p.N)}, one);
}

/// w(x) = (alpha+1)_x / x! * (beta+1)_{N-x} / (N-x)!
template <class T>
T hahn_weight(int x, const BasicHahnParams<T>& p) {
  detail::check_index(x, p.N, "point x");
  const T one(1);
  return pochhammer(p.alpha + one, x) / pochhammer(one, x) * pochhammer(p.beta + one, p.N - x) /
         pochhammer(one, p.N - x);
}

/// Squared norm h(n) of Q_n with respect to w.
template <class T>
T hahn_norm(int n, const BasicHahnParams<T>& p) {
  detail::check_index(n, p.N, "degree n");
  const T one(1);
  const int N = p.N;
  const T ab = p.alpha + p.beta;
  if (n == 0) return pochhammer(ab + T(2), N) / pochhammer(one, N);
  return pochhammer(T(n) + ab + one, N + 1) * pochhammer(p.beta + one, n) * pochhammer(one, n) /
         ((T(2 * n) + ab + one) * pochhammer(p.alpha + one, n) * pochhammer(T(N - n + 1), n) *
          pochhammer(one, N));
}

inline SignedLog log_hahn_weight(int x, const HahnParams& p) {
  detail::check_index(x, p.N, "point x");
  return log_pochhammer(p.alpha + 1, x) / SignedLog{log_factorial(x), 1} *
         log_pochhammer(p.beta + 1, p.N - x) / SignedLog{log_factorial(p.N - x), 1};
}

inline SignedLog log_hahn_norm(int n, const HahnParams& p) {
  detail::check_index(n, p.N, "degree n");
  const int N = p.N;
  const double ab = p.alpha + p.beta;
  const SignedLog nf{log_factorial(N), 1};
  if (n == 0) return log_pochhammer(ab + 2, N) / nf;
  SignedLog num = log_pochhammer(n + ab + 1, N + 1) * log_pochhammer(p.beta + 1, n) *
                  SignedLog{log_factorial(n), 1};
  SignedLog den = SignedLog::of(2 * n + ab + 1) * log_pochhammer(p.alpha + 1, n) *
                  SignedLog{log_factorial(N) - log_factorial(N - n), 1} * nf;
  return num / den;
}

/// Q_n by the three-term recurrence in the degree, started from Q_0 = 1.
///
/// Cheap but loses accuracy for large N; HahnTable is the stable bulk path.
inline double hahn_Q_recurrence(int n, int x, const HahnParams& p) {
  detail::check_index(n, p.N, "degree n");
  detail::check_index(x, p.N, "point x");
  const double a = p.alpha, b = p.beta, N = p.N;
  double prev = 0.0, cur = 1.0;
  for (int m = 0; m < n; ++m) {
    double A = m == 0 ? (a + 1) * N / (a + b + 2)
                      : (m + a + b + 1) * (m + a + 1) * (N - m) /
                            ((2 * m + a + b + 1) * (2 * m + a + b + 2));
    double C = m == 0 ? 0.0 : m * (m + a + b + N + 1) * (m + b) / ((2 * m + a + b) * (2 * m + a + b + 1));
    double next = ((A + C - x) * cur - C * prev) / A;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Orthonormal Hahn functions Q~_n(x) = sqrt(w(x)/h(n)) Q_n(x) as a dense table.
///
/// Column x is the eigenvector for the exact eigenvalue x of the Jacobi
/// matrix of the normalized three-term recurrence in n. It is obtained by a
/// twisted factorization (forward and backward pivots joined where the
/// eigenvector is best determined), scaled to unit norm and signed so that
/// Q~_0(x) > 0. The error is of order N * eps independently of alpha and beta.
class HahnTable {
 public:
  explicit HahnTable(const HahnParams& p) : p_(p), n1_(p.N + 1), v_(n1_ * n1_) {
    const Jacobi jac(p);
    for (int x = 0; x <= p.N; ++x) {
      std::vector<double> c = jac.eigenvector(x);
      for (int n = 0; n <= p.N; ++n) v_[n * n1_ + x] = c[n];
    }
  }

  const HahnParams& params() const { return p_; }
  int N() const { return p_.N; }
  /// Q~_n(x)
  double operator()(int n, int x) const { return v_[n * n1_ + x]; }

  /// Q~_n(x) for n = 0..N at one point x.
  static std::vector<double> column(int x, const HahnParams& p) {
    detail::check_index(x, p.N, "point x");
    return Jacobi(p).eigenvector(x);
  }

 private:
  // x q_n = -off_n q_{n+1} + diag_n q_n - off_{n-1} q_{n-1}
  struct Jacobi {
    std::vector<double> diag, off;
    double scale = 1.0;

    explicit Jacobi(const HahnParams& p) : diag(p.N + 1), off(p.N) {
      const double a = p.alpha, b = p.beta;
      const int N = p.N;
      auto A = [&](int n) {
        return n == 0 ? (a + 1) * N / (a + b + 2)
                      : (n + a + b + 1) * (n + a + 1) * (N - n) / ((2 * n + a + b + 1) * (2 * n + a + b + 2));
      };
      auto C = [&](int n) {
        return n == 0 ? 0.0 : n * (n + a + b + N + 1) * (n + b) / ((2 * n + a + b) * (2 * n + a + b + 1));
      };
      for (int n = 0; n <= N; ++n) {
        diag[n] = A(n) + C(n);
        if (n < N) off[n] = std::sqrt(A(n) * C(n + 1));
        scale = std::max(scale, std::abs(diag[n]) + (n < N ? 2 * off[n] : 0.0));
      }
    }

    std::vector<double> eigenvector(int x) const {
      const std::size_t n1 = diag.size();
      if (n1 == 1) return {1.0};
      const double tiny = scale * std::numeric_limits<double>::epsilon() * 1e-3;
      auto guard = [tiny](double d) { return d == 0.0 ? tiny : d; };
      std::vector<double> dp(n1), dm(n1), L(n1 - 1), U(n1 - 1);
      dp[0] = guard(diag[0] - x);
      for (std::size_t k = 0; k + 1 < n1; ++k) {
        L[k] = -off[k] / dp[k];
        dp[k + 1] = guard(diag[k + 1] - x + L[k] * off[k]);
      }
      dm[n1 - 1] = guard(diag[n1 - 1] - x);
      for (std::size_t k = n1 - 1; k-- > 0;) {
        U[k] = -off[k] / dm[k + 1];
        dm[k] = guard(diag[k] - x + U[k] * off[k]);
      }
      std::size_t r = 0;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < n1; ++k) {
        double g = std::abs(dp[k] + dm[k] - (diag[k] - x));
        if (g < best) {
          best = g;
          r = k;
        }
      }
      std::vector<double> z(n1);
      z[r] = 1.0;
      for (std::size_t k = r; k-- > 0;) z[k] = -L[k] * z[k + 1];
      for (std::size_t k = r; k + 1 < n1; ++k) z[k + 1] = -U[k] * z[k];
      double m = 0.0;
      for (double v : z) m = std::max(m, std::abs(v));
      double s = 0.0;
      for (double& v : z) {
        v /= m;
        s += v * v;
      }
      s = (z[0] < 0 ? -1.0 : 1.0) / std::sqrt(s);
      for (double& v : z) v *= s;
      return z;
    }
  };

  HahnParams p_;
  std::size_t n1_;
  std::vector<double> v_;
};

/// Q~_n(x; alpha, beta, N) at one point, by the stable column recurrence.
inline double hahn_tilde(int n, int x, const HahnParams& p) {
  detail::check_index(n, p.N, "degree n");
  return HahnTable::column(x, p)[n];
}

}  // namespace hahnosc
