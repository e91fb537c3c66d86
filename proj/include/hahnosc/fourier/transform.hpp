#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/fourier/poisson.hpp"
#include "hahnosc/model.hpp"
#include "hahnosc/specfun/classical.hpp"
#include "hahnosc/specfun/hahn.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace hahnosc {

enum class FourierRoute { from_uv, direct_sum, closed_form };

inline std::string route_name(FourierRoute r) {
  switch (r) {
    case FourierRoute::from_uv: return "uv";
    case FourierRoute::direct_sum: return "direct";
    default: return "closed";
  }
}

/// The discrete Hahn-Fourier matrix; storage index j+k for the label k = -j..j.
struct HahnFourierMatrix {
  Eigen::MatrixXcd entries;
  FourierRoute route;
  ModelParams params;

  /// F_{j+k, j+l} for k, l in -j..j
  cplx at(int k, int l) const { return entries(params.j + k, params.j + l); }
};

/// F = U^T V
inline HahnFourierMatrix F_from_UV(const ModelParams& mp) {
  const RealEigenSystem U = build_U(mp);
  const ComplexEigenSystem V = build_V(mp, U);
  return {U.vectors.transpose().cast<cplx>() * V.vectors, FourierRoute::from_uv, mp};
}

namespace detail {

// sum_n (-1)^n a_n b_n for two table rows
inline double alternating_dot(const HahnTable& t, int k, int l) {
  Accumulator<double> acc;
  for (int n = 0; n <= t.N(); ++n) acc.add(n % 2 ? -t(k, n) * t(l, n) : t(k, n) * t(l, n));
  return acc.value();
}

// F_{j+sk, j+tl} from the two alternating sums
//   F_{j+sk, j+tl} = -(i/2) E(k,l) + st/2 O(k-1,l-1)   (k, l >= 1)
//   F_{j+sk, j}    = -(i/sqrt2) E(k,0)
//   F_{j, j}       = -i E(0,0)
template <class EvenSum, class OddSum>
Eigen::MatrixXcd assemble_fourier(int j, EvenSum&& E, OddSum&& O) {
  const int n = 2 * j + 1;
  Eigen::MatrixXcd F(n, n);
  const cplx mi(0, -1);
  F(j, j) = mi * E(0, 0);
  for (int k = 1; k <= j; ++k) {
    const cplx edge = mi / std::sqrt(2.0) * E(k, 0);
    F(j + k, j) = F(j - k, j) = F(j, j + k) = F(j, j - k) = edge;
  }
  for (int k = 1; k <= j; ++k)
    for (int l = k; l <= j; ++l) {
      const cplx even = 0.5 * mi * E(k, l);
      const double odd = 0.5 * O(k - 1, l - 1);
      for (int s : {-1, 1})
        for (int t : {-1, 1}) F(j + s * k, j + t * l) = F(j + t * l, j + s * k) = even + double(s * t) * odd;
    }
  return F;
}

}  // namespace detail

/// F entrywise from the alternating sums of orthonormal Hahn functions.
inline HahnFourierMatrix F_direct(const ModelParams& mp) {
  const int j = mp.j;
  const HahnTable even(HahnParams(mp.alpha, mp.alpha, j));
  if (j == 0) return {Eigen::MatrixXcd::Constant(1, 1, cplx(0, -1) * even(0, 0) * even(0, 0)), FourierRoute::direct_sum, mp};
  const HahnTable odd(HahnParams(mp.alpha + 1, mp.alpha + 1, j - 1));
  auto E = [&](int k, int l) { return detail::alternating_dot(even, k, l); };
  auto O = [&](int k, int l) { return detail::alternating_dot(odd, k, l); };
  return {detail::assemble_fourier(j, E, O), FourierRoute::direct_sum, mp};
}

/// F from the closed 4F3 forms: sum_n (-1)^n Q~_k Q~_l = S(k,l)/sqrt(h_k h_l),
/// with S and h on (a, a, j) for the imaginary part and on (a+1, a+1, j-1) for the real part.
inline HahnFourierMatrix F_closed(const ModelParams& mp) {
  const int j = mp.j;
  const wide_float a(mp.alpha), a1 = a + 1;
  auto sum = [](const wide_float& al, int N) {
    const BasicHahnParams<wide_float> p(al, al, N);
    std::vector<wide_float> h(N + 1);
    for (int k = 0; k <= N; ++k) h[k] = hahn_norm(k, p);
    return [al, N, h](int k, int l) {
      if ((k + l + N) % 2) return 0.0;
      return static_cast<double>(S_closed(k, l, al, N) / sqrt(h[k] * h[l]));
    };
  };
  auto E = sum(a, j);
  if (j == 0) return {Eigen::MatrixXcd::Constant(1, 1, cplx(0, -E(0, 0))), FourierRoute::closed_form, mp};
  auto O = sum(a1, j - 1);
  return {detail::assemble_fourier(j, E, O), FourierRoute::closed_form, mp};
}

inline HahnFourierMatrix build_F(const ModelParams& mp, FourierRoute r) {
  switch (r) {
    case FourierRoute::from_uv: return F_from_UV(mp);
    case FourierRoute::direct_sum: return F_direct(mp);
    default: return F_closed(mp);
  }
}

/// Route agreement threshold: 1e-10 (j <= 10), 1e-8 (j <= 30), 1e-6 beyond.
inline double route_tolerance(int j) {
  if (j <= 10) return 1e-10;
  if (j <= 30) return 1e-8;
  return 1e-6;
}

inline double max_deviation(const HahnFourierMatrix& a, const HahnFourierMatrix& b) {
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

/// Eigenvalue counts in the order (-i, 1, i, -1).
using Multiplicities = std::array<int, 4>;

/// (n+1, n, n, n) for j = 2n and (n+1, n+1, n+1, n) for j = 2n+1.
inline Multiplicities expected_multiplicities(int j) {
  const int n = j / 2;
  if (j % 2 == 0) return {n + 1, n, n, n};
  return {n + 1, n + 1, n + 1, n};
}

struct FourierProperties {
  double symmetry;        // max |F - F^T|
  double unitarity;       // max |F F^* - I|
  double fourth_power;    // max |F^4 - I|
  double eigen_relation;  // max |F U^T - U^T diag(jay)|
  double parity_split;    // max over entries of min(|Re|, |Im|)
  Multiplicities from_jay;
  Multiplicities from_traces;
  Multiplicities expected;

  bool multiplicities_ok() const { return from_jay == expected && from_traces == expected; }
};

/// Structural properties of F. Multiplicities are counted twice: from the
/// diagonal of the eigenvalue matrix jay, and independently from tr F^m, m = 0..3.
inline FourierProperties F_properties(const HahnFourierMatrix& F) {
  const ModelParams& mp = F.params;
  const auto n = F.entries.rows();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd& f = F.entries;
  const Eigen::MatrixXcd f2 = f * f;
  const Eigen::MatrixXd Ut = build_U(mp).vectors.transpose();
  const Eigen::VectorXcd jay = jay_diagonal(mp.j);
  FourierProperties p{};
  p.symmetry = (f - f.transpose()).cwiseAbs().maxCoeff();
  p.unitarity = (f * f.adjoint() - I).cwiseAbs().maxCoeff();
  p.fourth_power = (f2 * f2 - I).cwiseAbs().maxCoeff();
  p.eigen_relation = (f * Ut.cast<cplx>() - Ut.cast<cplx>() * jay.asDiagonal()).cwiseAbs().maxCoeff();
  p.parity_split = 0.0;
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      p.parity_split = std::max(p.parity_split, std::min(std::abs(f(r, c).real()), std::abs(f(r, c).imag())));
  p.from_jay = {0, 0, 0, 0};
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx v = jay(k);
    int slot = v.imag() < -0.5 ? 0 : v.real() > 0.5 ? 1 : v.imag() > 0.5 ? 2 : 3;
    ++p.from_jay[slot];
  }
  // m_1 + m_-1 + m_i + m_-i = n, tr F = m_1 - m_-1 + i(m_i - m_-i),
  // tr F^2 = m_1 + m_-1 - m_i - m_-i
  const cplx t1 = f.trace(), t2 = f2.trace();
  const double plus = (static_cast<double>(n) + t2.real()) / 2, minus = (static_cast<double>(n) - t2.real()) / 2;
  const double m1 = (plus + t1.real()) / 2, mm1 = (plus - t1.real()) / 2;
  const double mi = (minus + t1.imag()) / 2, mmi = (minus - t1.imag()) / 2;
  p.from_traces = {static_cast<int>(std::lround(mmi)), static_cast<int>(std::lround(m1)),
                   static_cast<int>(std::lround(mi)), static_cast<int>(std::lround(mm1))};
  p.expected = expected_multiplicities(mp.j);
  return p;
}

/// The per-entry limit of sqrt(j) F_{j+k, j+l} at x = q_k/sqrt(j), p = q_l/sqrt(j):
/// -i |xp|^{1/2} J_a(|xp|) when k+l+j is even, xp |xp|^{-1/2} J_{a+1}(|xp|) when odd.
inline cplx bessel_kernel(double x, double p, double alpha, bool even) {
  const double t = std::abs(x * p);
  if (even) {
    if (t == 0.0) {
      if (alpha > -0.5) return 0.0;
      if (alpha == -0.5) return cplx(0, -std::sqrt(2 / M_PI));
      return cplx(0, -std::numeric_limits<double>::infinity());
    }
    return cplx(0, -std::sqrt(t) * bessel_J(alpha, t));
  }
  if (t == 0.0) return 0.0;
  return (x * p < 0 ? -1.0 : 1.0) * std::sqrt(t) * bessel_J(alpha + 1, t);
}

/// Max over native grid points with |x|, |p| <= bound of |sqrt(j) F_{j+k, j+l} - kernel(x, p)|.
/// Entries come from the direct sums, restricted to the admitted block.
inline LimitError kernel_limit_error(double alpha, int j, double bound) {
  if (j < 2 || j % 2) throw DomainError("kernel limit needs an even j");
  const ModelParams mp(j, alpha);
  const std::vector<double> q = spectrum_q(mp);
  const double sj = std::sqrt(static_cast<double>(j));
  int kmax = 0;
  while (kmax < j && q[j + kmax + 1] / sj <= bound) ++kmax;
  const HahnTable even(HahnParams(alpha, alpha, j));
  const HahnTable odd(HahnParams(alpha + 1, alpha + 1, j - 1));
  LimitError e;
  const cplx mi(0, -1);
  for (int k = -kmax; k <= kmax; ++k)
    for (int l = -kmax; l <= kmax; ++l) {
      const int ak = std::abs(k), al = std::abs(l);
      cplx f;
      if (ak == 0 && al == 0)
        f = mi * detail::alternating_dot(even, 0, 0);
      else if (ak == 0 || al == 0)
        f = mi / std::sqrt(2.0) * detail::alternating_dot(even, ak + al, 0);
      else
        f = 0.5 * mi * detail::alternating_dot(even, ak, al) +
            double((k > 0) == (l > 0) ? 1 : -1) * 0.5 * detail::alternating_dot(odd, ak - 1, al - 1);
      const double x = q[j + k] / sj, p = q[j + l] / sj;
      const cplx target = bessel_kernel(x, p, alpha, (ak + al + j) % 2 == 0);
      if (!std::isfinite(std::abs(target))) continue;
      const double d = std::abs(sj * f - target);
      ++e.points;
      if (d > e.max_error || e.points == 1) {
        e.max_error = d;
        e.at_x = x;
        e.at_p = p;
      }
    }
  return e;
}

}  // namespace hahnosc
