#pragma once

#include "hahnosc/eigensystem.hpp"
#include "hahnosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace hahnosc::oracle {

/// Symmetric tridiagonal matrix by its diagonal and off-diagonal.
struct SymTridiag {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;

  SymTridiag(std::vector<double> d, std::vector<double> e) : diagonal(std::move(d)), offdiagonal(std::move(e)) {
    if (diagonal.empty() ? !offdiagonal.empty() : offdiagonal.size() + 1 != diagonal.size())
      throw DomainError("SymTridiag: off-diagonal must be one shorter than the diagonal");
    for (double v : offdiagonal)
      if (!std::isfinite(v)) throw DomainError("SymTridiag: non-finite off-diagonal entry");
  }

  std::size_t size() const { return diagonal.size(); }

  Eigen::MatrixXd dense() const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diagonal[i];
    for (Eigen::Index i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = offdiagonal[i];
    return m;
  }
};

/// Full eigendecomposition by implicit QL iterations with Wilkinson-type shifts.
///
/// Eigenvalues are returned ascending. Each pair is checked against
/// |M v - e v| <= tol * |M|; a violation, or more than 30 sweeps for one
/// eigenvalue, raises ConvergenceError with the offending index.
inline RealEigenSystem eigen_sym_tridiag(const SymTridiag& m, double tol = 1e-12) {
  const int n = static_cast<int>(m.size());
  RealEigenSystem out;
  if (n == 0) return out;
  std::vector<double> d = m.diagonal, e(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) e[i] = m.offdiagonal[i];
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0, tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int mm = l;
    while (mm < n - 1 && std::abs(e[mm]) > eps * tst1) ++mm;
    if (mm > l) {
      int iter = 0;
      do {
        if (++iter > 30) throw ConvergenceError("QL iteration did not converge", static_cast<std::size_t>(l));
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;
        p = d[mm];
        double c = 1.0, c2 = 1.0, c3 = 1.0, s = 0.0, s2 = 0.0;
        const double el1 = e[l + 1];
        for (int i = mm - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  out.eigenvalues.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = d[order[i]];
    out.vectors.col(i) = V.col(order[i]);
  }
  const Eigen::MatrixXd M = m.dense();
  const double norm = std::max(M.cwiseAbs().rowwise().sum().maxCoeff(), std::numeric_limits<double>::min());
  for (int i = 0; i < n; ++i) {
    double res = (M * out.vectors.col(i) - out.eigenvalues(i) * out.vectors.col(i)).norm();
    if (res > tol * norm) throw ConvergenceError("eigenpair residual above tolerance", static_cast<std::size_t>(i));
  }
  return out;
}

struct AlignedEigenSystem {
  RealEigenSystem system;
  double max_deviation;
};

/// Flips candidate columns so that, at the reference column's entry of largest
/// magnitude, both have the same sign; then reports the max entrywise deviation.
inline AlignedEigenSystem align_signs(const RealEigenSystem& reference, const RealEigenSystem& candidate,
                                      double tol = 1e-9) {
  const Eigen::Index n = reference.size();
  if (candidate.size() != n || reference.vectors.rows() != candidate.vectors.rows())
    throw DomainError("align_signs: dimension mismatch");
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double a = reference.eigenvalues(i), b = reference.eigenvalues(i + 1);
    if (std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)}))
      throw DegenerateError("align_signs: eigenvalues " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " coincide; per-column sign alignment is ill-posed");
  }
  AlignedEigenSystem out{candidate, 0.0};
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index at = 0;
    reference.vectors.col(c).cwiseAbs().maxCoeff(&at);
    if ((reference.vectors(at, c) < 0) != (out.system.vectors(at, c) < 0)) out.system.vectors.col(c) *= -1.0;
  }
  if (n > 0) out.max_deviation = (reference.vectors - out.system.vectors).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace hahnosc::oracle
