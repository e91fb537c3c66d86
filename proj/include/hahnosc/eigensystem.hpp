#pragma once

#include <Eigen/Dense>

#include <complex>

namespace hahnosc {

/// Ordered eigenvalues with the eigenvector of eigenvalue l in column l.
template <class S>
struct EigenSystem {
  using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  static constexpr bool complex_field = !std::is_same_v<S, double>;

  Vector eigenvalues;
  Matrix vectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

using RealEigenSystem = EigenSystem<double>;
using ComplexEigenSystem = EigenSystem<std::complex<double>>;

}  // namespace hahnosc
