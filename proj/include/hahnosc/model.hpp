#pragma once

#include "hahnosc/eigensystem.hpp"
#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/classical.hpp"
#include "hahnosc/specfun/hahn.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace hahnosc {

using cplx = std::complex<double>;

/// Representation label j (dimension 2j+1) and deformation alpha > -1.
struct ModelParams {
  int j;
  double alpha;

  ModelParams(int j_, double alpha_) : j(j_), alpha(alpha_) {
    if (j < 0) throw DomainError("j must be a nonnegative integer");
    if (!std::isfinite(alpha) || !(alpha > -1.0)) throw DomainError("alpha must be a finite real > -1");
  }
  int dim() const { return 2 * j + 1; }
};

/// J0, J+, J-, P on the basis |j,m>, row/column index j+m.
struct RepMatrices {
  Eigen::MatrixXd J0, Jp, Jm, P;
};

inline RepMatrices build_rep(const ModelParams& mp) {
  const int n = mp.dim(), j = mp.j;
  const double a = mp.alpha;
  RepMatrices r{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n),
                Eigen::MatrixXd::Zero(n, n)};
  for (int m = -j; m <= j; ++m) {
    const int i = j + m;
    r.J0(i, i) = m;
    r.P(i, i) = i % 2 ? -1.0 : 1.0;
    if (m < j) {
      // J+|j,m> with the even/odd split on j+m
      double c = i % 2 == 0 ? std::sqrt((j - m) * (j + m + 2 * a + 2)) : std::sqrt((j - m + 2 * a + 1) * (j + m + 1));
      r.Jp(i + 1, i) = c;
    }
    if (m > -j) {
      double c = i % 2 == 0 ? std::sqrt((j + m) * (j - m + 2 * a + 2)) : std::sqrt((j + m + 2 * a + 1) * (j - m + 1));
      r.Jm(i - 1, i) = c;
    }
  }
  return r;
}

struct Residual {
  std::string name;
  double value;
};

/// Max-norm residuals of a set of matrix relations, with the scale they are judged against.
struct ResidualReport {
  std::vector<Residual> items;
  double scale = 1.0;

  double max() const {
    double m = 0.0;
    for (const auto& r : items) m = std::max(m, r.value);
    return m;
  }
  bool within(double rel_tol) const { return max() <= rel_tol * scale; }
};

namespace detail {
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}
}  // namespace detail

/// P^2 = 1, [J0, P] = 0, {P, J+-} = 0, [J0, J+-] = +-J+-, [J+, J-] = 2 J0 + 2(2a+1) J0 P.
inline ResidualReport check_algebra_relations(const RepMatrices& r, const ModelParams& mp) {
  using detail::max_abs;
  const auto n = r.J0.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  ResidualReport rep;
  rep.items = {
      {"P^2 = 1", max_abs(r.P * r.P - I)},
      {"[J0,P] = 0", max_abs(r.J0 * r.P - r.P * r.J0)},
      {"{P,J+} = 0", max_abs(r.P * r.Jp + r.Jp * r.P)},
      {"{P,J-} = 0", max_abs(r.P * r.Jm + r.Jm * r.P)},
      {"[J0,J+] = J+", max_abs(r.J0 * r.Jp - r.Jp * r.J0 - r.Jp)},
      {"[J0,J-] = -J-", max_abs(r.J0 * r.Jm - r.Jm * r.J0 + r.Jm)},
      {"[J+,J-] = 2J0 + 2(2a+1)J0P",
       max_abs(r.Jp * r.Jm - r.Jm * r.Jp - 2 * r.J0 - 2 * (2 * mp.alpha + 1) * r.J0 * r.P)},
  };
  rep.scale = std::max(1.0, max_abs(r.Jp * r.Jm));
  return rep;
}

/// Off-diagonal coupling M_k of 2q: sqrt((k+1)(2j+2a-k+1)) for odd k, sqrt((k+2a+2)(2j-k)) for even k.
inline double coupling_M(int k, const ModelParams& mp) {
  if (k < 0 || k > 2 * mp.j - 1)
    throw IndexError("coupling index k = " + std::to_string(k) + " outside 0.." + std::to_string(2 * mp.j - 1));
  const double a = mp.alpha;
  if (k % 2) return std::sqrt((k + 1) * (2 * mp.j + 2 * a - k + 1));
  return std::sqrt((k + 2 * a + 2) * (2 * mp.j - k));
}

enum class OperatorKind { position, momentum };

/// 2q (symmetric) or 2ip (antisymmetric: +M_k above, -M_k below the diagonal).
struct TridiagonalOperator {
  std::vector<double> couplings;
  OperatorKind kind;

  Eigen::MatrixXd matrix() const {
    const auto n = static_cast<Eigen::Index>(couplings.size() + 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      m(k, k + 1) = couplings[k];
      m(k + 1, k) = kind == OperatorKind::position ? couplings[k] : -couplings[k];
    }
    return m;
  }

  /// q = M/2, or the Hermitian p = -i M/2.
  Eigen::MatrixXcd hermitian() const {
    Eigen::MatrixXcd m = matrix().cast<cplx>() / 2.0;
    if (kind == OperatorKind::momentum) m *= cplx(0, -1);
    return m;
  }
};

inline TridiagonalOperator build_Mq(const ModelParams& mp) {
  TridiagonalOperator t{{}, OperatorKind::position};
  for (int k = 0; k < 2 * mp.j; ++k) t.couplings.push_back(coupling_M(k, mp));
  return t;
}

inline TridiagonalOperator build_Mp(const ModelParams& mp) {
  TridiagonalOperator t = build_Mq(mp);
  t.kind = OperatorKind::momentum;
  return t;
}

/// [H, q] = -i p and [H, p] = i q with H = J0 + j + 1/2, plus spec(H) = {n + 1/2}.
inline ResidualReport check_hamiltonian_equations(const ModelParams& mp) {
  using detail::max_abs;
  const RepMatrices r = build_rep(mp);
  const auto n = r.J0.rows();
  const Eigen::MatrixXcd H = (r.J0 + (mp.j + 0.5) * Eigen::MatrixXd::Identity(n, n)).cast<cplx>();
  const Eigen::MatrixXcd q = build_Mq(mp).hermitian(), p = build_Mp(mp).hermitian();
  const cplx i(0, 1);
  ResidualReport rep;
  rep.items = {{"[H,q] = -ip", max_abs(Eigen::MatrixXcd(H * q - q * H + i * p))},
               {"[H,p] = iq", max_abs(Eigen::MatrixXcd(H * p - p * H - i * q))}};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  double dev = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) dev = std::max(dev, std::abs(es.eigenvalues()(k) - (k + 0.5)));
  rep.items.push_back({"spec(H) = {n+1/2}", dev});
  rep.scale = std::max(1.0, max_abs(q));
  return rep;
}

/// q_{+-k} = +-sqrt(k(2a+k+1)), k = 0..j, ascending. Momentum has the same spectrum.
inline std::vector<double> spectrum_q(const ModelParams& mp) {
  std::vector<double> s;
  for (int k = mp.j; k >= 1; --k) s.push_back(-std::sqrt(k * (2 * mp.alpha + k + 1)));
  s.push_back(0.0);
  for (int k = 1; k <= mp.j; ++k) s.push_back(std::sqrt(k * (2 * mp.alpha + k + 1)));
  return s;
}

/// The u(2)_alpha spectrum for half-odd-integer j: -a-j-1/2, ..., -a-1, a+1, ..., a+j+1/2.
inline std::vector<double> u2alpha_spectrum(double j_half, double alpha) {
  const double twice = 2 * j_half;
  if (!(j_half > 0) || std::floor(twice) != twice || static_cast<long>(twice) % 2 == 0)
    throw DomainError("u2alpha_spectrum needs a positive half-odd-integer j");
  if (!(alpha > -1.0)) throw DomainError("alpha must exceed -1");
  const int half_count = static_cast<int>(j_half + 0.5);
  std::vector<double> s;
  for (int t = half_count - 1; t >= 0; --t) s.push_back(-alpha - 1 - t);
  for (int t = 0; t < half_count; ++t) s.push_back(alpha + 1 + t);
  return s;
}

/// Diagonal of the matrix with V = diag(.) U: -i^{k+1} for row k, i.e. -i, 1, i, -1 repeated.
inline Eigen::VectorXcd jay_diagonal(int j) {
  static const cplx cycle[4] = {cplx(0, -1), cplx(1, 0), cplx(0, 1), cplx(-1, 0)};
  Eigen::VectorXcd d(2 * j + 1);
  for (int k = 0; k <= 2 * j; ++k) d(k) = cycle[k % 4];
  return d;
}

/// Closed-form eigenvalues eps_{j+-k} = +-2 sqrt(k(2a+k+1)) of 2q, ascending.
inline Eigen::VectorXd eigenvalues_Mq(const ModelParams& mp) {
  const std::vector<double> s = spectrum_q(mp);
  Eigen::VectorXd e(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) e(i) = 2 * s[i];
  return e;
}

namespace detail {

// column x of the orthonormal tables, or an empty vector when N < 0
inline std::vector<double> hahn_column(int x, double a, int N) {
  if (N < 0) return {};
  return HahnTable::column(x, HahnParams(a, a, N));
}

}  // namespace detail

/// Row `level` of U: the position wavefunction of level `level` on q_{-j..j}.
inline std::vector<double> position_row(const ModelParams& mp, int level) {
  const int j = mp.j;
  if (level < 0 || level > 2 * j) throw DomainError("level outside 0..2j");
  std::vector<double> row(2 * j + 1, 0.0);
  const int i = level / 2;
  const double sgn = i % 2 ? -1.0 : 1.0, r2 = 1.0 / std::sqrt(2.0);
  if (level % 2 == 0) {
    const std::vector<double> q = detail::hahn_column(i, mp.alpha, j);
    row[j] = sgn * q[0];
    for (int k = 1; k <= j; ++k) row[j + k] = row[j - k] = sgn * r2 * q[k];
  } else {
    const std::vector<double> q = detail::hahn_column(i, mp.alpha + 1, j - 1);
    for (int k = 1; k <= j; ++k) {
      row[j + k] = sgn * r2 * q[k - 1];
      row[j - k] = -row[j + k];
    }
  }
  return row;
}

/// Eigenvectors of 2q in closed form (columns ordered by ascending eigenvalue).
///
/// U_{2i,j} = (-1)^i Q~_0(i; a,a,j), U_{2i+1,j} = 0,
/// U_{2i,j+-k} = (-1)^i/sqrt2 Q~_k(i; a,a,j),
/// U_{2i+1,j-+k} = -+(-1)^i/sqrt2 Q~_{k-1}(i; a+1,a+1,j-1).
inline RealEigenSystem build_U(const ModelParams& mp) {
  const int j = mp.j, n = mp.dim();
  RealEigenSystem out;
  out.eigenvalues = eigenvalues_Mq(mp);
  out.vectors = Eigen::MatrixXd::Zero(n, n);
  const HahnTable even(HahnParams(mp.alpha, mp.alpha, j));
  const double r2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i <= j; ++i) {
    const double sgn = i % 2 ? -1.0 : 1.0;
    out.vectors(2 * i, j) = sgn * even(0, i);
    for (int k = 1; k <= j; ++k) out.vectors(2 * i, j + k) = out.vectors(2 * i, j - k) = sgn * r2 * even(k, i);
  }
  if (j >= 1) {
    const HahnTable odd(HahnParams(mp.alpha + 1, mp.alpha + 1, j - 1));
    for (int i = 0; i < j; ++i) {
      const double sgn = i % 2 ? -1.0 : 1.0;
      for (int k = 1; k <= j; ++k) {
        out.vectors(2 * i + 1, j + k) = sgn * r2 * odd(k - 1, i);
        out.vectors(2 * i + 1, j - k) = -out.vectors(2 * i + 1, j + k);
      }
    }
  }
  return out;
}

/// Eigenvectors of 2ip: V = diag(-i^{k+1}) U, eigenvalues i eps.
inline ComplexEigenSystem build_V(const ModelParams& mp, const RealEigenSystem& U) {
  ComplexEigenSystem out;
  out.eigenvalues = U.eigenvalues.cast<cplx>() * cplx(0, 1);
  out.vectors = jay_diagonal(mp.j).asDiagonal() * U.vectors.cast<cplx>();
  return out;
}

inline ComplexEigenSystem build_V(const ModelParams& mp) { return build_V(mp, build_U(mp)); }

/// Wavefunction amplitudes values(n, k): level n at grid point index k (q_{k-j} or p_{k-j}).
struct WaveTable {
  Eigen::MatrixXcd values;
  std::vector<double> grid;
  OperatorKind kind;
  /// Max deviation from the dual Hahn closed forms, when they were evaluated.
  std::optional<double> closed_form_deviation;
};

/// Largest j for which wavefunctions() re-derives every entry from the closed forms.
inline constexpr int closed_form_check_limit = 40;

/// Entry (level, grid index) of the position or momentum table from the dual Hahn closed forms.
///
/// Phi_{2n}(q_k) = (-1)^n/sqrt2 sqrt(w(n)/h(k)) R_n(lambda(k)) on (a, a, j)    (k != 0; no 1/sqrt2 at k = 0)
/// Phi_{2n+1}(q_k) = sign(k) (-1)^n/sqrt2 sqrt(w(n)/h(|k|-1)) R_n(lambda(|k|-1)) on (a+1, a+1, j-1)
/// Psi_{2n}(p_k) = -i (-1)^n Phi_{2n}(q_k),  Psi_{2n+1}(p_k) = (-1)^n Phi_{2n+1}(q_k)
/// Evaluated in extended precision.
inline cplx wavefunction_closed_form(const ModelParams& mp, OperatorKind kind, int level, int grid_index) {
  const int j = mp.j;
  if (level < 0 || level > 2 * j || grid_index < 0 || grid_index > 2 * j)
    throw DomainError("wavefunction indices outside 0..2j");
  const int k = grid_index - j, ak = std::abs(k), n = level / 2;
  const wide_float a(mp.alpha), one(1);
  const wide_float sgn_n = n % 2 ? -1 : 1;
  wide_float phi = 0;
  if (level % 2 == 0) {
    const BasicHahnParams<wide_float> p(a, a, j);
    phi = sgn_n * sqrt(hahn_weight(n, p) / hahn_norm(ak, p)) * dual_hahn_R(n, ak, p);
    if (k != 0) phi /= sqrt(wide_float(2));
  } else if (k != 0) {
    const BasicHahnParams<wide_float> p(a + one, a + one, j - 1);
    phi = sgn_n * sqrt(hahn_weight(n, p) / hahn_norm(ak - 1, p)) * dual_hahn_R(n, ak - 1, p) / sqrt(wide_float(2));
    if (k < 0) phi = -phi;
  }
  const double v = static_cast<double>(phi);
  if (kind == OperatorKind::position) return {v, 0.0};
  if (level % 2 == 0) return cplx(0, -static_cast<double>(sgn_n)) * v;
  return static_cast<double>(sgn_n) * v;
}

inline WaveTable wavefunctions(const ModelParams& mp, OperatorKind kind, const RealEigenSystem& U) {
  WaveTable t;
  t.kind = kind;
  t.grid = spectrum_q(mp);
  if (kind == OperatorKind::position)
    t.values = U.vectors.cast<cplx>();
  else
    t.values = build_V(mp, U).vectors;
  if (mp.j <= closed_form_check_limit) {
    double dev = 0.0;
    for (int r = 0; r < mp.dim(); ++r)
      for (int c = 0; c < mp.dim(); ++c)
        dev = std::max(dev, std::abs(t.values(r, c) - wavefunction_closed_form(mp, kind, r, c)));
    t.closed_form_deviation = dev;
  }
  return t;
}

inline WaveTable wavefunctions(const ModelParams& mp, OperatorKind kind) {
  return wavefunctions(mp, kind, build_U(mp));
}

/// The j -> infinity limit of j^{1/4} Phi_n(sqrt(j) x):
/// even n = 2m: (-1)^m sqrt(m!/Gamma(a+m+1)) |x|^{a+1/2} e^{-x^2/2} L_m^{(a)}(x^2),
/// odd n = 2m+1: (-1)^m sqrt(m!/Gamma(a+m+2)) x |x|^{a+1/2} e^{-x^2/2} L_m^{(a+1)}(x^2).
inline double parabose_wavefunction(int n, double alpha, double x) {
  if (n < 0) throw DomainError("level must be nonnegative");
  const int m = n / 2;
  const double ax = std::abs(x), sgn = m % 2 ? -1.0 : 1.0;
  const double gauss = std::exp(-x * x / 2);
  if (n % 2 == 0) {
    const double c = std::sqrt(std::exp(std::lgamma(m + 1.0) - std::lgamma(alpha + m + 1)));
    return sgn * c * std::pow(ax, alpha + 0.5) * gauss * laguerre(m, alpha, x * x);
  }
  const double c = std::sqrt(std::exp(std::lgamma(m + 1.0) - std::lgamma(alpha + m + 2)));
  return sgn * c * x * std::pow(ax, alpha + 0.5) * gauss * laguerre(m, alpha + 1, x * x);
}

struct LimitError {
  double max_error = 0.0;
  double at_x = std::numeric_limits<double>::quiet_NaN();
  double at_p = std::numeric_limits<double>::quiet_NaN();
  int points = 0;
};

/// Max over native grid points x_k = q_k / sqrt(j), |x_k| <= bound, of
/// |j^{1/4} Phi_n(q_k) - limit(x_k)|. For alpha < -1/2 the limit is unbounded
/// at x = 0 and that point is left out.
inline LimitError parabose_limit_error(const ModelParams& mp, int n, double bound) {
  if (n < 0 || n > 2 * mp.j) throw DomainError("level outside 0..2j");
  const std::vector<double> row = position_row(mp, n), q = spectrum_q(mp);
  const double sj = std::sqrt(static_cast<double>(mp.j)), qj = std::pow(static_cast<double>(mp.j), 0.25);
  LimitError e;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double x = q[k] / sj;
    if (std::abs(x) > bound) continue;
    if (x == 0.0 && mp.alpha < -0.5) continue;
    const double d = std::abs(qj * row[k] - parabose_wavefunction(n, mp.alpha, x));
    ++e.points;
    if (d > e.max_error || e.points == 1) {
      e.max_error = d;
      e.at_x = x;
    }
  }
  return e;
}

}  // namespace hahnosc
