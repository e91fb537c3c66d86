#include "hahnosc/model.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hahnosc;

namespace {

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams(-1, 0), DomainError);
  EXPECT_THROW(ModelParams(2, -1), DomainError);
  EXPECT_THROW(ModelParams(2, std::nan("")), DomainError);
  EXPECT_EQ(ModelParams(3, 0).dim(), 7);
}

TEST(BuildRep, ClassicalEntriesAtMinusHalf) {
  const ModelParams mp(3, -0.5);
  const RepMatrices r = build_rep(mp);
  for (int m = -3; m < 3; ++m) EXPECT_NEAR(r.Jp(3 + m + 1, 3 + m), std::sqrt((3.0 - m) * (3.0 + m + 1)), 1e-14);
  for (int m = -2; m <= 3; ++m) EXPECT_NEAR(r.Jm(3 + m - 1, 3 + m), std::sqrt((3.0 + m) * (3.0 - m + 1)), 1e-14);
}

TEST(BuildRep, ParityAndRaising) {
  const RepMatrices r = build_rep(ModelParams(1, 0));
  EXPECT_EQ(r.P(0, 0), 1);
  EXPECT_EQ(r.P(1, 1), -1);
  EXPECT_EQ(r.P(2, 2), 1);
  EXPECT_DOUBLE_EQ(r.Jp(1, 0), 2.0);
  EXPECT_EQ(r.J0(0, 0), -1);
  EXPECT_EQ(r.J0(2, 2), 1);
}

TEST(BuildRep, StarCondition) {
  const RepMatrices r = build_rep(ModelParams(4, 0.8));
  EXPECT_EQ(max_abs(r.Jp - r.Jm.transpose()), 0.0);
}

TEST(AlgebraRelations, Hold) {
  for (auto [j, a] : {std::pair{2, 1.7}, {3, 0.3}, {6, -0.9}, {1, 0.0}}) {
    const ModelParams mp(j, a);
    const auto rep = check_algebra_relations(build_rep(mp), mp);
    EXPECT_TRUE(rep.within(1e-12)) << rep.max();
  }
  const ModelParams mp(3, 0.3);
  const RepMatrices r = build_rep(mp);
  EXPECT_LE(max_abs(r.P * r.Jp + r.Jp * r.P), 1e-12);
}

TEST(AlgebraRelations, UndeformedAtMinusHalf) {
  const RepMatrices r = build_rep(ModelParams(4, -0.5));
  EXPECT_LE(max_abs(r.Jp * r.Jm - r.Jm * r.Jp - 2 * r.J0), 1e-12);
}

TEST(AlgebraRelations, DetectsCorruption) {
  const ModelParams mp(2, 1.0);
  RepMatrices r = build_rep(mp);
  r.Jp(1, 0) *= 1.01;
  EXPECT_FALSE(check_algebra_relations(r, mp).within(1e-12));
}

TEST(CouplingM, Examples) {
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(coupling_M(k, ModelParams(2, 0)), std::sqrt(8.0), 1e-14);
  for (double a : {-0.6, 0.0, 2.2}) {
    EXPECT_NEAR(coupling_M(0, ModelParams(1, a)), 2 * std::sqrt(a + 1), 1e-14);
    EXPECT_NEAR(coupling_M(1, ModelParams(1, a)), 2 * std::sqrt(a + 1), 1e-14);
  }
  for (int k = 0; k < 10; ++k) EXPECT_NEAR(coupling_M(k, ModelParams(5, -0.5)), std::sqrt((k + 1.0) * (10 - k)), 1e-13);
  EXPECT_THROW(coupling_M(-1, ModelParams(2, 0)), IndexError);
  EXPECT_THROW(coupling_M(4, ModelParams(2, 0)), IndexError);
}

TEST(CouplingM, PositiveNearLowerEdge) {
  const ModelParams mp(10, -0.999);
  for (int k = 0; k < 20; ++k) EXPECT_GT(coupling_M(k, mp), 0.0);
}

TEST(Operators, MatchRepresentation) {
  const ModelParams mp(3, 0.6);
  const RepMatrices r = build_rep(mp);
  const auto Mq = build_Mq(mp), Mp = build_Mp(mp);
  EXPECT_LE(max_abs(Mq.matrix() - (r.Jp + r.Jm)), 1e-14);
  EXPECT_LE(max_abs(Mp.matrix() - (r.Jm - r.Jp)), 1e-14);
  EXPECT_EQ(Mp.matrix()(0, 1), Mq.couplings[0]);
  EXPECT_EQ(Mp.matrix()(1, 0), -Mq.couplings[0]);
  EXPECT_LE(max_abs(Eigen::MatrixXcd(Mp.hermitian() - Mp.hermitian().adjoint())), 0.0);
  const auto one = build_Mq(ModelParams(1, 0)).matrix();
  EXPECT_DOUBLE_EQ(one(0, 1), 2.0);
  EXPECT_DOUBLE_EQ(one(1, 2), 2.0);
}

TEST(Hamiltonian, Equations) {
  for (auto [j, a] : {std::pair{1, 0.0}, {2, 1.3}, {7, -0.8}, {4, -0.5}}) {
    const auto rep = check_hamiltonian_equations(ModelParams(j, a));
    EXPECT_TRUE(rep.within(1e-12)) << rep.max();
  }
}

TEST(Spectrum, Examples) {
  auto s = spectrum_q(ModelParams(4, -0.5));
  for (int k = -4; k <= 4; ++k) EXPECT_NEAR(s[k + 4], k, 1e-14);
  s = spectrum_q(ModelParams(2, 0));
  const std::vector<double> expect = {-std::sqrt(6.0), -std::sqrt(2.0), 0, std::sqrt(2.0), std::sqrt(6.0)};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(s[i], expect[i], 1e-14);
  s = spectrum_q(ModelParams(1, 0.35));
  EXPECT_NEAR(s[2], std::sqrt(2 * 0.35 + 2), 1e-14);
  EXPECT_EQ(spectrum_q(ModelParams(0, 1)), std::vector<double>{0.0});
}

TEST(Spectrum, SymmetricWithSingleZero) {
  const auto s = spectrum_q(ModelParams(9, -0.95));
  int zeros = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i], -s[s.size() - 1 - i]);
    zeros += s[i] == 0.0;
    if (i) {
      EXPECT_LT(s[i - 1], s[i]);
    }
  }
  EXPECT_EQ(zeros, 1);
}

TEST(U2Alpha, Spectrum) {
  EXPECT_EQ(u2alpha_spectrum(1.5, 0), (std::vector<double>{-2, -1, 1, 2}));
  EXPECT_EQ(u2alpha_spectrum(2.5, -0.5), (std::vector<double>{-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}));
  EXPECT_EQ(u2alpha_spectrum(4.5, 0.3).size(), 10u);
  EXPECT_THROW(u2alpha_spectrum(2, 0), DomainError);
  EXPECT_THROW(u2alpha_spectrum(-0.5, 0), DomainError);
}

TEST(BuildU, SmallCases) {
  const auto U0 = build_U(ModelParams(0, 1.2));
  EXPECT_EQ(U0.vectors.rows(), 1);
  EXPECT_NEAR(U0.vectors(0, 0), 1.0, 1e-15);
  const ModelParams mp(2, 0);
  const auto U = build_U(mp);
  const Eigen::MatrixXd Mq = build_Mq(mp).matrix();
  EXPECT_LE(max_abs(U.vectors.transpose() * U.vectors - Eigen::MatrixXd::Identity(5, 5)), 1e-14);
  EXPECT_LE(max_abs(Mq * U.vectors - U.vectors * U.eigenvalues.asDiagonal()), 1e-13);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(U.vectors(2 * i + 1, 2), 0.0);
}

TEST(BuildU, Grid) {
  for (double a : {-0.9, -0.5, 0.0, 2.5})
    for (int j : {1, 3, 8, 21, 60}) {
      const ModelParams mp(j, a);
      const auto U = build_U(mp);
      const auto n = mp.dim();
      EXPECT_LE(max_abs(U.vectors.transpose() * U.vectors - Eigen::MatrixXd::Identity(n, n)), 1e-10);
      EXPECT_LE(max_abs(build_Mq(mp).matrix() * U.vectors - U.vectors * U.eigenvalues.asDiagonal()), 1e-9);
      for (int k = 0; k <= j; ++k) EXPECT_NEAR(U.eigenvalues(j + k), 2 * std::sqrt(k * (2 * a + k + 1)), 1e-12);
    }
}

TEST(BuildU, PositionRowMatchesTable) {
  const ModelParams mp(9, 0.45);
  const auto U = build_U(mp);
  for (int lvl = 0; lvl < mp.dim(); ++lvl) {
    const auto row = position_row(mp, lvl);
    for (int c = 0; c < mp.dim(); ++c) EXPECT_NEAR(row[c], U.vectors(lvl, c), 1e-14);
  }
  EXPECT_THROW(position_row(mp, 19), DomainError);
}

TEST(BuildV, Properties) {
  const auto V0 = build_V(ModelParams(0, 3));
  EXPECT_EQ(V0.vectors(0, 0), cplx(0, -1));
  for (auto [j, a] : {std::pair{2, 0.7}, {5, -0.3}, {12, 2.0}}) {
    const ModelParams mp(j, a);
    const auto V = build_V(mp);
    const auto n = mp.dim();
    EXPECT_LE(max_abs(Eigen::MatrixXcd(V.vectors * V.vectors.adjoint() - Eigen::MatrixXcd::Identity(n, n))), 1e-13);
    const Eigen::MatrixXcd VtV = V.vectors.transpose() * V.vectors;
    const Eigen::MatrixXcd anti = -Eigen::MatrixXd::Identity(n, n).rowwise().reverse().cast<cplx>();
    EXPECT_LE(max_abs(Eigen::MatrixXcd(VtV - anti)), 1e-12);
    const Eigen::MatrixXd Mp = build_Mp(mp).matrix();
    EXPECT_LE(max_abs(Eigen::MatrixXcd(Mp * V.vectors - V.vectors * V.eigenvalues.asDiagonal())), 1e-10);
    for (int k = 0; k < n; ++k) EXPECT_EQ(V.eigenvalues(k).real(), 0.0);
  }
}

TEST(Wavefunctions, ClosedFormAgreement) {
  for (auto [j, a] : {std::pair{4, 1.3}, {1, 0.0}, {17, -0.7}, {40, 2.5}})
    for (auto kind : {OperatorKind::position, OperatorKind::momentum}) {
      const auto t = wavefunctions(ModelParams(j, a), kind);
      ASSERT_TRUE(t.closed_form_deviation.has_value());
      EXPECT_LE(*t.closed_form_deviation, 1e-11) << j << " " << a;
    }
  EXPECT_FALSE(wavefunctions(ModelParams(41, 0), OperatorKind::position).closed_form_deviation.has_value());
}

TEST(Wavefunctions, Unitarity) {
  const auto t = wavefunctions(ModelParams(30, -0.7), OperatorKind::momentum);
  for (Eigen::Index r = 0; r < t.values.rows(); ++r) EXPECT_NEAR(t.values.row(r).squaredNorm(), 1.0, 1e-10);
  for (Eigen::Index c = 0; c < t.values.cols(); ++c) EXPECT_NEAR(t.values.col(c).squaredNorm(), 1.0, 1e-10);
}

TEST(Wavefunctions, EvenMomentumLevelsImaginary) {
  const auto t = wavefunctions(ModelParams(6, 0.9), OperatorKind::momentum);
  for (Eigen::Index r = 0; r < t.values.rows(); ++r)
    for (Eigen::Index c = 0; c < t.values.cols(); ++c)
      EXPECT_EQ(r % 2 == 0 ? t.values(r, c).real() : t.values(r, c).imag(), 0.0);
}

TEST(Parabose, Examples) {
  EXPECT_NEAR(parabose_wavefunction(0, 2, 1), std::exp(-0.5) / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(parabose_wavefunction(0, 2, 1), 0.42888, 5e-6);
  // a = -1/2 gives the Hermite functions
  for (double x : {-1.3, 0.4, 2.0}) {
    const double h0 = std::exp(-x * x / 2) / std::pow(M_PI, 0.25);
    EXPECT_NEAR(parabose_wavefunction(0, -0.5, x), h0, 1e-13);
    EXPECT_NEAR(parabose_wavefunction(1, -0.5, x), std::sqrt(2.0) * x * h0, 1e-13);
    EXPECT_NEAR(parabose_wavefunction(2, -0.5, x), (2 * x * x - 1) / std::sqrt(2.0) * h0, 1e-13);
  }
}

TEST(Parabose, ConvergesForPositiveAlpha) {
  for (int n = 0; n <= 2; ++n) {
    const double e50 = parabose_limit_error(ModelParams(50, 2), n, 2).max_error;
    const double e200 = parabose_limit_error(ModelParams(200, 2), n, 2).max_error;
    EXPECT_LT(e200, e50) << n;
  }
  const auto e = parabose_limit_error(ModelParams(50, -0.7), 0, 2);
  EXPECT_GT(e.points, 0);
  EXPECT_NE(e.at_x, 0.0);
}

TEST(Deformation, Continuity) {
  const ModelParams near(6, -0.5 + 1e-9), base(6, -0.5);
  EXPECT_LE(max_abs(build_Mq(near).matrix() - build_Mq(base).matrix()), 1e-7);
}

TEST(JayDiagonal, Cycle) {
  const auto d = jay_diagonal(3);
  EXPECT_EQ(d(0), cplx(0, -1));
  EXPECT_EQ(d(1), cplx(1, 0));
  EXPECT_EQ(d(2), cplx(0, 1));
  EXPECT_EQ(d(3), cplx(-1, 0));
  EXPECT_EQ(d(4), cplx(0, -1));
}
