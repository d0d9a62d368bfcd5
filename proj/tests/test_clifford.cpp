#include <gtest/gtest.h>

#include "relspin/clifford.hpp"

using namespace relspin;

namespace {

// Standard-representation matrices typed in entry by entry.
OperatorMatrix literal(std::initializer_list<Complex> entries) {
  OperatorMatrix m;
  auto it = entries.begin();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = *it++;
  }
  return m;
}

const Complex i{0.0, 1.0};

}  // namespace

TEST(GammaBasis, MatchesHandWrittenMatrices) {
  const auto& g = dirac();
  EXPECT_EQ(g.gamma[0], literal({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(g.gamma[1], literal({0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0}));
  EXPECT_EQ(g.gamma[2], literal({0, 0, 0, -i, 0, 0, i, 0, 0, i, 0, 0, -i, 0, 0, 0}));
  EXPECT_EQ(g.gamma[3], literal({0, 0, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_LT(max_abs_diff(g.gamma5, literal({0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0})), kExactTolerance);
  EXPECT_EQ(g.sigma[2], literal({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}));
}

TEST(GammaBasis, Gamma5SquaresToIdentity) {
  EXPECT_LT(max_abs_diff(dirac().gamma5 * dirac().gamma5, OperatorMatrix::Identity()), kExactTolerance);
}

TEST(GammaBasis, AnticommutatorIsTwiceMetric) {
  const auto& g = dirac().gamma;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const OperatorMatrix expected = 2.0 * MetricSignature::eta(mu, nu) * OperatorMatrix::Identity();
      EXPECT_LT(max_abs_diff(anticommutator(g[mu], g[nu]), expected), kExactTolerance) << mu << nu;
    }
  }
}

TEST(GammaBasis, HermiticityPattern) {
  const auto& b = dirac();
  EXPECT_LT(max_abs_diff(b.gamma[0].adjoint(), b.gamma[0]), kExactTolerance);
  for (int k = 1; k < 4; ++k) EXPECT_LT(max_abs_diff(b.gamma[k].adjoint(), -b.gamma[k]), kExactTolerance);
  EXPECT_LT(max_abs_diff(b.gamma5.adjoint(), b.gamma5), kExactTolerance);
  for (int mu = 0; mu < 4; ++mu) EXPECT_LT(max_abs(anticommutator(b.gamma5, b.gamma[mu])), kExactTolerance);
}

TEST(GammaBasis, SigmaAlgebra) {
  const auto& s = dirac().sigma;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      OperatorMatrix expected = (a == b ? 1.0 : 0.0) * OperatorMatrix::Identity();
      for (int c = 0; c < 3; ++c) expected += kI * double(levi_civita3(a, b, c)) * s[c];
      EXPECT_LT(max_abs_diff(s[a] * s[b], expected), kExactTolerance);
    }
  }
}

TEST(GammaBasis, AlphaIsGamma5TimesSigma) {
  const auto& b = dirac();
  for (int k = 0; k < 3; ++k) EXPECT_LT(max_abs_diff(b.alpha[k], b.gamma5 * b.sigma[k]), kExactTolerance);
}

TEST(SpinTensorRest, Examples) {
  EXPECT_LT(max_abs(spin_tensor_rest(1, 1)), kExactTolerance);
  EXPECT_LT(max_abs_diff(spin_tensor_rest(1, 2), dirac().sigma[2]), kExactTolerance);
  EXPECT_LT(max_abs_diff(spin_tensor_rest(2, 1), -dirac().sigma[2]), kExactTolerance);
}

TEST(SpinTensorRest, SpatialBlockIsEpsilonSigma) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      OperatorMatrix expected = OperatorMatrix::Zero();
      for (int c = 0; c < 3; ++c) expected += double(levi_civita3(a, b, c)) * dirac().sigma[c];
      EXPECT_LT(max_abs_diff(spin_tensor_rest(a + 1, b + 1), expected), kExactTolerance);
    }
  }
  const auto dual = spatial_dual(rest_spin_tensor());
  for (int k = 0; k < 3; ++k) EXPECT_LT(max_abs_diff(dual[k], dirac().sigma[k]), kExactTolerance);
}

TEST(SpinTensorRest, RejectsBadIndex) {
  EXPECT_THROW(spin_tensor_rest(4, 0), std::out_of_range);
  EXPECT_THROW(spin_tensor_rest(0, -1), std::out_of_range);
}

TEST(LeviCivita, Examples) {
  EXPECT_EQ(levi_civita4(IndexPosition::upper, 0, 1, 2, 3), 1);
  EXPECT_EQ(levi_civita4(IndexPosition::upper, 0, 1, 2, 2), 0);
  EXPECT_EQ(levi_civita4(IndexPosition::lower, 0, 1, 2, 2), 0);
  EXPECT_EQ(levi_civita4(IndexPosition::upper, 1, 0, 2, 3), -1);
  EXPECT_EQ(levi_civita4(IndexPosition::lower, 0, 1, 2, 3), -1);
  EXPECT_THROW(levi_civita4(IndexPosition::upper, 0, 1, 2, 4), std::out_of_range);
}

TEST(LeviCivita, LoweringMatchesMetricContraction) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          const double lowered = MetricSignature::diagonal[a] * MetricSignature::diagonal[b] *
                                 MetricSignature::diagonal[c] * MetricSignature::diagonal[d] *
                                 levi_civita4(IndexPosition::upper, a, b, c, d);
          EXPECT_EQ(lowered, levi_civita4(IndexPosition::lower, a, b, c, d));
        }
      }
    }
  }
}

TEST(LeviCivita, ThreeDimensional) {
  EXPECT_EQ(levi_civita3(0, 1, 2), 1);
  EXPECT_EQ(levi_civita3(2, 1, 0), -1);
  EXPECT_EQ(levi_civita3(1, 2, 0), 1);
  EXPECT_EQ(levi_civita3(0, 0, 2), 0);
  EXPECT_THROW(levi_civita3(0, 1, 3), std::out_of_range);
}

TEST(DiracConjugate, GammaMatricesAreSelfConjugate) {
  for (const auto& g : dirac().gamma) EXPECT_LT(max_abs_diff(dirac_conjugate(g), g), kExactTolerance);
}
