#include "htype/algebra.hpp"
#include "htype/errors.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using htype::HTypeAlgebra;
using htype::Matrix;
using htype::Vector;

namespace {

Vector vec(std::initializer_list<double> v) { return oracle::to_eigen(oracle::Vec(v)); }

}  // namespace

TEST(Algebra, HeisenbergOneMatchesClassicalBlock) {
  const auto h = HTypeAlgebra::heisenberg(1);
  EXPECT_EQ(h.m(), 2);
  EXPECT_EQ(h.n(), 1);
  Matrix expected(2, 2);
  expected << 0, 1, -1, 0;
  EXPECT_EQ(h.generator(0), expected);
  EXPECT_TRUE((h.generator(0) + h.generator(0).transpose()).isZero(0.0));
}

TEST(Algebra, HeisenbergTwoIsBlockDiagonalAndValid) {
  const auto h = HTypeAlgebra::heisenberg(2);
  EXPECT_EQ(h.m(), 4);
  EXPECT_EQ(h.n(), 1);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 1) = expected(2, 3) = 1;
  expected(1, 0) = expected(3, 2) = -1;
  EXPECT_EQ(h.generator(0), expected);
  const auto r = validate_htype(h, 100, 1e-9);
  EXPECT_TRUE(r.htype_ok);
  EXPECT_TRUE(r.iwasawa_ok);
}

TEST(Algebra, ZeroBlockCountIsRejected) {
  EXPECT_THROW(HTypeAlgebra::heisenberg(0), htype::InvalidDimension);
  EXPECT_THROW(HTypeAlgebra::quaternionic(0), htype::InvalidDimension);
  EXPECT_THROW(HTypeAlgebra::custom(0, 1, {}), htype::InvalidDimension);
  EXPECT_THROW(HTypeAlgebra::custom(2, 0, {}), htype::InvalidDimension);
}

TEST(Algebra, QuaternionicUnitsAnticommuteExactly) {
  const auto q = HTypeAlgebra::quaternionic(1);
  ASSERT_EQ(q.m(), 4);
  ASSERT_EQ(q.n(), 3);
  const Matrix& i = q.generator(0);
  const Matrix& j = q.generator(1);
  const Matrix& k = q.generator(2);
  EXPECT_EQ(i * j, -(j * i));
  EXPECT_EQ(i * i, -Matrix::Identity(4, 4));
  // Left multiplication: i(j x) = (ij) x = k x.
  EXPECT_EQ(i * j, k);
  const auto r = validate_htype(q, 100, 1e-9);
  EXPECT_TRUE(r.htype_ok);
  EXPECT_TRUE(r.iwasawa_ok);
}

TEST(Algebra, OctonionicGeneratorsSquareToMinusIdentity) {
  const auto o = HTypeAlgebra::octonionic();
  ASSERT_EQ(o.m(), 8);
  ASSERT_EQ(o.n(), 7);
  for (int k = 0; k < 7; ++k) {
    EXPECT_EQ(o.generator(k) * o.generator(k), -Matrix::Identity(8, 8)) << "k=" << k;
  }
  const auto r = validate_htype(o, 100, 1e-9);
  EXPECT_TRUE(r.htype_ok);
  EXPECT_TRUE(r.iwasawa_ok);
}

TEST(Algebra, OctonionicPairingOfFirstBasisVectorsIsUnit) {
  const auto o = HTypeAlgebra::octonionic();
  Vector e0 = Vector::Zero(8), e1 = Vector::Zero(8);
  e0[0] = 1;
  e1[1] = 1;
  // <U^k e_0, e_1> = <e_k, e_1> = δ_k1 in the chosen table.
  const Vector pairing = o.central_pairing(e0, e1);
  EXPECT_DOUBLE_EQ(pairing.norm(), 1.0);
  EXPECT_DOUBLE_EQ(pairing[0], 1.0);
  EXPECT_DOUBLE_EQ(o.bracket(e0, e1).norm(), 2.0);
}

TEST(Algebra, CustomEqualsBuiltin) {
  Matrix u(2, 2);
  u << 0, 1, -1, 0;
  EXPECT_EQ(HTypeAlgebra::custom(2, 1, {u}), HTypeAlgebra::heisenberg(1));
}

TEST(Algebra, ScaledGeneratorFailsOrthogonalityWithResidualThree) {
  Matrix u(2, 2);
  u << 0, 2, -2, 0;
  const auto r = validate_htype(HTypeAlgebra::custom(2, 1, {u}), 10, 1e-9);
  EXPECT_FALSE(r.htype_ok);
  EXPECT_DOUBLE_EQ(r.orthogonality_residual, 3.0);  // UᵀU = 4I
  EXPECT_DOUBLE_EQ(r.skew_residual, 0.0);
}

TEST(Algebra, CustomRejectsShapeErrors) {
  EXPECT_THROW(HTypeAlgebra::custom(2, 2, {Matrix::Zero(2, 2)}), htype::DimensionMismatch);
  EXPECT_THROW(HTypeAlgebra::custom(2, 1, {Matrix::Zero(2, 3)}), htype::DimensionMismatch);
  EXPECT_THROW(HTypeAlgebra::custom(3, 1, {Matrix::Zero(2, 2)}), htype::DimensionMismatch);
}

TEST(Algebra, TruncatedQuaternionicIsHTypeButNotIwasawa) {
  const auto t = oracle::truncated_quaternionic();
  const auto r = validate_htype(t, 100, 1e-9);
  EXPECT_TRUE(r.htype_ok);
  EXPECT_FALSE(r.iwasawa_ok);
  EXPECT_GE(r.iwasawa_residual, 0.1);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->i, 0);
  EXPECT_EQ(r.witness->j, 1);
  EXPECT_NEAR(r.witness->x.norm(), 1.0, 1e-12);
}

TEST(Algebra, TruncatedIwasawaResidualEqualsNorm) {
  // U^1U^2 x = U^3 x is orthogonal to span{U^1 x, U^2 x} and has length |x|.
  const auto t = oracle::truncated_quaternionic();
  std::mt19937_64 rng(7);
  for (int s = 0; s < 500; ++s) {
    Vector x = oracle::random_vector(rng, 4).normalized();
    EXPECT_NEAR(iwasawa_residual(t, 0, 1, x), 1.0, 1e-9);
  }
}

TEST(Algebra, HeisenbergIwasawaConditionIsVacuous) {
  const auto r = validate_htype(HTypeAlgebra::heisenberg(1), 100, 1e-9);
  EXPECT_TRUE(r.iwasawa_ok);
  EXPECT_EQ(r.iwasawa_residual, 0.0);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Algebra, BuiltinResidualsAreTiny) {
  for (const auto& alg : oracle::builtins()) {
    const auto r = validate_htype(alg, 200, 1e-12);
    EXPECT_TRUE(r.htype_ok) << alg.label();
    EXPECT_TRUE(r.iwasawa_ok) << alg.label();
    EXPECT_LE(std::max(r.htype_residual(), r.iwasawa_residual), 1e-12) << alg.label();
  }
}

TEST(Algebra, ValidationIsDeterministicInSeed) {
  const auto t = oracle::truncated_quaternionic();
  const auto a = validate_htype(t, 50, 1e-9, 99);
  const auto b = validate_htype(t, 50, 1e-9, 99);
  EXPECT_EQ(a.iwasawa_residual, b.iwasawa_residual);
  EXPECT_EQ(a.witness->x, b.witness->x);
  EXPECT_THROW(validate_htype(t, 0, 1e-9), htype::Error);
}

TEST(Bracket, HeisenbergBasisPair) {
  const auto h = HTypeAlgebra::heisenberg(1);
  // U^1 e1 = (0, -1), <(0,-1), e2> = -1, doubled.
  EXPECT_DOUBLE_EQ(h.bracket(vec({1, 0}), vec({0, 1}))[0], -2.0);
}

TEST(Bracket, VanishesOnDiagonalAndIsAntisymmetric) {
  std::mt19937_64 rng(1);
  for (const auto& alg : oracle::builtins()) {
    for (int s = 0; s < 200; ++s) {
      const Vector x = oracle::random_vector(rng, alg.m());
      const Vector y = oracle::random_vector(rng, alg.m());
      EXPECT_LE(alg.bracket(x, x).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((alg.bracket(x, y) + alg.bracket(y, x)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Bracket, IsBilinear) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  for (const auto& alg : oracle::builtins()) {
    for (int s = 0; s < 200; ++s) {
      const Vector x = oracle::random_vector(rng, alg.m());
      const Vector y = oracle::random_vector(rng, alg.m());
      const Vector z = oracle::random_vector(rng, alg.m());
      const double a = normal(rng), b = normal(rng);
      const Vector lhs = alg.bracket(a * x + b * z, y);
      const Vector rhs = a * alg.bracket(x, y) + b * alg.bracket(z, y);
      EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12 * (1 + rhs.norm()));
    }
  }
}

TEST(Bracket, LengthMismatchThrows) {
  const auto h = HTypeAlgebra::heisenberg(1);
  EXPECT_THROW(h.bracket(vec({1, 0, 0}), vec({0, 1})), htype::DimensionMismatch);
  EXPECT_THROW(h.j_map(vec({1, 1}), vec({0, 1})), htype::DimensionMismatch);
  EXPECT_THROW(horizontal_form(h, vec({1}), vec({0, 1})), htype::DimensionMismatch);
}

TEST(JMap, ZeroCentralVectorGivesZero) {
  const auto o = HTypeAlgebra::octonionic();
  std::mt19937_64 rng(3);
  EXPECT_TRUE(o.j_map(Vector::Zero(7), oracle::random_vector(rng, 8)).isZero(0.0));
}

TEST(JMap, HeisenbergValue) {
  const auto h = HTypeAlgebra::heisenberg(1);
  const Vector jx = h.j_map(vec({1}), vec({1, 0}));
  EXPECT_DOUBLE_EQ(jx[0], 0.0);
  EXPECT_DOUBLE_EQ(jx[1], -2.0);
}

TEST(JMap, DualToBracket) {
  std::mt19937_64 rng(4);
  for (const auto& alg : oracle::builtins()) {
    for (int s = 0; s < 1000; ++s) {
      const Vector t = oracle::random_vector(rng, alg.n());
      const Vector x = oracle::random_vector(rng, alg.m());
      const Vector y = oracle::random_vector(rng, alg.m());
      const double lhs = alg.j_map(t, x).dot(y);
      const double rhs = t.dot(alg.bracket(x, y));
      EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::abs(rhs))) << alg.label();
    }
  }
}

TEST(JMap, UnitCentralDirectionScalesNormByConstantTwo) {
  std::mt19937_64 rng(5);
  for (const auto& alg : oracle::builtins()) {
    for (int s = 0; s < 200; ++s) {
      const Vector t = oracle::random_vector(rng, alg.n()).normalized();
      const Vector x = oracle::random_vector(rng, alg.m());
      EXPECT_NEAR(alg.j_map(t, x).norm() / x.norm(), 2.0, 1e-12) << alg.label();
    }
  }
}

TEST(HorizontalForm, DiagonalIsSquaredNorm) {
  const auto q = HTypeAlgebra::quaternionic(1);
  const Vector x = vec({1, -2, 0.5, 3});
  const auto h = horizontal_form(q, x, x);
  EXPECT_DOUBLE_EQ(h.real, x.squaredNorm());
  EXPECT_TRUE(h.imaginary.isZero(0.0));
}

TEST(HorizontalForm, HeisenbergBasisPair) {
  const auto h = horizontal_form(HTypeAlgebra::heisenberg(1), vec({1, 0}), vec({0, 1}));
  EXPECT_DOUBLE_EQ(h.real, 0.0);
  EXPECT_DOUBLE_EQ(h.imaginary[0], -1.0);
}

TEST(HorizontalForm, CauchySchwarzBound) {
  std::mt19937_64 rng(6);
  for (const auto& alg : oracle::builtins()) {
    double worst = -1.0;
    for (int s = 0; s < 10000; ++s) {
      const Vector x = oracle::random_vector(rng, alg.m());
      const Vector y = oracle::random_vector(rng, alg.m());
      const double bound = x.squaredNorm() * y.squaredNorm();
      worst = std::max(worst, (horizontal_form(alg, x, y).squared_magnitude() - bound) / bound);
    }
    EXPECT_LE(worst, 1e-12) << alg.label();
  }
}
