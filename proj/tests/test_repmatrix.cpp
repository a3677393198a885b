#include <gtest/gtest.h>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/verify/generators.hpp"

namespace sl2cp {
namespace {

using Q = mpq_class;

TEST(RationalMatrix, Basics) {
  const RationalMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(determinant(a), -2);
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RationalMatrix::identity(2));
  EXPECT_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}));
  EXPECT_EQ(kron(RationalMatrix::identity(2), a).rows(), 4u);
  EXPECT_EQ(block_diag(a, RationalMatrix::identity(1)).trace(), 6);
  EXPECT_EQ((RationalMatrix{{Q(1, 2), 0}, {0, Q(1, 3)}}).common_denominator(), 6);
  const auto ns = null_space(RationalMatrix{{1, 1}, {2, 2}});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0] + ns[0][1], 0);
}

TEST(RepMatrix, IrrepOne) {
  const auto t = irrep_matrices(1);
  EXPECT_EQ(t.H, (RationalMatrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(t.E, (RationalMatrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(t.F, (RationalMatrix{{0, 0}, {1, 0}}));
}

TEST(RepMatrix, IrrepZeroAndTwo) {
  const auto t0 = irrep_matrices(0);
  EXPECT_EQ(t0.dim(), 1u);
  EXPECT_TRUE(t0.H.is_zero() && t0.E.is_zero() && t0.F.is_zero());
  const auto t2 = irrep_matrices(2);
  EXPECT_EQ(t2.H, RationalMatrix::diagonal({2, 0, -2}));
  EXPECT_EQ(t2.E, (RationalMatrix{{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(t2.F, (RationalMatrix{{0, 0, 0}, {1, 0, 0}, {0, 2, 0}}));
}

TEST(RepMatrix, BracketsHoldForIrreps) {
  for (Weight m = 0; m <= 8; ++m) EXPECT_TRUE(check_brackets(irrep_matrices(m))) << m;
}

TEST(RepMatrix, BracketsDetectBadTriples) {
  const auto t = irrep_matrices(2);
  EXPECT_FALSE(check_brackets(t.H, t.E, t.E));
  EXPECT_THROW(validate(RepTriple{t.H, t.E, t.E}), Error);
  EXPECT_THROW(validate(RepTriple{t.H, irrep_matrices(1).E, t.F}), Error);
}

TEST(RepMatrix, DirectSum) {
  const auto s = direct_sum(irrep_matrices(1), irrep_matrices(0));
  EXPECT_EQ(s.H, RationalMatrix::diagonal({1, -1, 0}));
  EXPECT_TRUE(check_brackets(s));
  const auto a = irrep_matrices(3), b = irrep_matrices(2);
  EXPECT_EQ(charpoly_of_rep(direct_sum(a, b)), charpoly_of_rep(direct_sum(b, a)));
  EXPECT_EQ(h_weights(direct_sum(b, b)), (WeightVector{{0, 2}, {2, 2}}));
}

TEST(RepMatrix, Tensor) {
  const auto t = tensor(irrep_matrices(1), irrep_matrices(1));
  EXPECT_EQ(t.H, RationalMatrix::diagonal({2, 0, 0, -2}));
  EXPECT_TRUE(check_brackets(t));
  const auto a = irrep_matrices(3);
  EXPECT_EQ(tensor(irrep_matrices(0), a), a);
  EXPECT_EQ(h_weights(tensor(irrep_matrices(2), irrep_matrices(1))), (WeightVector{{1, 2}, {3, 1}}));
}

TEST(RepMatrix, HWeights) {
  EXPECT_EQ(h_weights(irrep_matrices(3)), (WeightVector{{1, 1}, {3, 1}}));
  EXPECT_EQ(h_weights(direct_sum(irrep_matrices(1), irrep_matrices(1))), (WeightVector{{1, 2}}));
  EXPECT_EQ(h_weights(tensor(irrep_matrices(1), irrep_matrices(1))), (WeightVector{{0, 2}, {2, 1}}));
  RepTriple lopsided{RationalMatrix::diagonal({1, 1}), RationalMatrix(2, 2), RationalMatrix(2, 2)};
  try {
    h_weights(lopsided);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricSpectrum);
  }
}

TEST(ConjugateBasis, ExplicitTriple) {
  const RationalMatrix hp{{0, 1}, {1, 0}};
  const auto cb = conjugate_basis(hp);
  EXPECT_EQ(cb.A * standard_h() * *inverse(cb.A), hp);
  EXPECT_TRUE(check_brackets(cb.h, cb.e1, cb.e2));
  const RationalMatrix e1{{Q(1, 2), Q(-1, 2)}, {Q(1, 2), Q(-1, 2)}};
  const RationalMatrix e2{{Q(1, 2), Q(1, 2)}, {Q(-1, 2), Q(-1, 2)}};
  EXPECT_TRUE(check_brackets(hp, e1, e2));
  EXPECT_EQ(cb.e1, e1);
  EXPECT_EQ(cb.e2, e2);
}

TEST(ConjugateBasis, IdentityForStandardH) {
  const auto cb = conjugate_basis(standard_h());
  EXPECT_EQ(cb.A, RationalMatrix::identity(2));
  EXPECT_EQ(cb.e1, standard_e1());
  EXPECT_EQ(cb.e2, standard_e2());
}

TEST(ConjugateBasis, RejectsBadInput) {
  EXPECT_THROW(conjugate_basis(RationalMatrix{{2, 0}, {0, -2}}), Error);
  EXPECT_THROW(conjugate_basis(RationalMatrix{{1, 0}, {0, 1}}), Error);
  EXPECT_THROW(conjugate_basis(RationalMatrix::identity(3)), Error);
}

TEST(ConjugateBasis, RandomRationalInputs) {
  verify::Gen g(7);
  for (int k = 0; k < 50; ++k) {
    const auto hp = verify::random_h_prime(g);
    const auto cb = conjugate_basis(hp);
    EXPECT_EQ(cb.h, hp);
    EXPECT_EQ(cb.A * standard_h() * *inverse(cb.A), hp);
    EXPECT_TRUE(check_brackets(cb.h, cb.e1, cb.e2));
  }
}

}  // namespace
}  // namespace sl2cp
