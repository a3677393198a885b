#include <gtest/gtest.h>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/polynomial_io.hpp"
#include "sl2cp/verify/generators.hpp"
#include "sl2cp/verify/oracles.hpp"

namespace sl2cp {
namespace {

TEST(Charpoly, OfRep) {
  EXPECT_EQ(charpoly_of_rep(irrep_matrices(2)), CanonicalCP(1, {{2, 1}}));
  EXPECT_EQ(charpoly_of_rep(irrep_matrices(0)), CanonicalCP(1));
  EXPECT_EQ(charpoly_of_rep(tensor(irrep_matrices(1), irrep_matrices(1))), CanonicalCP(2, {{2, 1}}));
}

TEST(Charpoly, PencilDeterminant) {
  EXPECT_EQ(to_text(pencil_det_exact(irrep_matrices(1))), "z0^2 - z1^2 - z2*z3");
  EXPECT_EQ(to_text(pencil_det_exact(irrep_matrices(0))), "z0");
  EXPECT_EQ(to_text(pencil_det_exact(irrep_matrices(2))), "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3");
}

TEST(Charpoly, PencilMatchesCofactorOracle) {
  for (Weight m = 0; m <= 5; ++m) {
    const auto t = irrep_matrices(m);
    EXPECT_EQ(pencil_det_exact(t), verify::cofactor_determinant(verify::pencil_entries(t), t.dim()))
        << "m=" << m;
  }
}

TEST(Charpoly, PencilSizeCap) {
  try {
    pencil_det_exact(irrep_matrices(16));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
  EXPECT_NO_THROW(pencil_det_exact(irrep_matrices(16), 17));
}

TEST(Charpoly, RationalTriple) {
  verify::Gen g(3);
  const auto t = irrep_matrices(3);
  const auto conj = verify::conjugate(t, verify::random_invertible(g, 4));
  EXPECT_FALSE(conj.E.is_integral() && conj.F.is_integral() && conj.H.is_integral());
  EXPECT_EQ(pencil_det_exact(conj), pencil_det_exact(t));
}

TEST(Charpoly, BareissOverIntegers) {
  const std::vector<mpz_class> m{2, 0, 1, 1, 3, 2, 1, 1, 2};
  EXPECT_EQ(bareiss_determinant(m, 3), 6);
  const std::vector<mpz_class> swap_needed{0, 1, 1, 0};
  EXPECT_EQ(bareiss_determinant(swap_needed, 2), -1);
  EXPECT_EQ(bareiss_determinant(std::vector<mpz_class>{}, 0), 1);
  EXPECT_EQ(bareiss_determinant(std::vector<mpz_class>{1, 2, 2, 4}, 2), 0);
}

TEST(Charpoly, RandomizedVerification) {
  const auto t5 = irrep_matrices(5);
  const auto ok = pencil_verify_randomized(t5, charpoly_of_rep(t5), 20, 1);
  EXPECT_TRUE(ok.agreed);
  EXPECT_EQ(ok.trials, 20u);
  EXPECT_FALSE(ok.witness);

  const auto t2 = irrep_matrices(2);
  const auto bad = pencil_verify_randomized(t2, CanonicalCP(3), 20, 1);
  EXPECT_FALSE(bad.agreed);
  ASSERT_TRUE(bad.witness);
  EXPECT_NE(evaluate(CanonicalCP(3), *bad.witness), evaluate(pencil_det_exact(t2), *bad.witness));

  EXPECT_TRUE(pencil_verify_randomized(irrep_matrices(0), CanonicalCP(1), 1, 99).agreed);
  EXPECT_THROW(pencil_verify_randomized(t2, CanonicalCP(3), 0, 1), Error);
}

TEST(Charpoly, RandomizedIsDeterministic) {
  const auto t = tensor(irrep_matrices(2), irrep_matrices(2));
  const auto a = pencil_verify_randomized(t, CanonicalCP(9), 5, 42);
  const auto b = pencil_verify_randomized(t, CanonicalCP(9), 5, 42);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(Charpoly, ExactVerification) {
  const auto t = irrep_matrices(4);
  EXPECT_TRUE(pencil_verify_exact(t, charpoly_of_rep(t)).agreed);
  const auto bad = pencil_verify_exact(t, CanonicalCP(5));
  EXPECT_FALSE(bad.agreed);
  ASSERT_TRUE(bad.witness);
  EXPECT_NE(evaluate(CanonicalCP(5), *bad.witness), evaluate(pencil_det_exact(t), *bad.witness));
}

TEST(Charpoly, Decompose) {
  EXPECT_EQ(decompose_charpoly(CanonicalCP(3, {{1, 1}, {2, 2}})),
            (Decomposition{{0, 1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(decompose_charpoly(CanonicalCP(1)), (Decomposition{{0, 1}}));
  try {
    decompose_charpoly(CanonicalCP(0, {{2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
  }
}

TEST(Charpoly, HuZhang) {
  const MultiPoly z0 = MultiPoly::variable(0), z1 = MultiPoly::variable(1);
  const MultiPoly one = MultiPoly::constant(1);
  EXPECT_EQ(hu_zhang_product(1), z0 * z0 - (one + z1 * z1));
  EXPECT_EQ(hu_zhang_product(0), z0);
  const MultiPoly s = one + z1 * z1;
  EXPECT_EQ(hu_zhang_product(4), z0 * (z0 * z0 - MultiPoly::constant(4) * s) *
                                     (z0 * z0 - MultiPoly::constant(16) * s));
  for (Weight m = 0; m <= 6; ++m) EXPECT_TRUE(hu_zhang_check(m)) << m;
}

TEST(Charpoly, Specializations) {
  const MultiPoly f = pencil_det_exact(irrep_matrices(3));
  EXPECT_EQ(specialize_e_unit(f), specialize_h_unit(f));
  EXPECT_EQ(specialize_e_unit(f), hu_zhang_product(3));
}

TEST(Charpoly, Symmetry) {
  for (Weight m = 0; m <= 6; ++m) EXPECT_TRUE(symmetry_identity_check(irrep_matrices(m))) << m;
  EXPECT_TRUE(symmetry_identity_check(direct_sum(irrep_matrices(1), irrep_matrices(2))));
  EXPECT_TRUE(symmetry_identity_check(tensor(irrep_matrices(2), irrep_matrices(3))));
}

TEST(Charpoly, InadmissibleSpectrum) {
  RepTriple t{RationalMatrix::diagonal({2, -2}), RationalMatrix(2, 2), RationalMatrix(2, 2)};
  EXPECT_THROW(charpoly_of_rep(t), Error);
}

}  // namespace
}  // namespace sl2cp
