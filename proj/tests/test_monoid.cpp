#include <gtest/gtest.h>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/monoid.hpp"

namespace sl2cp {
namespace {

TEST(Monoid, ResolutionProduct) {
  const auto f1 = MonoidElement::irreducible(1);
  EXPECT_EQ(resolution_product(f1, f1).cp(), CanonicalCP(2, {{2, 1}}));
  const MonoidElement f(CanonicalCP(3, {{1, 1}, {2, 2}}));
  EXPECT_EQ(resolution_product(f, MonoidElement::unit()).cp(), f.cp());
  EXPECT_EQ(resolution_product(MonoidElement::unit(), f).cp(), f.cp());
  EXPECT_EQ(resolution_product(MonoidElement(CanonicalCP(1, {{2, 1}})),
                               MonoidElement(CanonicalCP(0, {{1, 1}})))
                .cp(),
            CanonicalCP(0, {{1, 2}, {3, 1}}));
  EXPECT_EQ(MonoidElement::unit().cp(), CanonicalCP(1));
}

TEST(Monoid, RejectsInadmissible) {
  try {
    MonoidElement(CanonicalCP(0, {{2, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
  }
}

TEST(Monoid, ClebschGordan) {
  EXPECT_EQ(clebsch_gordan(2, 1), (Decomposition{{1, 1}, {3, 1}}));
  EXPECT_EQ(clebsch_gordan(1, 2), (Decomposition{{1, 1}, {3, 1}}));
  for (Weight m = 0; m <= 6; ++m) EXPECT_EQ(clebsch_gordan(m, 0), (Decomposition{{m, 1}}));
  EXPECT_EQ(clebsch_gordan(3, 3), (Decomposition{{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  for (Weight m = 0; m <= 7; ++m)
    for (Weight n = 0; n <= 7; ++n)
      EXPECT_EQ(clebsch_gordan(m, n), clebsch_gordan_by_weights(m, n)) << m << "," << n;
}

TEST(Monoid, ProductMatchesTensorMatrices) {
  for (Weight m = 0; m <= 4; ++m)
    for (Weight n = 0; n <= 4; ++n) {
      const auto prod =
          resolution_product(MonoidElement::irreducible(m), MonoidElement::irreducible(n));
      EXPECT_EQ(prod.cp(), charpoly_of_rep(tensor(irrep_matrices(m), irrep_matrices(n))));
      EXPECT_EQ(decompose_charpoly(prod.cp()), clebsch_gordan(m, n));
    }
}

TEST(Monoid, LawsOnIrreducibles) {
  std::vector<MonoidElement> family;
  for (Weight m = 0; m <= 4; ++m) family.push_back(MonoidElement::irreducible(m));
  const auto report = verify_monoid_laws(family, 0);
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.exhaustive_triples);
  EXPECT_EQ(report.triples_checked, 125u);
  EXPECT_TRUE(report.counterexamples.empty());
}

TEST(Monoid, LawsOnSingleUnit) {
  const auto report = verify_monoid_laws({MonoidElement::unit()}, 0);
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.closure);
}

TEST(Monoid, SampledTriplesBeyondBudget) {
  std::vector<MonoidElement> family;
  for (Weight m = 0; m <= 9; ++m) family.push_back(MonoidElement::irreducible(m));
  const auto report = verify_monoid_laws(family, 5, 100);
  EXPECT_FALSE(report.exhaustive_triples);
  EXPECT_EQ(report.triples_checked, 100u);
  EXPECT_TRUE(report.passed());
}

}  // namespace
}  // namespace sl2cp
