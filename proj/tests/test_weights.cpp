#include <gtest/gtest.h>

#include "sl2cp/error.hpp"
#include "sl2cp/verify/oracles.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {
namespace {

TEST(Weights, OfDecomposition) {
  EXPECT_EQ(weights_of_decomposition(Decomposition{{0, 1}}), (WeightVector{{0, 1}}));
  const auto w2 = weights_of_decomposition(Decomposition{{2, 1}});
  EXPECT_EQ(w2, (WeightVector{{0, 1}, {2, 1}}));
  EXPECT_EQ(w2.dim(), 3u);
  const Decomposition mixed{{0, 1}, {1, 1}, {2, 2}};
  const auto w = weights_of_decomposition(mixed);
  EXPECT_EQ(w, (WeightVector{{0, 3}, {1, 1}, {2, 2}}));
  EXPECT_EQ(w.dim(), 9u);
  EXPECT_EQ(w, verify::naive_weights(mixed));
}

TEST(Weights, ZerosAreDropped) {
  const WeightVector w{{0, 2}, {1, 0}, {3, 0}};
  EXPECT_EQ(w.entries().size(), 1u);
  EXPECT_EQ(w[1], 0u);
  EXPECT_EQ(w.top(), 0u);
  EXPECT_TRUE(WeightVector{}.empty());
}

TEST(Weights, DecompositionOfWeights) {
  EXPECT_EQ(decomposition_of_weights(WeightVector{{0, 3}, {1, 1}, {2, 2}}),
            (Decomposition{{0, 1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(decomposition_of_weights(WeightVector{{1, 2}}), (Decomposition{{1, 2}}));
  EXPECT_EQ(decomposition_of_weights(WeightVector{}), Decomposition{});
}

TEST(Weights, InadmissibleIsRejected) {
  try {
    decomposition_of_weights(WeightVector{{0, 1}, {2, 2}});
    FAIL() << "expected NotAdmissible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
  }
}

TEST(Weights, Admissibility) {
  EXPECT_TRUE(is_admissible(WeightVector{{0, 1}, {2, 1}}));
  EXPECT_FALSE(is_admissible(WeightVector{{2, 1}}));
  EXPECT_TRUE(is_admissible(WeightVector{{0, 5}, {1, 4}, {2, 1}}));
  EXPECT_FALSE(is_admissible(WeightVector{{1, 1}, {3, 2}}));
  EXPECT_TRUE(is_admissible(WeightVector{}));
}

TEST(Weights, Convolve) {
  EXPECT_EQ(convolve(WeightVector{{1, 1}}, WeightVector{{1, 1}}), (WeightVector{{0, 2}, {2, 1}}));
  const WeightVector w{{0, 3}, {1, 1}, {2, 2}};
  EXPECT_EQ(convolve(WeightVector{{0, 1}}, w), w);
  EXPECT_EQ(convolve(WeightVector{{0, 1}, {2, 1}}, WeightVector{{1, 1}}),
            (WeightVector{{1, 2}, {3, 1}}));
  EXPECT_EQ(convolve(WeightVector{}, w), WeightVector{});
}

TEST(Weights, ConvolveMatchesPairwiseSums) {
  const WeightVector a{{0, 2}, {1, 1}, {3, 1}};
  const WeightVector b{{1, 3}, {2, 1}};
  EXPECT_EQ(convolve(a, b), verify::naive_convolve(a, b));
}

TEST(Weights, EntrywiseSum) {
  EXPECT_EQ((WeightVector{{0, 1}, {2, 1}} + WeightVector{{1, 1}, {2, 1}}),
            (WeightVector{{0, 1}, {1, 1}, {2, 2}}));
}

TEST(Weights, RecursiveOracleAgrees) {
  const WeightVector w{{0, 4}, {1, 3}, {2, 3}, {3, 1}, {4, 1}};
  Decomposition peeled;
  ASSERT_TRUE(verify::recursive_decomposition(w, peeled));
  EXPECT_EQ(peeled, decomposition_of_weights(w));
  EXPECT_FALSE(verify::recursive_decomposition(WeightVector{{2, 1}}, peeled));
}

}  // namespace
}  // namespace sl2cp
