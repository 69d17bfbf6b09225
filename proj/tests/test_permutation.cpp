#include <gtest/gtest.h>

#include "groth/errors.hpp"
#include "groth/permutation.hpp"
#include "oracles.hpp"

using namespace groth;

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(Permutation::parse("2413"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(Permutation::parse("2,4,1,3"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ((Permutation{2, 4, 1, 3}).str(), "2413");
  EXPECT_THROW(Permutation::parse("1224"), Error);
  EXPECT_THROW(Permutation::parse("1a"), ParseError);
}

TEST(Permutation, LengthIsInversionCount) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) EXPECT_EQ(length(w), oracle::inversions(w)) << w.str();
}

TEST(Permutation, ReducedWordsMultiplyBack) {
  for (const auto& w : all_permutations(4)) {
    const auto word = reduced_word(w);
    EXPECT_EQ(int(word.size()), length(w));
    EXPECT_EQ(word_product(word, 4), w);
    for (const auto& r : all_reduced_words(w)) EXPECT_EQ(word_product(r, 4), w);
  }
  EXPECT_EQ(all_reduced_words(Permutation::longest(3)).size(), 2u);
}

TEST(Permutation, InverseAndProducts) {
  for (const auto& w : all_permutations(4)) {
    EXPECT_EQ(w * inverse(w), Permutation::identity(4));
    for (int i = 1; i < 4; ++i) {
      EXPECT_EQ(times_simple(w, i), w * Permutation::simple(4, i));
      EXPECT_EQ(simple_times(i, w), Permutation::simple(4, i) * w);
      EXPECT_EQ(is_ascent(w, i), w(i) < w(i + 1));
    }
  }
}

TEST(Permutation, DemazureProduct) {
  EXPECT_EQ(demazure_product({1, 1}, 3), Permutation::simple(3, 1));
  EXPECT_EQ(demazure_product({1, 2, 1, 2}, 3), Permutation::longest(3));
  EXPECT_EQ(demazure_product({2, 1, 2}, 3), Permutation::longest(3));
  for (const auto& w : all_permutations(4)) EXPECT_EQ(demazure_product(reduced_word(w), 4), w);
}

TEST(Permutation, VexillaryMatchesPatternSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const bool v = oracle::avoids_2143(w);
      EXPECT_EQ(is_vexillary(w), v) << w.str();
      EXPECT_EQ(is_vexillary_essential(w), v) << w.str();
      EXPECT_EQ(is_vexillary_diagram(w), v) << w.str();
    }
}

TEST(Permutation, DiagramSizeIsLength) {
  for (const auto& w : all_permutations(5)) EXPECT_EQ(int(diagram(w).size()), length(w));
  EXPECT_EQ(diagram(Permutation{2, 1}), (std::set<Cell>{{1, 1}}));
  EXPECT_EQ(essential_set(Permutation{2, 1, 4, 3}), (std::set<Cell>{{1, 1}, {3, 3}}));
}

TEST(Permutation, ShapeAndFlags1432) {
  const Permutation w{1, 4, 3, 2};
  EXPECT_EQ(lambda_w(w), (Partition{2, 1}));
  EXPECT_EQ(flagging(w), (std::vector<int>{2, 3}));
  EXPECT_EQ(flagging(Permutation{8, 7, 1, 6, 2, 9, 5, 3, 4}), (std::vector<int>{1, 2, 4, 6, 7}));
  EXPECT_THROW(flagging(Permutation{2, 1, 4, 3}), NotVexillary);
}

TEST(Permutation, LambdaSizeIsLength) {
  for (const auto& w : all_permutations(5))
    if (is_vexillary(w)) {
      EXPECT_EQ(lambda_w(w).size(), length(w)) << w.str();
      EXPECT_TRUE(Lambda_w(w).contains(lambda_w(w)) || lambda_w(w).size() == 0);
    }
}

TEST(Permutation, ShiftKeepsShapeAndRaisesFlags) {
  for (const auto& w : all_permutations(4)) {
    if (!is_vexillary(w)) continue;
    for (int k = 1; k <= 2; ++k) {
      const Permutation s = shift(w, k);
      EXPECT_EQ(s.size(), w.size() + k);
      for (int i = 1; i <= k; ++i) EXPECT_EQ(s(i), i);
      EXPECT_EQ(lambda_w(s), lambda_w(w));
      auto f = flagging(w);
      for (int& x : f) x += k;
      EXPECT_EQ(flagging(s), f) << w.str();
    }
  }
}
