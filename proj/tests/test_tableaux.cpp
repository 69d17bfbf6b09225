#include <gtest/gtest.h>

#include "groth/errors.hpp"
#include "groth/tableaux.hpp"
#include "oracles.hpp"

using namespace groth;

TEST(Tableaux, ZeroOneSequence) {
  EXPECT_EQ(zero_one_string(Partition{2, 1}, 3), "10101");
  EXPECT_EQ(zero_one_string(Partition{}, 2), "11");
  EXPECT_EQ(zero_one_sequence(Partition{3}, 1).size(), 4u);
}

TEST(Tableaux, SingleBoxCount) {
  // Nonempty subsets of {1, .., n}.
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(enumerate_svt(Partition{1}, n).size(), (1u << n) - 1);
}

TEST(Tableaux, AllEnumeratedAreValid) {
  for (const Partition& lam : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}})
    for (const auto& t : enumerate_svt(lam, 3)) EXPECT_TRUE(t.is_valid()) << t.str();
}

TEST(Tableaux, BetaZeroYZeroIsSchur) {
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{3, 1}}) {
      if (lam.length() > n) continue;
      const Poly g = factorial_grothendieck(lam, n);
      EXPECT_EQ(oracle::zero_y(oracle::zero_beta(g)), oracle::schur(lam, n, g.registry())) << lam.str() << " n=" << n;
    }
}

TEST(Tableaux, SmallestDegreePartIsFactorialSchur) {
  // Single row at b = 0: sum over multisets, each box t at column c weighted x_t + y_{t+c-1}.
  const Poly g = oracle::zero_beta(factorial_grothendieck(Partition{1}, 2));
  const auto& reg = g.registry();
  EXPECT_EQ(g, Poly::x(reg, 1) + Poly::y(reg, 1) + Poly::x(reg, 2) + Poly::y(reg, 2));
}

TEST(Tableaux, FactorialOneBoxOneVariable) {
  const VarRegistry reg(1, 1);
  EXPECT_EQ(factorial_grothendieck(Partition{1}, 1, reg).str(), "b*x1*y1 + x1 + y1");
}

TEST(Tableaux, Flagged21With23) {
  const Partition lam{2, 1};
  const std::vector<int> flags{2, 3};
  std::vector<std::string> singles;
  for (const auto& t : enumerate_flagged_svt(lam, flags))
    if (t.total_entries() == lam.size()) singles.push_back(t.str());
  EXPECT_EQ(singles.size(), 5u);

  const VarRegistry reg = flagged_registry(lam, flags);
  auto s = [&](int i, int j) { return Poly::x(reg, i) + Poly::y(reg, j); };
  const Poly expected = s(1, 1) * s(1, 2) * s(2, 1) + s(1, 1) * s(2, 3) * s(2, 1) + s(1, 1) * s(1, 2) * s(3, 2) +
                        s(1, 1) * s(2, 3) * s(3, 2) + s(2, 2) * s(2, 3) * s(3, 2);
  EXPECT_EQ(oracle::zero_beta(flagged_factorial_grothendieck(lam, flags, reg)), expected);
}

TEST(Tableaux, FlagsAtLeastNReduceToFactorial) {
  const Partition lam{2, 1};
  const VarRegistry reg(3, 5);
  EXPECT_EQ(flagged_factorial_grothendieck(lam, {3, 3}, reg), factorial_grothendieck(lam, 3, reg));
}

TEST(Tableaux, Errors) {
  EXPECT_TRUE(enumerate_svt(Partition{1, 1, 1}, 2).empty());
  EXPECT_THROW(enumerate_svt(Partition{1}, 32), DomainError);
  EXPECT_THROW(enumerate_flagged_svt(Partition{2, 1}, {2}), DomainError);
  EXPECT_THROW(factorial_grothendieck(Partition{2}, 2, VarRegistry(1, 1)), DomainError);
}
