#include <gtest/gtest.h>

#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/lgv.hpp"
#include "oracles.hpp"

using namespace groth;

TEST(Lgv, GraphStructure) {
  for (int n = 1; n <= 3; ++n) {
    const LgvGraph s = build_graph(n, LgvMode::SCHUBERT), k = build_graph(n, LgvMode::KTHEORY);
    for (const auto& e : s.edges()) {
      EXPECT_FALSE(e.k_edge);
      const auto& from = s.nodes()[e.from];
      const auto& to = s.nodes()[e.to];
      const bool second_horizontal = from.kind == LgvNode::C && to.kind == LgvNode::H;
      EXPECT_EQ(!e.weight.is_constant(), second_horizontal);
      // Edges only go right or down.
      EXPECT_LE(from.i, to.i);
      EXPECT_LE(from.j, to.j);
    }
    std::size_t kedges = 0;
    for (const auto& e : k.edges()) kedges += e.k_edge;
    EXPECT_EQ(kedges, std::size_t(n * (n - 1)));
  }
}

TEST(Lgv, TrivialPathSums) {
  const LgvGraph g = build_graph(3, LgvMode::SCHUBERT);
  const auto& reg = g.registry();
  // Horizontal steps raise j - i, so only the diagonal joins H(1, 1) to H(3, 3).
  EXPECT_EQ(path_sum(g, g.node(LgvNode::H, 1, 1), g.node(LgvNode::H, 3, 3)), Poly(reg, 1));
  EXPECT_TRUE(path_sum(g, g.node(LgvNode::H, 3, 1), g.node(LgvNode::H, 1, 4)).is_zero());
  const LgvGraph one = build_graph(1, LgvMode::SCHUBERT);
  EXPECT_EQ(path_sum(one, one.node(LgvNode::H, 1, 1), one.node(LgvNode::H, 1, 2)),
            Poly::x(one.registry(), 1) + Poly::y(one.registry(), 1));
  EXPECT_EQ(one.node(LgvNode::C, 2, 1), -1);
}

TEST(Lgv, MemoizedSumsMatchEnumeration) {
  for (int n = 1; n <= 3; ++n)
    for (auto mode : {LgvMode::SCHUBERT, LgvMode::KTHEORY}) {
      const LgvGraph g = build_graph(n, mode);
      for (std::size_t from = 0; from < g.nodes().size(); ++from)
        for (std::size_t to = 0; to < g.nodes().size(); to += 3)
          EXPECT_EQ(path_sum(g, int(from), int(to)), path_sum_brute(g, int(from), int(to)));
    }
}

TEST(Lgv, ClosedForm) {
  const VarRegistry reg(4, 4);
  const Partition lam{2, 1};
  const std::vector<int> h{2, 3, 4, 4};
  auto s = [&](int i, int j) { return Poly::x(reg, i) + Poly::y(reg, j); };
  EXPECT_EQ(closed_form_p(1, 1, lam, h, reg), s(1, 1) * s(1, 2) + s(1, 1) * s(2, 3) + s(2, 2) * s(2, 3));
  EXPECT_EQ(closed_form_p(2, 1, lam, h, reg), s(2, 1) * s(2, 2) * s(2, 3));
  EXPECT_EQ(closed_form_p(2, 2, lam, h, reg), s(2, 1) + s(3, 2));
  EXPECT_EQ(closed_form_p(3, 3, lam, h, reg), Poly(reg, 1));
  EXPECT_TRUE(closed_form_p(1, 3, lam, h, reg).is_zero());

  const auto mat = lgv_matrix(Permutation{1, 4, 3, 2});
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_EQ(mat[a - 1][b - 1], closed_form_p(a, b, lam, h, reg)) << a << b;
}

TEST(Lgv, Determinant1432) {
  const Poly d = lgv_determinant(Permutation{1, 4, 3, 2});
  const auto& reg = d.registry();
  auto s = [&](int i, int j) { return Poly::x(reg, i) + Poly::y(reg, j); };
  const Poly expected = s(1, 1) * s(1, 2) * s(2, 1) + s(1, 1) * s(2, 3) * s(2, 1) + s(1, 1) * s(1, 2) * s(3, 2) +
                        s(1, 1) * s(2, 3) * s(3, 2) + s(2, 2) * s(2, 3) * s(3, 2);
  EXPECT_EQ(d, expected);
  EXPECT_EQ(oracle::zero_y(d), parse_poly("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3", reg));
}

TEST(Lgv, SchubertDeterminantTheorem) {
  for (int n = 1; n <= 4; ++n) {
    GrothendieckTable G(n);
    for (const auto& w : all_permutations(n)) {
      if (!is_vexillary(w)) {
        EXPECT_THROW(lgv_determinant(w), NotVexillary);
        continue;
      }
      EXPECT_EQ(lgv_determinant(w), oracle::zero_beta(G(w))) << w.str();
    }
  }
  EXPECT_EQ(lgv_determinant(Permutation::identity(3)), Poly(VarRegistry(3, 3), 1));
}

TEST(Lgv, KTheoryDeterminantTheorem) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(lgv_determinant_full(n), partition_function(build_semidual(n))) << n;
}
