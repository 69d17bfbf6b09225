#include <gtest/gtest.h>

#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/tableaux.hpp"
#include "groth/verify.hpp"
#include "oracles.hpp"

using namespace groth;

namespace {

// Operator value at a point from its defining quotient, with s_i acting on the point.
mpz_class quotient_value(OperatorKind kind, int i, const Poly& f, std::vector<mpz_class> pt) {
  const auto& reg = f.registry();
  const mpz_class b = pt[reg.beta()];
  const mpz_class a = pt[reg.x(i)], c = pt[reg.x(i + 1)];
  const mpz_class fv = oracle::evaluate(f, pt);
  std::swap(pt[reg.x(i)], pt[reg.x(i + 1)]);
  const mpz_class sv = oracle::evaluate(f, pt);
  mpz_class num;
  switch (kind) {
    case OperatorKind::PARTIAL: num = fv - sv; break;
    case OperatorKind::KDD: num = (1 + b * c) * fv - (1 + b * a) * sv; break;
    case OperatorKind::DEMAZURE: num = a * fv - c * sv; break;
    case OperatorKind::LASCOUX: num = a * (1 + b * c) * fv - c * (1 + b * a) * sv; break;
    case OperatorKind::LASCOUX_ATOM: num = a * (1 + b * c) * fv - c * (1 + b * a) * sv - (a - c) * fv; break;
  }
  return num / (a - c);
}

}  // namespace

TEST(Operators, MatchDefiningQuotients) {
  const VarRegistry reg(3, 1);
  std::mt19937_64 rng(5);
  for (auto kind : {OperatorKind::PARTIAL, OperatorKind::KDD, OperatorKind::DEMAZURE, OperatorKind::LASCOUX,
                    OperatorKind::LASCOUX_ATOM})
    for (int t = 0; t < 20; ++t) {
      const Poly f = random_poly(reg, rng);
      for (int i = 1; i <= 2; ++i) {
        auto pt = oracle::random_point(reg, rng);
        if (pt[reg.x(i)] == pt[reg.x(i + 1)]) pt[reg.x(i)] += 1;
        EXPECT_EQ(oracle::evaluate(apply(kind, i, f), pt), quotient_value(kind, i, f, pt)) << to_string(kind);
      }
    }
}

TEST(Operators, KillSymmetricPolynomials) {
  const VarRegistry reg(3, 1);
  const Poly e2 = parse_poly("x1*x2 + x1*x3 + x2*x3 + y1", reg);
  for (int i = 1; i <= 2; ++i) EXPECT_TRUE(apply(OperatorKind::PARTIAL, i, e2).is_zero());
  EXPECT_THROW(apply(OperatorKind::PARTIAL, 3, e2), DomainError);
}

TEST(Operators, IdentitiesOnRandomPolynomials) {
  for (const auto& r : run_suite("operators", 4, 2024)) EXPECT_TRUE(r.ok) << r.name << ": " << r.counterexample;
}

TEST(Grothendieck, TopIsProductOfOplus) {
  const VarRegistry reg(3, 3);
  auto o = [&](int i, int j) { return oplus(Poly::x(reg, i), Poly::y(reg, j)); };
  EXPECT_EQ(grothendieck_top(3, reg), o(1, 1) * o(1, 2) * o(2, 1));
  EXPECT_EQ(double_grothendieck(Permutation{2, 1}).str(), "b*x1*y1 + x1 + y1");
  EXPECT_EQ(double_grothendieck(Permutation{1, 2}).str(), "1");
}

TEST(Grothendieck, BetaZeroYZeroGivesSchubert) {
  // x^delta for w0; Schur polynomials for Grassmannian permutations.
  GrothendieckTable G(4);
  const auto& reg = G.registry();
  EXPECT_EQ(oracle::zero_y(oracle::zero_beta(G(Permutation::longest(4)))), parse_poly("x1^3*x2^2*x3", reg));
  int grassmannian = 0;
  for (const auto& w : all_permutations(4)) {
    int descents = 0, k = 0;
    for (int i = 1; i < 4; ++i)
      if (w(i) > w(i + 1)) ++descents, k = i;
    if (descents != 1) continue;
    ++grassmannian;
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(w(k + 1 - i) - (k + 1 - i));
    const Partition lam(parts);
    EXPECT_EQ(oracle::zero_y(oracle::zero_beta(G(w))), oracle::schur(lam, k, reg)) << w.str();
    EXPECT_EQ(G(w), factorial_grothendieck(lam, k, reg)) << w.str();
  }
  EXPECT_EQ(grassmannian, 11);
}

TEST(Grothendieck, IndependentOfReducedWord) {
  const VarRegistry reg(4, 4);
  GrothendieckTable G(4);
  for (const auto& w : all_permutations(4)) {
    const Permutation u = inverse(w) * Permutation::longest(4);
    for (const auto& word : all_reduced_words(u)) EXPECT_EQ(double_grothendieck_along(w, word, reg), G(w)) << w.str();
  }
  EXPECT_THROW(double_grothendieck_along(Permutation{2, 1}, {1}, VarRegistry(2, 2)), DomainError);
}

TEST(Grothendieck, Symmetry) {
  for (int n = 2; n <= 4; ++n) {
    GrothendieckTable G(n);
    for (const auto& w : all_permutations(n)) EXPECT_EQ(G(w), exchange_xy(G(inverse(w)))) << w.str();
  }
}

TEST(Grothendieck, VanishesAtOriginUnlessIdentity) {
  GrothendieckTable G(3);
  const auto& reg = G.registry();
  for (const auto& w : all_permutations(3)) {
    std::vector<mpz_class> pt(reg.size(), 0);
    EXPECT_EQ(oracle::evaluate(G(w), pt), w == Permutation::identity(3) ? 1 : 0) << w.str();
  }
}

TEST(Lascoux, EmptyShapeAtomIsIndicator) {
  // The atom of the empty shape is 1 for w = id and 0 otherwise.
  for (const auto& w : all_permutations(3)) {
    const Poly a = extended_lascoux(LascouxKind::ATOM, Partition{}, w);
    EXPECT_EQ(a, Poly(a.registry(), w == Permutation::identity(3) ? 1 : 0)) << w.str();
    const Poly p = extended_lascoux(LascouxKind::POLY, Partition{}, w);
    EXPECT_EQ(p, Poly(p.registry(), 1)) << w.str();
  }
}

TEST(Lascoux, PolynomialIsSumOfAtomsBelow) {
  const Partition lam{2, 1};
  for (const auto& w : all_permutations(3)) {
    Poly sum(extended_lascoux(LascouxKind::POLY, lam, w).registry());
    for (const auto& u : all_permutations(3)) {
      // u <= w in Bruhat order: some subword of a reduced word of w multiplies to u.
      bool below = false;
      const auto word = reduced_word(w);
      for (unsigned mask = 0; mask < (1u << word.size()) && !below; ++mask) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < word.size(); ++k)
          if (mask >> k & 1) sub.push_back(word[k]);
        below = word_product(sub, 3) == u;
      }
      if (below) sum += extended_lascoux(LascouxKind::ATOM, lam, u);
    }
    EXPECT_EQ(sum, extended_lascoux(LascouxKind::POLY, lam, w)) << w.str();
  }
}
