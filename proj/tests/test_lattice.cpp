#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/tableaux.hpp"

using namespace groth;

namespace {

std::set<State> as_set(const std::vector<State>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Lattice, BruteForceAgreesOnTinyGrids) {
  for (const auto& w : all_permutations(2)) {
    const ModelInstance m = build_bumpless(w);
    EXPECT_EQ(as_set(brute_force_states(m)), as_set(enumerate_states(m))) << w.str();
  }
  for (const auto& m : {build_semidual(2), build_semidual(2, true), build_five_vertex(Partition{1}, 1)})
    EXPECT_EQ(as_set(brute_force_states(m)), as_set(enumerate_states(m))) << m.table.name;
  const ModelInstance atom = build_atom_model(Partition{1}, Permutation{2, 1}, AtomVariant::ATOM);
  EXPECT_EQ(as_set(brute_force_states(atom)), as_set(enumerate_states(atom)));
}

TEST(Lattice, EnumeratedStatesAreAdmissibleAndDeterministic) {
  for (const auto& w : all_permutations(3)) {
    const ModelInstance m = build_bumpless(w);
    const auto a = enumerate_states(m);
    EXPECT_EQ(a, enumerate_states(m));
    for (const auto& s : a) {
      EXPECT_TRUE(is_admissible(m, s));
      EXPECT_TRUE(colors_form_paths(m, s));
    }
  }
}

TEST(Lattice, StateCounts) {
  EXPECT_EQ(enumerate_states(build_bumpless(Permutation{1, 3, 2})).size(), 2u);
  EXPECT_EQ(enumerate_states(build_bumpless(Permutation{1, 2})).size(), 1u);
  EXPECT_EQ(enumerate_states(build_bumpless(Permutation{4, 3, 2, 1})).size(), 1u);
}

TEST(Lattice, GroundStateWeight) {
  for (int n = 2; n <= 4; ++n) {
    const ModelInstance m = build_bumpless(Permutation::longest(n));
    const auto st = enumerate_states(m);
    ASSERT_EQ(st.size(), 1u);
    Poly expect = Poly::beta(m.reg).pow(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j) expect *= Poly::x(m.reg, i) + Poly::y(m.reg, j) + Poly::beta(m.reg) * Poly::x(m.reg, i) * Poly::y(m.reg, j);
    EXPECT_EQ(state_weight(m, st.front()), expect);
  }
}

TEST(Lattice, MainTheoremS3) {
  GrothendieckTable G(3);
  for (const auto& w : all_permutations(3)) {
    const ModelInstance m = build_bumpless(w);
    EXPECT_EQ(partition_function(m), Poly::beta(m.reg).pow(length(w)) * G(w)) << w.str();
  }
}

TEST(Lattice, MarkedExpansionSumsToPartitionFunction) {
  for (const auto& m : {build_semidual(3), build_five_vertex(Partition{2, 1}, 3), build_bumpless(Permutation{1, 4, 3, 2})}) {
    Poly z(m.reg);
    for (const auto& ms : enumerate_marked_states(m)) z += marked_weight(m, ms);
    EXPECT_EQ(z, partition_function(m)) << m.table.name;
  }
}

TEST(Lattice, FiveVertexIsFactorialGrothendieck) {
  for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}})
    for (int n = 2; n <= 3; ++n) {
      const ModelInstance m = build_five_vertex(lam, n);
      EXPECT_EQ(m.cols, n + lam.first());
      EXPECT_EQ(partition_function(m), factorial_grothendieck(lam, n, m.reg)) << lam.str() << " n=" << n;
    }
}

TEST(Lattice, AtomModelNeverUsesU2Circle) {
  for (const Partition& lam : {Partition{1}, Partition{2, 1}, Partition{1, 1, 1}})
    for (const auto& v : all_permutations(3))
      for (auto var : {AtomVariant::ATOM, AtomVariant::POLY}) {
        const ModelInstance m = build_atom_model(lam, v, var);
        for (const auto& s : enumerate_states(m))
          for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) EXPECT_NE(m.table.vertices[vertex_at(m, s, i, j)].name, "u2o");
      }
}

TEST(Lattice, RllRelations) {
  EXPECT_TRUE(verify_rll(atom_table(), atom_r_table()).ok);
  EXPECT_TRUE(verify_rll(bumpless_table(), bumpless_r_table()).ok);
  EXPECT_TRUE(verify_rll(semidual_table(), semidual_r_table()).ok);
}

TEST(Lattice, PrintedSemidualRTableFails) {
  const RllResult r = verify_rll(semidual_table(), semidual_r_table_printed());
  EXPECT_FALSE(r.ok);
  EXPECT_GT(r.checked, 0u);
}

TEST(Lattice, WrongRTableFails) {
  EXPECT_FALSE(verify_rll(bumpless_table(), atom_r_table()).ok);
}

TEST(Lattice, FunctionalEquation) {
  for (const auto& w : all_permutations(3))
    for (int i = 1; i < 3; ++i)
      if (is_ascent(w, i)) {
        EXPECT_TRUE(functional_equation_check(w, i)) << w.str() << " i=" << i;
      }
  EXPECT_THROW(functional_equation_check(Permutation{2, 1, 3}, 1), DomainError);
}

TEST(Lattice, AtomFunctionalEquation) {
  for (const auto& w : all_permutations(3))
    for (int i = 1; i < 3; ++i)
      if (length(simple_times(i, w)) > length(w)) {
        for (auto var : {AtomVariant::ATOM, AtomVariant::POLY})
          EXPECT_TRUE(atom_functional_equation_check(Partition{2, 1}, w, i, var)) << w.str();
      }
}

TEST(Lattice, JsonRendering) {
  const ModelInstance m = build_bumpless(Permutation{1, 3, 2});
  const std::set<std::string> tiles{"blank", "cross", "bump", "vertical", "horizontal", "turn_nw", "turn_se"};
  for (const auto& s : enumerate_states(m)) {
    const auto j = nlohmann::json::parse(render_json(m, s));
    EXPECT_EQ(j["rows"], 3);
    EXPECT_EQ(j["cols"], 3);
    EXPECT_EQ(j["horizontal"].size(), 3u);
    EXPECT_EQ(j["vertical"].size(), 4u);
    for (const auto& row : j["tiles"])
      for (const auto& t : row) EXPECT_TRUE(tiles.count(t.get<std::string>())) << t;
  }
}

TEST(Lattice, AsciiRenderingShowsColors) {
  const ModelInstance m = build_bumpless(Permutation{2, 1});
  const std::string a = render_ascii(m, enumerate_states(m).front());
  EXPECT_NE(a.find('1'), std::string::npos);
  EXPECT_NE(a.find('2'), std::string::npos);
  EXPECT_EQ(a, render_ascii(m, enumerate_states(m).front()));
}
