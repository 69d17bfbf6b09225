#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groth/lattice.hpp"
#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/tableaux.hpp"

namespace groth {

enum class Tile : std::uint8_t { BLANK, CROSS, BUMP, VERTICAL, HORIZONTAL, TURN_NW, TURN_SE };
const char* tile_name(Tile t);

// Uncolored bumpless pipe dream; pipes enter at the bottom and leave on the right.
struct BumplessPipeDream {
  int n = 0;
  std::vector<Tile> tiles;  // row-major, 0-based

  Tile at(int i, int j) const { return tiles[std::size_t(i) * n + j]; }
  Tile& at(int i, int j) { return tiles[std::size_t(i) * n + j]; }
  std::string str() const;
  bool operator==(const BumplessPipeDream&) const = default;
  auto operator<=>(const BumplessPipeDream&) const = default;
};

BumplessPipeDream forget_colors(const ModelInstance& m, const State& s);
// Every pipe layout on the n x n grid from the bottom edges to the right
// edges, with each fully occupied tile drawn as a crossing.
std::vector<BumplessPipeDream> all_bpds(int n);

// Tiles are visited by anti-diagonals from the bottom-left corner: d = i + j
// with i counted from the bottom row, then by i. A second crossing of the
// same pair of pipes is read as a bump.
Permutation key_of_state(const BumplessPipeDream& b);
// The crossing word of b in sweep order: each crossing swaps the k-th and
// (k+1)-th pipe along the current cut. Its Demazure product is the key.
std::vector<int> crossing_word(const BumplessPipeDream& b);

// Complements horizontal edges and drops colors; the image lives in build_semidual(n).
State phi(const State& bumpless);
// Inverse of phi over the union of all w in S_n: recovers w and the colored state.
std::pair<Permutation, State> phi_inverse(const State& semidual);

// States of D_w as phi-images of the states of G_w.
std::vector<State> dw_states(const Permutation& w);
// Sum of semidual-vex weights over dw_states(w).
Poly dw_partition_function(const Permutation& w);
// The same with every x_i (+) y_j for i > n set to 0: only the top n rows carry weight.
Poly dw_partition_function_rows(const Permutation& w, int n);

// Every tile of phi(state) carrying a non-unit weight lies in Lambda_w.
bool support_in_Lambda(const State& semidual, const Permutation& w);
// Some a2 or a2-dagger tile of a G_w state lies in Lambda_w.
bool crossing_in_Lambda(const State& bumpless, const Permutation& w);
// The reduced state whose blank tiles are the Rothe diagram of w.
State rothe_state(const Permutation& w);
// Rows (1-based, from the top) of the first l(lam_w) path exits met walking
// the south-east boundary of Lambda_w from its top-right corner.
std::vector<int> read_flags(const State& semidual, const Permutation& w);
// The same read off phi(rothe_state(w)); for vexillary w every state of D_w
// gives this answer. Throws NotVexillary.
std::vector<int> read_flags(const Permutation& w);

struct ExcitedYoungDiagram {
  std::set<std::pair<int, int>> boxes;  // 1-based (row, col)
  std::set<std::pair<int, int>> marks;
  bool operator==(const ExcitedYoungDiagram&) const = default;
  auto operator<=>(const ExcitedYoungDiagram&) const = default;
  std::string render(int rows, int cols) const;
};

ExcitedYoungDiagram state_to_eyd(const ModelInstance& m, const MarkedState& ms);
// b^{|boxes| + |marks|} prod over boxes and marks of x_i (+) y_j.
Poly eyd_weight(const ExcitedYoungDiagram& d, const VarRegistry& reg);
// Slides the box or mark at (i, j) to (i+1, j+1); empty unless (i+1, j),
// (i, j+1) and (i+1, j+1) are free and (i+1, j+1) lies in mu.
std::optional<ExcitedYoungDiagram> excite(const ExcitedYoungDiagram& d, std::pair<int, int> cell, const Partition& mu);
// Keeps the cell and marks (i+1, j+1); same room needed as for excite.
std::optional<ExcitedYoungDiagram> emit(const ExcitedYoungDiagram& d, std::pair<int, int> cell, const Partition& mu);
std::set<ExcitedYoungDiagram> generate_eyd(const Partition& lam, const Partition& mu);

// Marked state of the five-vertex model to a set-valued tableau of shape lam.
SetValuedTableau theta(const ModelInstance& m, const MarkedState& ms, const Partition& lam);

std::string render_bpd(const BumplessPipeDream& b);

}  // namespace groth
