#pragma once

#include <vector>

#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/poly.hpp"

namespace groth {

enum class LgvMode { SCHUBERT, KTHEORY };

// Houses on the n x cols grid, 1-based cells (i, j) with i counted from the top.
// H(i, j) is the midpoint of the west edge of cell (i, j), so H(i, cols+1) is
// on the right boundary; C(i, j) is the center; V(i, j) is the midpoint of
// the north edge, so V(n+1, j) is on the bottom boundary.
struct LgvNode {
  enum Kind { H, C, V } kind;
  int i, j;
};

struct LgvEdge {
  int from, to;
  Poly weight;
  bool k_edge = false;  // C(i, j) -> C(i+1, j), KTHEORY only
};

class LgvGraph {
 public:
  LgvGraph(int n, int cols, LgvMode mode);

  int n() const { return n_; }
  int cols() const { return cols_; }
  LgvMode mode() const { return mode_; }
  const VarRegistry& registry() const { return reg_; }
  const std::vector<LgvNode>& nodes() const { return nodes_; }
  const std::vector<LgvEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  // Node index, or -1 if (kind, i, j) is not a house of this graph.
  int node(LgvNode::Kind kind, int i, int j) const;

 private:
  friend LgvGraph build_graph(int n, LgvMode mode, int cols);
  void add_edge(int from, int to, Poly w, bool k_edge = false);

  int n_, cols_;
  LgvMode mode_;
  VarRegistry reg_;
  std::vector<LgvNode> nodes_;
  std::vector<LgvEdge> edges_;
  std::vector<std::vector<int>> out_;
};

// Horizontal steps C(i, j) -> H(i, j+1) weigh x_i + y_j, the b = 0 value of
// x_i (+) y_j (SCHUBERT), or b (x_i (+) y_j) (KTHEORY); every other edge weighs 1.
LgvGraph build_graph(int n, LgvMode mode, int cols = 0);

Poly path_sum(const LgvGraph& g, int from, int to);
// Same sum by explicit enumeration of every path.
Poly path_sum_brute(const LgvGraph& g, int from, int to);

// Heights h_b = F_b for b <= l(lam), and n beyond.
std::vector<int> lgv_heights(const Permutation& w);
// The one-row factorial Grothendieck polynomial at b = 0 of length
// lam_b + a - b in x_a, ..., x_{h_b}; 1-based a, b.
Poly closed_form_p(int a, int b, const Partition& lam, const std::vector<int>& h, const VarRegistry& reg);

// [p_ab] on the SCHUBERT graph: start H(a, 1), end H(h_b, h_b + lam_b - b + 1).
std::vector<std::vector<Poly>> lgv_matrix(const Permutation& w);
Poly lgv_determinant(const Permutation& w);
// KTHEORY graph: starts H(n+1-a, 1), ends V(n+1, b).
std::vector<std::vector<Poly>> lgv_matrix_full(int n);
Poly lgv_determinant_full(int n);

}  // namespace groth
