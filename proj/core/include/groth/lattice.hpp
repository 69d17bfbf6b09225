#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/poly.hpp"
#include "groth/ratfunc.hpp"

namespace groth {

// 0 is the empty edge; k >= 1 is color c_k, and c_i is larger than c_j iff i < j.
using Label = std::int8_t;

struct VertexConfig {
  Label w = 0, n = 0, e = 0, s = 0;
  bool operator==(const VertexConfig&) const = default;
};

// Pattern symbols: Z = 0, D = any color (same everywhere it appears),
// C = a color, P = a color smaller than C.
enum class Sym : std::uint8_t { Z, D, C, P };

enum class WeightForm : std::uint8_t { ONE, OPLUS, BETA_OPLUS, ONE_PLUS_BETA_OPLUS };

struct VertexType {
  std::string name;  // vertex label, e.g. "a1"
  std::string tile;  // descriptive tile kind, e.g. "blank"
  std::array<Sym, 4> pattern;  // W, N, E, S
  WeightForm form;
  bool markable() const { return form == WeightForm::ONE_PLUS_BETA_OPLUS; }
};

bool pattern_matches(const std::array<Sym, 4>& pattern, const std::array<Label, 4>& labels);

// DOWN: paths enter through W and N and leave through E and S.
// UP: paths enter through W and S and leave through E and N.
enum class Flow : std::uint8_t { DOWN, UP };

struct WeightTable {
  std::string name;
  Flow flow = Flow::DOWN;
  bool colored = true;
  std::vector<VertexType> vertices;

  // Index of the matching vertex type, or -1 (weight 0).
  int match(const VertexConfig& c) const;
};

WeightTable atom_table();        // colored, atom variant
WeightTable atom_poly_table();   // colored, polynomial variant
WeightTable bumpless_table();    // double Grothendieck model
WeightTable semidual_table();    // uncolored
WeightTable semidual_vex_table();  // b-bar-2 weighted x (+) y
WeightTable five_vertex_table();   // atom table with a single color

Poly form_value(WeightForm f, const Poly& x, const Poly& y);

struct ModelInstance {
  WeightTable table;
  int rows = 0;
  int cols = 0;
  int colors = 0;
  std::vector<Label> top, bottom;  // size cols, left to right
  std::vector<Label> left, right;  // size rows, top to bottom
  VarRegistry reg;
  std::vector<Poly> row_x;  // spectral value of each row
  std::vector<Poly> col_y;  // spectral value of each column

  Poly cell_weight(int i, int j, WeightForm f) const { return form_value(f, row_x[i], col_y[j]); }
};

// Edge labels on the full grid, boundary included. H is rows x (cols+1),
// V is (rows+1) x cols; cell (i, j) has W = H(i, j), E = H(i, j+1),
// N = V(i, j), S = V(i+1, j). All indices 0-based.
class State {
 public:
  State() = default;
  State(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Label h(int i, int j) const { return h_[i * (cols_ + 1) + j]; }
  Label v(int i, int j) const { return v_[i * cols_ + j]; }
  Label& h(int i, int j) { return h_[i * (cols_ + 1) + j]; }
  Label& v(int i, int j) { return v_[i * cols_ + j]; }
  VertexConfig config(int i, int j) const { return {h(i, j), v(i, j), h(i, j + 1), v(i + 1, j)}; }

  bool operator==(const State&) const = default;
  auto operator<=>(const State&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Label> h_, v_;
};

struct MarkedState {
  State state;
  std::vector<std::pair<int, int>> marks;  // sorted (row, col), 0-based
};

ModelInstance build_bumpless(const Permutation& w);

enum class AtomVariant { ATOM, POLY };
// The model indexed by v: the k-th smallest color leaves on the right at
// height v(k) counted from the bottom. The top carries the reversed
// 01-sequence of lam with its i-th 1 (bottom-up) colored c_i; y is y1.
ModelInstance build_atom_model(const Partition& lam, const Permutation& v, AtomVariant variant);

// Semidual model on the n x n grid: left and bottom occupied, top and right empty.
ModelInstance build_semidual(int n, bool vexillary_weights = false);

// Uncolored five-vertex model on n x (n + lam1); row i carries x_{n+1-i} and
// column j carries y_{m+1-j}.
ModelInstance build_five_vertex(const Partition& lam, int n);

std::vector<State> enumerate_states(const ModelInstance& m);
// Every label assignment with nonzero weight, without pruning. Tiny grids only.
std::vector<State> brute_force_states(const ModelInstance& m);

int vertex_at(const ModelInstance& m, const State& s, int i, int j);
bool is_admissible(const ModelInstance& m, const State& s);
Poly state_weight(const ModelInstance& m, const State& s);
Poly partition_function(const ModelInstance& m);
Poly partition_function(const ModelInstance& m, const std::vector<State>& states);

std::vector<MarkedState> enumerate_marked_states(const ModelInstance& m, const std::vector<State>& states);
std::vector<MarkedState> enumerate_marked_states(const ModelInstance& m);
Poly marked_weight(const ModelInstance& m, const MarkedState& ms);

// Each color's edges form one path between its two boundary edges.
bool colors_form_paths(const ModelInstance& m, const State& s);

std::string render_ascii(const ModelInstance& m, const State& s);
std::string render_json(const ModelInstance& m, const State& s, const std::vector<std::pair<int, int>>* marks = nullptr);

// R-matrices. Entries are keyed by the four edges (BL, TL, TR, BR) around the
// crossing; the weight sees the two row parameters and the shared y.
struct RParams {
  Poly xi, xj, y, b;
};

struct RVertex {
  std::array<Sym, 4> pattern;  // BL, TL, TR, BR
  std::function<Poly(const RParams&)> weight;
};

struct RTable {
  std::string name;
  std::vector<RVertex> entries;
  Poly value(const std::array<Label, 4>& bl_tl_tr_br, const RParams& p) const;
};

RTable atom_r_table();
RTable bumpless_r_table();
// As printed: the (0,0,0,0) and (1,1,1,1) entries are exchanged relative to
// the kernel of the RLL system for the semidual table.
RTable semidual_r_table_printed();
RTable semidual_r_table();

struct RllResult {
  bool ok = true;
  // a0, a1, q_in, b0, b1, q_out of the first failing boundary.
  std::array<Label, 6> failure{};
  std::size_t checked = 0;
};

// Compares the two sides of the train argument over all boundary sextuples
// with at most three colors (one for uncolored tables).
RllResult verify_rll(const WeightTable& L, const RTable& R);

// Keys are (in_top, in_bot, out_top, out_bot) with integer colors where a
// larger integer is a larger color.
using RKey = std::array<int, 4>;

struct RSolution {
  VarRegistry reg;  // x1 = z_i, x2 = z_j, y1 = y
  std::vector<std::pair<RKey, RatFunc>> entries;  // nonzero entries, in key order
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  const RatFunc* find(const RKey& k) const;
};

RSolution solve_r_matrix(const WeightTable& L);

// beta * Z(G_w) == d_i Z(G_{w s_i}) as polynomials; requires w s_i > w.
bool functional_equation_check(const Permutation& w, int i);
// Z(model w0 s_i w) == shifted operator applied to Z(model w0 w); requires s_i w > w.
bool atom_functional_equation_check(const Partition& lam, const Permutation& w, int i, AtomVariant variant);

}  // namespace groth
