#include "groth/bijections.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "groth/errors.hpp"

namespace groth {

const char* tile_name(Tile t) {
  switch (t) {
    case Tile::BLANK: return "blank";
    case Tile::CROSS: return "cross";
    case Tile::BUMP: return "bump";
    case Tile::VERTICAL: return "vertical";
    case Tile::HORIZONTAL: return "horizontal";
    case Tile::TURN_NW: return "turn_nw";
    case Tile::TURN_SE: return "turn_se";
  }
  return "?";
}

namespace {

Tile tile_from_name(const std::string& s) {
  for (Tile t : {Tile::BLANK, Tile::CROSS, Tile::BUMP, Tile::VERTICAL, Tile::HORIZONTAL, Tile::TURN_NW, Tile::TURN_SE})
    if (s == tile_name(t)) return t;
  throw DomainError("not a bumpless tile: " + s);
}

// Cells in sweep order: anti-diagonals from the bottom-left corner.
std::vector<std::pair<int, int>> sweep_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= 2 * n - 2; ++d)
    for (int ib = 0; ib < n; ++ib) {
      const int j = d - ib;
      if (j >= 0 && j < n) out.emplace_back(n - 1 - ib, j);
    }
  return out;
}

// Edge labels while tracing pipes through a BPD.
struct Trace {
  explicit Trace(int n) : n(n), h(std::size_t(n) * (n + 1), 0), v(std::size_t(n + 1) * n, 0) {
    for (int j = 0; j < n; ++j) V(n, j) = j + 1;
  }
  int& H(int i, int j) { return h[std::size_t(i) * (n + 1) + j]; }
  int& V(int i, int j) { return v[std::size_t(i) * n + j]; }
  int n;
  std::vector<int> h, v;
};

// Moves pipes through tile (i, j); `swap` says whether a CROSS really crosses.
void pass_tile(Trace& t, int i, int j, Tile tile, bool swap) {
  const int w = t.H(i, j), s = t.V(i + 1, j);
  int& e = t.H(i, j + 1);
  int& nn = t.V(i, j);
  auto need = [](bool ok) {
    if (!ok) throw DomainError("malformed pipe network");
  };
  switch (tile) {
    case Tile::BLANK: need(!w && !s); break;
    case Tile::VERTICAL: need(!w && s); nn = s; break;
    case Tile::HORIZONTAL: need(w && !s); e = w; break;
    case Tile::TURN_NW: need(w && !s); nn = w; break;
    case Tile::TURN_SE: need(!w && s); e = s; break;
    case Tile::CROSS:
    case Tile::BUMP:
      need(w && s);
      if (tile == Tile::CROSS && swap) {
        e = w;
        nn = s;
      } else {
        nn = w;
        e = s;
      }
      break;
  }
}

Permutation right_boundary(Trace& t) {
  std::vector<int> word(t.n);
  for (int i = 0; i < t.n; ++i) word[i] = t.H(i, t.n);
  for (int j = 0; j < t.n; ++j)
    if (t.V(0, j)) throw DomainError("malformed pipe network");
  return Permutation(word);
}

WeightTable uncolored_bumpless_table() {
  WeightTable t = bumpless_table();
  t.name = "bumpless-uncolored";
  t.colored = false;
  t.vertices.erase(t.vertices.begin() + 1, t.vertices.begin() + 3);
  t.vertices.insert(t.vertices.begin() + 1, {"a2", "full", {Sym::D, Sym::D, Sym::D, Sym::D}, WeightForm::ONE});
  return t;
}

}  // namespace

std::string BumplessPipeDream::str() const { return render_bpd(*this); }

BumplessPipeDream forget_colors(const ModelInstance& m, const State& s) {
  BumplessPipeDream b{m.rows, std::vector<Tile>(std::size_t(m.rows) * m.cols)};
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, s, i, j);
      if (k < 0) throw DomainError("inadmissible state");
      b.at(i, j) = tile_from_name(m.table.vertices[k].tile);
    }
  return b;
}

std::vector<BumplessPipeDream> all_bpds(int n) {
  ModelInstance m;
  m.table = uncolored_bumpless_table();
  m.rows = m.cols = n;
  m.colors = 1;
  m.top.assign(n, 0);
  m.left.assign(n, 0);
  m.bottom.assign(n, 1);
  m.right.assign(n, 1);
  m.reg = VarRegistry(n, n);
  for (int i = 1; i <= n; ++i) {
    m.row_x.push_back(Poly::x(m.reg, i));
    m.col_y.push_back(Poly::y(m.reg, i));
  }
  std::vector<BumplessPipeDream> out;
  for (const auto& s : enumerate_states(m)) {
    BumplessPipeDream b{n, std::vector<Tile>(std::size_t(n) * n)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& vt = m.table.vertices[vertex_at(m, s, i, j)];
        b.at(i, j) = vt.tile == "full" ? Tile::CROSS : tile_from_name(vt.tile);
      }
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation key_of_state(const BumplessPipeDream& b) {
  Trace t(b.n);
  std::set<std::pair<int, int>> crossed;
  for (const auto& [i, j] : sweep_order(b.n)) {
    bool swap = true;
    if (b.at(i, j) == Tile::CROSS) {
      const int a = t.H(i, j), c = t.V(i + 1, j);
      swap = crossed.insert(std::minmax(a, c)).second;
    }
    pass_tile(t, i, j, b.at(i, j), swap);
  }
  return right_boundary(t);
}

std::vector<int> crossing_word(const BumplessPipeDream& b) {
  Trace t(b.n);
  std::vector<int> seq(b.n);
  for (int k = 0; k < b.n; ++k) seq[k] = k + 1;
  std::vector<int> word;
  for (const auto& [i, j] : sweep_order(b.n)) {
    if (b.at(i, j) == Tile::CROSS) {
      const int a = t.H(i, j);
      const auto pos = std::find(seq.begin(), seq.end(), a) - seq.begin();
      if (pos + 1 >= b.n || seq[pos + 1] != t.V(i + 1, j)) throw DomainError("malformed pipe network");
      std::swap(seq[pos], seq[pos + 1]);
      word.push_back(int(pos) + 1);
    }
    pass_tile(t, i, j, b.at(i, j), true);
  }
  return word;
}

State phi(const State& s) {
  State t(s.rows(), s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j <= s.cols(); ++j) t.h(i, j) = s.h(i, j) ? 0 : 1;
  for (int i = 0; i <= s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) t.v(i, j) = s.v(i, j) ? 1 : 0;
  return t;
}

std::pair<Permutation, State> phi_inverse(const State& t) {
  const int n = t.rows();
  State s(n, n);
  for (int j = 0; j < n; ++j) {
    if (!t.v(n, j) || t.v(0, j)) throw DomainError("not a semidual state");
    s.v(n, j) = Label(j + 1);
  }
  for (const auto& [i, j] : sweep_order(n)) {
    const Label w = s.h(i, j), so = s.v(i + 1, j);
    const bool e_occ = !t.h(i, j + 1), n_occ = t.v(i, j) != 0;
    const bool w_occ = !t.h(i, j), s_occ = t.v(i + 1, j) != 0;
    if (w_occ != (w != 0) || s_occ != (so != 0)) throw DomainError("not a semidual state");
    Label e = 0, nn = 0;
    if (w && so) {
      if (!e_occ || !n_occ) throw DomainError("not a semidual state");
      // The larger color (smaller index) arriving from the left crosses; otherwise the pipes bump.
      if (w < so) {
        e = w;
        nn = so;
      } else {
        e = so;
        nn = w;
      }
    } else if (w || so) {
      if (e_occ == n_occ) throw DomainError("not a semidual state");
      (e_occ ? e : nn) = w ? w : so;
    } else if (e_occ || n_occ) {
      throw DomainError("not a semidual state");
    }
    s.h(i, j + 1) = e;
    s.v(i, j) = nn;
  }
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = s.h(i, n);
  const Permutation w(word);
  if (!is_admissible(build_bumpless(w), s)) throw DomainError("not a semidual state");
  return {w, s};
}

std::vector<State> dw_states(const Permutation& w) {
  std::vector<State> out;
  for (const auto& s : enumerate_states(build_bumpless(w))) out.push_back(phi(s));
  return out;
}

Poly dw_partition_function(const Permutation& w) {
  return partition_function(build_semidual(w.size(), true), dw_states(w));
}

Poly dw_partition_function_rows(const Permutation& w, int n) {
  if (n < 0 || n > w.size()) throw DomainError("row count out of range");
  const ModelInstance m = build_semidual(w.size(), true);
  Poly z(m.reg);
  for (const auto& s : dw_states(w)) {
    Poly t(m.reg, 1);
    for (int i = 0; i < m.rows && !t.is_zero(); ++i)
      for (int j = 0; j < m.cols; ++j) {
        const WeightForm f = m.table.vertices[vertex_at(m, s, i, j)].form;
        if (f == WeightForm::ONE) continue;
        if (i < n) {
          t *= m.cell_weight(i, j, f);
        } else if (f != WeightForm::ONE_PLUS_BETA_OPLUS) {
          t = Poly(m.reg);
          break;
        }
      }
    z += t;
  }
  return z;
}

bool support_in_Lambda(const State& t, const Permutation& w) {
  const ModelInstance m = build_semidual(w.size());
  const Partition big = Lambda_w(w);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, t, i, j);
      if (k < 0) return false;
      if (m.table.vertices[k].form != WeightForm::ONE && !big.contains(i + 1, j + 1)) return false;
    }
  return true;
}

bool crossing_in_Lambda(const State& s, const Permutation& w) {
  const ModelInstance m = build_bumpless(w);
  const Partition big = Lambda_w(w);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, s, i, j);
      if (k < 0) continue;
      const auto& tile = m.table.vertices[k].tile;
      if ((tile == "bump" || tile == "cross") && big.contains(i + 1, j + 1)) return true;
    }
  return false;
}

State rothe_state(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = inverse(w);
  State s(n, n);
  for (int j = 0; j < n; ++j) s.v(n, j) = Label(j + 1);
  // Pipe k rises in column k to row w^{-1}(k), then runs east.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      s.h(i - 1, j) = j >= w(i) ? Label(w(i)) : 0;
      s.v(i - 1, j - 1) = i > winv(j) ? Label(j) : 0;
    }
  return s;
}

std::vector<int> read_flags(const State& t, const Permutation& w) {
  const Partition big = Lambda_w(w);
  const auto k = std::size_t(lambda_w(w).length());
  // Walk the south-east boundary of Lambda_w from the top-right corner; the
  // paths after the first k only run diagonally out of the bottom-left.
  std::vector<int> rows;
  for (int r = 1; r <= big.length() && rows.size() < k; ++r) {
    if (t.h(r - 1, big[r])) rows.push_back(r);
    for (int c = big[r]; c > big[r + 1] && rows.size() < k; --c)
      if (t.v(r, c - 1)) rows.push_back(r);
  }
  return rows;
}

std::vector<int> read_flags(const Permutation& w) {
  if (!is_vexillary(w)) throw NotVexillary(w.str() + " is not vexillary");
  return read_flags(phi(rothe_state(w)), w);
}

std::string ExcitedYoungDiagram::render(int rows, int cols) const {
  std::ostringstream os;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      if (c > 1) os << ' ';
      os << (boxes.count({r, c}) ? "■" : marks.count({r, c}) ? "✱" : "·");
    }
    os << '\n';
  }
  return os.str();
}

ExcitedYoungDiagram state_to_eyd(const ModelInstance& m, const MarkedState& ms) {
  ExcitedYoungDiagram d;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, ms.state, i, j);
      if (k >= 0 && m.table.vertices[k].tile == "blank") d.boxes.insert({i + 1, j + 1});
    }
  for (const auto& [i, j] : ms.marks) d.marks.insert({i + 1, j + 1});
  return d;
}

Poly eyd_weight(const ExcitedYoungDiagram& d, const VarRegistry& reg) {
  const Poly b = Poly::beta(reg);
  Poly w(reg, 1);
  for (const auto* cells : {&d.boxes, &d.marks})
    for (const auto& [i, j] : *cells) w *= b * oplus(Poly::x(reg, i), Poly::y(reg, j));
  return w;
}

namespace {

bool slide_ok(const ExcitedYoungDiagram& d, std::pair<int, int> cell, const Partition& mu) {
  const auto [i, j] = cell;
  if (!(d.boxes.count(cell) || d.marks.count(cell)) || !mu.contains(i + 1, j + 1)) return false;
  for (const auto& c : {std::pair{i + 1, j}, std::pair{i, j + 1}, std::pair{i + 1, j + 1}})
    if (d.boxes.count(c) || d.marks.count(c)) return false;
  return true;
}

}  // namespace

std::optional<ExcitedYoungDiagram> excite(const ExcitedYoungDiagram& d, std::pair<int, int> cell, const Partition& mu) {
  if (!slide_ok(d, cell, mu)) return std::nullopt;
  ExcitedYoungDiagram e = d;
  auto& set = e.boxes.count(cell) ? e.boxes : e.marks;
  set.erase(cell);
  set.insert({cell.first + 1, cell.second + 1});
  return e;
}

std::optional<ExcitedYoungDiagram> emit(const ExcitedYoungDiagram& d, std::pair<int, int> cell, const Partition& mu) {
  if (!slide_ok(d, cell, mu)) return std::nullopt;
  ExcitedYoungDiagram e = d;
  e.marks.insert({cell.first + 1, cell.second + 1});
  return e;
}

std::set<ExcitedYoungDiagram> generate_eyd(const Partition& lam, const Partition& mu) {
  if (!mu.contains(lam)) throw DomainError("lam is not contained in mu");
  ExcitedYoungDiagram start;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam[r]; ++c) start.boxes.insert({r, c});
  std::set<ExcitedYoungDiagram> seen{start};
  std::vector<ExcitedYoungDiagram> todo{start};
  while (!todo.empty()) {
    const ExcitedYoungDiagram d = todo.back();
    todo.pop_back();
    for (const auto* cells : {&d.boxes, &d.marks})
      for (const auto& cell : *cells)
        for (auto move : {excite, emit})
          if (auto e = move(d, cell, mu); e && seen.insert(*e).second) todo.push_back(*e);
  }
  return seen;
}

SetValuedTableau theta(const ModelInstance& m, const MarkedState& ms, const Partition& lam) {
  // Row i carries x_{n+1-i}: a horizontal step in row i, column j is entry
  // e = n + 1 - i at content m + 1 - j - e, and so is a marked down-turn.
  std::map<int, std::vector<int>> plain, extra;
  std::size_t mk = 0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, ms.state, i, j);
      if (k < 0) throw DomainError("inadmissible state");
      const int e = m.rows - i;
      const int c = m.cols - j - e;
      const auto& name = m.table.vertices[k].tile;
      if (name == "horizontal") plain[c].push_back(e);
      if (mk < ms.marks.size() && ms.marks[mk] == std::pair{i, j}) {
        extra[c].push_back(e);
        ++mk;
      }
    }
  SetValuedTableau t(lam);
  std::map<int, std::vector<std::pair<int, int>>> diag;
  for (int r = 1; r <= lam.length(); ++r)
    for (int col = 1; col <= lam[r]; ++col) diag[col - r].emplace_back(r, col);
  for (auto& [c, boxes] : diag) {
    auto p = plain[c];
    std::sort(p.begin(), p.end());
    if (p.size() != boxes.size()) throw DomainError("inconsistent interlacing");
    for (std::size_t k = 0; k < boxes.size(); ++k) t.set(boxes[k].first, boxes[k].second, EntrySet(1) << (p[k] - 1));
    for (int e : extra[c]) {
      // The extra entry joins the box whose plain entry is the largest one below it.
      std::size_t k = 0;
      while (k + 1 < p.size() && p[k + 1] < e) ++k;
      if (p[k] > e) throw DomainError("inconsistent interlacing");
      t.set(boxes[k].first, boxes[k].second, t.at(boxes[k].first, boxes[k].second) | EntrySet(1) << (e - 1));
    }
  }
  for (const auto& [c, v] : plain)
    if (!v.empty() && !diag.count(c)) throw DomainError("inconsistent interlacing");
  return t;
}

std::string render_bpd(const BumplessPipeDream& b) {
  std::ostringstream os;
  for (int i = 0; i < b.n; ++i) {
    for (int j = 0; j < b.n; ++j) {
      switch (b.at(i, j)) {
        case Tile::BLANK: os << "· "; break;
        case Tile::CROSS: os << "┼─"; break;
        case Tile::BUMP: os << "╯╭"; break;
        case Tile::VERTICAL: os << "│ "; break;
        case Tile::HORIZONTAL: os << "──"; break;
        case Tile::TURN_NW: os << "╯ "; break;
        case Tile::TURN_SE: os << "╭─"; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace groth
