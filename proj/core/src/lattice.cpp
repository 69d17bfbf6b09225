#include "groth/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/tableaux.hpp"
#include "json.hpp"

namespace groth {

bool pattern_matches(const std::array<Sym, 4>& pattern, const std::array<Label, 4>& labels) {
  Label d = 0, c = 0, p = 0;
  for (int k = 0; k < 4; ++k) {
    const Label l = labels[k];
    const Sym s = pattern[k];
    if (s == Sym::Z) {
      if (l != 0) return false;
      continue;
    }
    if (l == 0) return false;
    Label& slot = s == Sym::D ? d : s == Sym::C ? c : p;
    if (slot == 0)
      slot = l;
    else if (slot != l)
      return false;
  }
  // C is the larger color, i.e. the smaller index.
  return !(c && p) || c < p;
}

int WeightTable::match(const VertexConfig& c) const {
  const std::array<Label, 4> l{c.w, c.n, c.e, c.s};
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (pattern_matches(vertices[k].pattern, l)) return int(k);
  return -1;
}

namespace {

constexpr Sym Z = Sym::Z, D = Sym::D, C = Sym::C, P = Sym::P;
constexpr auto ONE = WeightForm::ONE;
constexpr auto OPL = WeightForm::OPLUS;
constexpr auto BOPL = WeightForm::BETA_OPLUS;
constexpr auto OPB = WeightForm::ONE_PLUS_BETA_OPLUS;

}  // namespace

WeightTable atom_table() {
  return {"atom", Flow::DOWN, true,
          {{"u1", "empty", {Z, Z, Z, Z}, ONE},
           {"u2", "bump", {C, P, P, C}, ONE},
           {"u2t", "cross", {P, C, P, C}, ONE},
           {"u2o", "full", {D, D, D, D}, ONE},
           {"v2", "horizontal", {D, Z, D, Z}, OPL},
           {"w1", "turn_ne", {Z, D, D, Z}, ONE},
           {"w2", "turn_ws", {D, Z, Z, D}, OPB}}};
}

WeightTable atom_poly_table() {
  WeightTable t = atom_table();
  t.name = "atom-poly";
  t.vertices[1] = {"u2p", "bump", {P, C, C, P}, ONE};
  return t;
}

WeightTable bumpless_table() {
  return {"bumpless", Flow::UP, true,
          {{"a1", "blank", {Z, Z, Z, Z}, BOPL},
           {"a2", "bump", {P, P, C, C}, ONE},
           {"a2t", "cross", {C, P, C, P}, ONE},
           {"b1", "vertical", {Z, D, Z, D}, ONE},
           {"b2", "horizontal", {D, Z, D, Z}, ONE},
           {"c1", "turn_nw", {D, D, Z, Z}, OPB},
           {"c2", "turn_se", {Z, Z, D, D}, ONE}}};
}

WeightTable semidual_table() {
  return {"semidual", Flow::DOWN, false,
          {{"a1bar", "empty", {Z, Z, Z, Z}, ONE},
           {"a2bar", "full", {D, D, D, D}, ONE},
           {"b1bar", "vertical", {Z, D, Z, D}, ONE},
           {"b2bar", "horizontal", {D, Z, D, Z}, BOPL},
           {"c1bar", "turn_ne", {Z, D, D, Z}, OPB},
           {"c2bar", "turn_ws", {D, Z, Z, D}, ONE}}};
}

WeightTable semidual_vex_table() {
  WeightTable t = semidual_table();
  t.name = "semidual-vex";
  t.vertices[3].form = OPL;
  return t;
}

WeightTable five_vertex_table() {
  return {"five-vertex", Flow::DOWN, false,
          {{"u1", "empty", {Z, Z, Z, Z}, ONE},
           {"u2o", "full", {D, D, D, D}, ONE},
           {"v2", "horizontal", {D, Z, D, Z}, OPL},
           {"w1", "turn_ne", {Z, D, D, Z}, ONE},
           {"w2", "turn_ws", {D, Z, Z, D}, OPB}}};
}

Poly form_value(WeightForm f, const Poly& x, const Poly& y) {
  const auto& reg = x.registry();
  switch (f) {
    case WeightForm::ONE: return Poly(reg, 1);
    case WeightForm::OPLUS: return oplus(x, y);
    case WeightForm::BETA_OPLUS: return Poly::beta(reg) * oplus(x, y);
    case WeightForm::ONE_PLUS_BETA_OPLUS: return Poly(reg, 1) + Poly::beta(reg) * oplus(x, y);
  }
  return Poly(reg);
}

State::State(int rows, int cols)
    : rows_(rows), cols_(cols), h_(std::size_t(rows) * (cols + 1), 0), v_(std::size_t(rows + 1) * cols, 0) {}

namespace {

ModelInstance make_instance(WeightTable table, int rows, int cols, int colors, const VarRegistry& reg) {
  ModelInstance m;
  m.table = std::move(table);
  m.rows = rows;
  m.cols = cols;
  m.colors = colors;
  m.top.assign(cols, 0);
  m.bottom.assign(cols, 0);
  m.left.assign(rows, 0);
  m.right.assign(rows, 0);
  m.reg = reg;
  return m;
}

}  // namespace

ModelInstance build_bumpless(const Permutation& w) {
  const int n = w.size();
  const VarRegistry reg(n, n);
  ModelInstance m = make_instance(bumpless_table(), n, n, n, reg);
  for (int j = 0; j < n; ++j) m.bottom[j] = Label(j + 1);
  for (int i = 0; i < n; ++i) m.right[i] = Label(w(i + 1));
  for (int i = 1; i <= n; ++i) m.row_x.push_back(Poly::x(reg, i));
  for (int j = 1; j <= n; ++j) m.col_y.push_back(Poly::y(reg, j));
  return m;
}

ModelInstance build_atom_model(const Partition& lam, const Permutation& v, AtomVariant variant) {
  const int n = v.size();
  const auto seq = zero_one_sequence(lam, n);
  const int cols = lam.first() + n;
  if (int(seq.size()) > cols) throw DomainError("shape too large for grid");
  const VarRegistry reg(n, 1);
  ModelInstance m =
      make_instance(variant == AtomVariant::ATOM ? atom_table() : atom_poly_table(), n, cols, n, reg);
  int color = 0;
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq[k]) m.top[seq.size() - 1 - k] = Label(++color);
  for (int k = 1; k <= n; ++k) {
    // The k-th smallest color is c_{n+1-k}.
    const int row_from_top = n + 1 - v(k);
    m.right[row_from_top - 1] = Label(n + 1 - k);
  }
  for (int i = 1; i <= n; ++i) m.row_x.push_back(Poly::x(reg, i));
  m.col_y.assign(cols, Poly::y(reg, 1));
  return m;
}

ModelInstance build_semidual(int n, bool vexillary_weights) {
  const VarRegistry reg(n, n);
  ModelInstance m = make_instance(vexillary_weights ? semidual_vex_table() : semidual_table(), n, n, 1, reg);
  m.left.assign(n, 1);
  m.bottom.assign(n, 1);
  for (int i = 1; i <= n; ++i) m.row_x.push_back(Poly::x(reg, i));
  for (int j = 1; j <= n; ++j) m.col_y.push_back(Poly::y(reg, j));
  return m;
}

ModelInstance build_five_vertex(const Partition& lam, int n) {
  const auto seq = zero_one_sequence(lam, n);
  const int cols = n + lam.first();
  const VarRegistry reg(n, cols);
  ModelInstance m = make_instance(five_vertex_table(), n, cols, 1, reg);
  for (std::size_t k = 0; k < seq.size(); ++k) m.top[seq.size() - 1 - k] = Label(seq[k]);
  m.right.assign(n, 1);
  for (int i = 1; i <= n; ++i) m.row_x.push_back(Poly::x(reg, n + 1 - i));
  for (int j = 1; j <= cols; ++j) m.col_y.push_back(Poly::y(reg, cols + 1 - j));
  return m;
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const ModelInstance& m) : m_(m), st_(m.rows, m.cols), need_(m.rows) {
    const int L = m.colors + 1;
    for (int i = 0; i < m.rows; ++i) {
      std::vector<int> cnt(L, 0);
      for (int j = 0; j < m.cols; ++j) ++cnt[m.top[j]];
      for (int r = 0; r <= i; ++r) {
        const int in = m.table.flow == Flow::DOWN ? m.left[r] : m.right[r];
        const int out = m.table.flow == Flow::DOWN ? m.right[r] : m.left[r];
        ++cnt[in];
        --cnt[out];
      }
      need_[i] = cnt;
    }
    for (int i = 0; i < m.rows; ++i) {
      st_.h(i, 0) = m.left[i];
      st_.h(i, m.cols) = m.right[i];
    }
    for (int j = 0; j < m.cols; ++j) {
      st_.v(0, j) = m.top[j];
      st_.v(m.rows, j) = m.bottom[j];
    }
    have_.assign(L, 0);
  }

  std::vector<State> run() {
    for (int i = 0; i < m_.rows; ++i)
      for (int l = 1; l <= m_.colors; ++l)
        if (need_[i][l] < 0) return {};
    if (m_.rows && m_.cols) rec(0, 0);
    else out_.push_back(st_);
    return std::move(out_);
  }

 private:
  void candidates(Sym s, std::vector<Label>& out) const {
    out.clear();
    if (s == Sym::Z) {
      out.push_back(0);
      return;
    }
    for (int l = 1; l <= m_.colors; ++l) out.push_back(Label(l));
  }

  void rec(int i, int j) {
    if (j == m_.cols) {
      for (int l = 1; l <= m_.colors; ++l)
        if (have_[l] != need_[i][l]) return;
      std::fill(have_.begin(), have_.end(), 0);
      if (i + 1 == m_.rows)
        out_.push_back(st_);
      else
        rec(i + 1, 0);
      // Restore the counts of row i's cut for the caller's loop.
      std::fill(have_.begin(), have_.end(), 0);
      for (int c = 0; c < m_.cols; ++c) ++have_[st_.v(i + 1, c)];
      return;
    }
    const Label W = st_.h(i, j), N = st_.v(i, j);
    const bool last_col = j + 1 == m_.cols, last_row = i + 1 == m_.rows;
    std::vector<Label> es, ss;
    for (const auto& vt : m_.table.vertices) {
      if (!partial_ok(vt.pattern, W, N)) continue;
      candidates(vt.pattern[2], es);
      candidates(vt.pattern[3], ss);
      for (Label E : es) {
        if (last_col && E != m_.right[i]) continue;
        for (Label S : ss) {
          if (last_row && S != m_.bottom[j]) continue;
          if (!pattern_matches(vt.pattern, {W, N, E, S})) continue;
          if (S && have_[S] + 1 > need_[i][S]) continue;
          const Label oldE = st_.h(i, j + 1), oldS = st_.v(i + 1, j);
          st_.h(i, j + 1) = E;
          st_.v(i + 1, j) = S;
          ++have_[S];
          rec(i, j + 1);
          --have_[S];
          if (!last_col) st_.h(i, j + 1) = oldE;
          if (!last_row) st_.v(i + 1, j) = oldS;
        }
      }
    }
  }

  // W and N agree with the first two slots as far as emptiness goes.
  static bool partial_ok(const std::array<Sym, 4>& p, Label W, Label N) {
    if ((p[0] == Sym::Z) != (W == 0)) return false;
    if ((p[1] == Sym::Z) != (N == 0)) return false;
    return true;
  }

  const ModelInstance& m_;
  State st_;
  std::vector<std::vector<int>> need_;
  std::vector<int> have_;
  std::vector<State> out_;
};

}  // namespace

std::vector<State> enumerate_states(const ModelInstance& m) { return Enumerator(m).run(); }

std::vector<State> brute_force_states(const ModelInstance& m) {
  State s(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    s.h(i, 0) = m.left[i];
    s.h(i, m.cols) = m.right[i];
  }
  for (int j = 0; j < m.cols; ++j) {
    s.v(0, j) = m.top[j];
    s.v(m.rows, j) = m.bottom[j];
  }
  std::vector<Label*> slots;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 1; j < m.cols; ++j) slots.push_back(&s.h(i, j));
  for (int i = 1; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) slots.push_back(&s.v(i, j));
  std::vector<State> out;
  const int L = m.colors + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    total *= L;
    if (total > 50'000'000) throw DomainError("grid too large for brute force");
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (Label* p : slots) {
      *p = Label(c % L);
      c /= L;
    }
    if (is_admissible(m, s) && !state_weight(m, s).is_zero()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int vertex_at(const ModelInstance& m, const State& s, int i, int j) { return m.table.match(s.config(i, j)); }

bool is_admissible(const ModelInstance& m, const State& s) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (vertex_at(m, s, i, j) < 0) return false;
  return true;
}

namespace {

struct WeightCache {
  explicit WeightCache(const ModelInstance& m) : m_(m), cache_(std::size_t(m.rows) * m.cols * 4) {}

  const Poly& get(int i, int j, WeightForm f) {
    auto& slot = cache_[(std::size_t(i) * m_.cols + j) * 4 + std::size_t(f)];
    if (!slot) slot = m_.cell_weight(i, j, f);
    return *slot;
  }

  const ModelInstance& m_;
  std::vector<std::optional<Poly>> cache_;
};

Poly weight_with(const ModelInstance& m, const State& s, WeightCache& wc,
                 const std::vector<std::pair<int, int>>* marks) {
  Poly w(m.reg, 1);
  std::size_t mk = 0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, s, i, j);
      if (k < 0) return Poly(m.reg);
      const auto& vt = m.table.vertices[k];
      if (marks && vt.markable()) {
        const bool marked = mk < marks->size() && (*marks)[mk] == std::make_pair(i, j);
        if (marked) {
          ++mk;
          w *= wc.get(i, j, WeightForm::BETA_OPLUS);
        }
        continue;
      }
      if (vt.form != WeightForm::ONE) w *= wc.get(i, j, vt.form);
    }
  return w;
}

}  // namespace

Poly state_weight(const ModelInstance& m, const State& s) {
  WeightCache wc(m);
  return weight_with(m, s, wc, nullptr);
}

Poly partition_function(const ModelInstance& m, const std::vector<State>& states) {
  WeightCache wc(m);
  Poly z(m.reg);
  for (const auto& s : states) z += weight_with(m, s, wc, nullptr);
  return z;
}

Poly partition_function(const ModelInstance& m) { return partition_function(m, enumerate_states(m)); }

std::vector<MarkedState> enumerate_marked_states(const ModelInstance& m, const std::vector<State>& states) {
  std::vector<MarkedState> out;
  for (const auto& s : states) {
    std::vector<std::pair<int, int>> markable;
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        const int k = vertex_at(m, s, i, j);
        if (k >= 0 && m.table.vertices[k].markable()) markable.emplace_back(i, j);
      }
    if (markable.size() > 20) throw DomainError("too many markable cells");
    for (std::uint32_t mask = 0; mask < (1u << markable.size()); ++mask) {
      MarkedState ms{s, {}};
      for (std::size_t b = 0; b < markable.size(); ++b)
        if (mask >> b & 1u) ms.marks.push_back(markable[b]);
      out.push_back(std::move(ms));
    }
  }
  return out;
}

std::vector<MarkedState> enumerate_marked_states(const ModelInstance& m) {
  return enumerate_marked_states(m, enumerate_states(m));
}

Poly marked_weight(const ModelInstance& m, const MarkedState& ms) {
  WeightCache wc(m);
  return weight_with(m, ms.state, wc, &ms.marks);
}

bool colors_form_paths(const ModelInstance& m, const State& s) {
  if (!m.table.colored) return true;
  // Edge ids: horizontal edges first, then vertical ones.
  const int nh = m.rows * (m.cols + 1);
  auto hid = [&](int i, int j) { return i * (m.cols + 1) + j; };
  auto vid = [&](int i, int j) { return nh + i * m.cols + j; };
  const int total = nh + (m.rows + 1) * m.cols;
  auto label_of = [&](int id) {
    if (id < nh) return s.h(id / (m.cols + 1), id % (m.cols + 1));
    id -= nh;
    return s.v(id / m.cols, id % m.cols);
  };
  for (int color = 1; color <= m.colors; ++color) {
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        const std::array<int, 4> ids{hid(i, j), vid(i, j), hid(i, j + 1), vid(i + 1, j)};
        std::vector<int> hit;
        for (int id : ids)
          if (label_of(id) == color) hit.push_back(id);
        if (hit.empty()) continue;
        if (hit.size() != 2) return false;
        parent[find(hit[0])] = find(hit[1]);
      }
    int root = -1;
    int edges = 0;
    for (int id = 0; id < total; ++id) {
      if (label_of(id) != color) continue;
      ++edges;
      if (root < 0)
        root = find(id);
      else if (find(id) != root)
        return false;
    }
    if (edges == 0) continue;
    int boundary = 0;
    for (int i = 0; i < m.rows; ++i) boundary += (m.left[i] == color) + (m.right[i] == color);
    for (int j = 0; j < m.cols; ++j) boundary += (m.top[j] == color) + (m.bottom[j] == color);
    if (boundary != 2) return false;
  }
  return true;
}

namespace {

const char* glyph(const VertexType& vt, const VertexConfig& c) {
  if (vt.tile == "bump") return "╳";
  const bool w = c.w, n = c.n, e = c.e, s = c.s;
  if (w && n && e && s) return vt.tile == "cross" ? "┼" : "╋";
  if (w && e) return "─";
  if (n && s) return "│";
  if (w && n) return "┘";
  if (e && s) return "┌";
  if (w && s) return "┐";
  if (n && e) return "└";
  return "·";
}

char label_char(Label l) { return l == 0 ? '.' : char('0' + l); }

}  // namespace

std::string render_ascii(const ModelInstance& m, const State& s) {
  std::ostringstream os;
  auto vline = [&](int i) {
    os << ' ';
    for (int j = 0; j < m.cols; ++j) os << label_char(s.v(i, j)) << ' ';
    os << '\n';
  };
  vline(0);
  for (int i = 0; i < m.rows; ++i) {
    os << label_char(s.h(i, 0));
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, s, i, j);
      os << (k < 0 ? "?" : glyph(m.table.vertices[k], s.config(i, j))) << label_char(s.h(i, j + 1));
    }
    os << '\n';
    vline(i + 1);
  }
  return os.str();
}

std::string render_json(const ModelInstance& m, const State& s, const std::vector<std::pair<int, int>>* marks) {
  nlohmann::json tiles = nlohmann::json::array(), names = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array(), nrow = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) {
      const int k = vertex_at(m, s, i, j);
      row.push_back(k < 0 ? "invalid" : m.table.vertices[k].tile);
      nrow.push_back(k < 0 ? "invalid" : m.table.vertices[k].name);
    }
    tiles.push_back(row);
    names.push_back(nrow);
  }
  nlohmann::json h = nlohmann::json::array(), v = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j <= m.cols; ++j) row.push_back(int(s.h(i, j)));
    h.push_back(row);
  }
  for (int i = 0; i <= m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(int(s.v(i, j)));
    v.push_back(row);
  }
  nlohmann::json j{{"model", m.table.name}, {"rows", m.rows}, {"cols", m.cols}, {"tiles", tiles},
                   {"vertices", names}, {"horizontal", h}, {"vertical", v}};
  if (marks) {
    nlohmann::json mk = nlohmann::json::array();
    for (const auto& [r, c] : *marks) mk.push_back({r, c});
    j["marked"] = mk;
  }
  return j.dump();
}

Poly RTable::value(const std::array<Label, 4>& l, const RParams& p) const {
  for (const auto& e : entries)
    if (pattern_matches(e.pattern, l)) return e.weight(p);
  return Poly(p.b.registry());
}

namespace {

Poly one(const RParams& p) { return Poly(p.b.registry(), 1); }
Poly zi(const RParams& p) { return oplus(p.xi, p.y); }
Poly zj(const RParams& p) { return oplus(p.xj, p.y); }

}  // namespace

RTable atom_r_table() {
  auto a = [](const RParams& p) { return (one(p) + p.b * zi(p)) * zj(p); };
  return {"atom",
          {{{Z, Z, Z, Z}, a},
           {{Z, D, D, Z}, a},
           {{D, Z, D, Z}, [](const RParams& p) { return (zj(p) - zi(p)) * zj(p); }},
           {{D, Z, Z, D}, [](const RParams& p) { return (one(p) + p.b * zj(p)) * zj(p); }},
           {{P, C, C, P}, [](const RParams& p) { return (one(p) + p.b * zj(p)) * zi(p); }},
           {{C, P, P, C}, a},
           {{P, C, P, C}, [](const RParams& p) { return zj(p) - zi(p); }},
           {{D, D, D, D}, a}}};
}

RTable bumpless_r_table() {
  auto bi = [](const RParams& p) { return one(p) + p.b * p.xi; };
  auto bj = [](const RParams& p) { return one(p) + p.b * p.xj; };
  auto diff = [](const RParams& p) { return p.b * (p.xj - p.xi); };
  return {"bumpless",
          {{{Z, Z, Z, Z}, bi},
           {{Z, D, D, Z}, bi},
           {{Z, D, Z, D}, diff},
           {{D, Z, Z, D}, bj},
           {{P, C, C, P}, bi},
           {{C, P, P, C}, bj},
           {{P, C, P, C}, diff},
           {{D, D, D, D}, bi}}};
}

RTable semidual_r_table_printed() {
  auto bi = [](const RParams& p) { return one(p) + p.b * p.xi; };
  auto bj = [](const RParams& p) { return one(p) + p.b * p.xj; };
  return {"semidual-printed",
          {{{D, D, D, D}, bj},
           {{Z, Z, Z, Z}, bi},
           {{D, Z, D, Z}, [](const RParams& p) { return p.b * (p.xj - p.xi); }},
           {{Z, D, D, Z}, bj},
           {{D, Z, Z, D}, bi}}};
}

RTable semidual_r_table() {
  RTable t = semidual_r_table_printed();
  t.name = "semidual";
  std::swap(t.entries[0].weight, t.entries[1].weight);
  return t;
}

RllResult verify_rll(const WeightTable& L, const RTable& R) {
  const VarRegistry reg(2, 1);
  const RParams p{Poly::x(reg, 1), Poly::x(reg, 2), Poly::y(reg, 1), Poly::beta(reg)};
  const int K = L.colored ? 4 : 2;
  auto idx = [K](int a, int b, int c, int d) { return ((a * K + b) * K + c) * K + d; };
  std::vector<std::optional<Poly>> li(K * K * K * K), lj(K * K * K * K), rr(K * K * K * K);
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int c = 0; c < K; ++c)
        for (int d = 0; d < K; ++d) {
          const VertexConfig cfg{Label(a), Label(b), Label(c), Label(d)};
          const int k = L.match(cfg);
          if (k >= 0) {
            li[idx(a, b, c, d)] = form_value(L.vertices[k].form, p.xi, p.y);
            lj[idx(a, b, c, d)] = form_value(L.vertices[k].form, p.xj, p.y);
          }
          // rr[in0, in1, out0, out1] read at BL = in1, TL = in0, TR = out1, BR = out0.
          Poly r = R.value({Label(b), Label(a), Label(d), Label(c)}, p);
          if (!r.is_zero()) rr[idx(a, b, c, d)] = std::move(r);
        }
  RllResult res;
  for (int a0 = 0; a0 < K; ++a0)
    for (int a1 = 0; a1 < K; ++a1)
      for (int q = 0; q < K; ++q)
        for (int b0 = 0; b0 < K; ++b0)
          for (int b1 = 0; b1 < K; ++b1)
            for (int q2 = 0; q2 < K; ++q2) {
              Poly lhs(reg), rhs(reg);
              for (int m0 = 0; m0 < K; ++m0)
                for (int m1 = 0; m1 < K; ++m1)
                  for (int qm = 0; qm < K; ++qm) {
                    const auto& x1 = li[idx(a0, q, m0, qm)];
                    const auto& x2 = lj[idx(a1, qm, m1, q2)];
                    const auto& x3 = rr[idx(m0, m1, b0, b1)];
                    if (x1 && x2 && x3) lhs += *x1 * *x2 * *x3;
                    const auto& y1 = rr[idx(a0, a1, m0, m1)];
                    const auto& y2 = lj[idx(m1, q, b1, qm)];
                    const auto& y3 = li[idx(m0, qm, b0, q2)];
                    if (y1 && y2 && y3) rhs += *y1 * *y2 * *y3;
                  }
              ++res.checked;
              if (lhs != rhs) {
                res.ok = false;
                res.failure = {Label(a0), Label(a1), Label(q), Label(b0), Label(b1), Label(q2)};
                return res;
              }
            }
  return res;
}

bool functional_equation_check(const Permutation& w, int i) {
  if (i < 1 || i >= w.size()) throw DomainError("index out of range");
  const Permutation up = times_simple(w, i);
  if (length(up) <= length(w)) throw DomainError("functional equation needs w s_i > w");
  const ModelInstance mw = build_bumpless(w);
  const ModelInstance mu = build_bumpless(up);
  const Poly zw = partition_function(mw);
  const Poly zu = partition_function(mu);
  const auto& reg = mw.reg;
  const Poly b = Poly::beta(reg);
  const Poly num = (Poly(reg, 1) + b * Poly::x(reg, i + 1)) * zu - (Poly(reg, 1) + b * Poly::x(reg, i)) * swap_x(zu, i);
  return b * zw == exact_divide(num, Poly::x(reg, i) - Poly::x(reg, i + 1));
}

bool atom_functional_equation_check(const Partition& lam, const Permutation& w, int i, AtomVariant variant) {
  const int n = w.size();
  if (i < 1 || i >= n) throw DomainError("index out of range");
  const Permutation up = simple_times(i, w);
  if (length(up) <= length(w)) throw DomainError("functional equation needs s_i w > w");
  const Permutation w0 = Permutation::longest(n);
  const Poly lower = partition_function(build_atom_model(lam, w0 * w, variant));
  const Poly upper = partition_function(build_atom_model(lam, w0 * up, variant));
  const auto kind = variant == AtomVariant::ATOM ? LascouxKind::ATOM : LascouxKind::POLY;
  return upper == shifted_lascoux_step(kind, i, lower);
}

}  // namespace groth
