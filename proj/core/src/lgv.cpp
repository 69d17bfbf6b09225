#include "groth/lgv.hpp"

#include <functional>
#include <optional>

#include "groth/errors.hpp"

namespace groth {

LgvGraph::LgvGraph(int n, int cols, LgvMode mode) : n_(n), cols_(cols), mode_(mode), reg_(n, cols) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= cols + 1; ++j) nodes_.push_back({LgvNode::H, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= cols; ++j) nodes_.push_back({LgvNode::C, i, j});
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= cols; ++j) nodes_.push_back({LgvNode::V, i, j});
  out_.resize(nodes_.size());
}

int LgvGraph::node(LgvNode::Kind kind, int i, int j) const {
  const int hs = n_ * (cols_ + 1), cs = n_ * cols_;
  switch (kind) {
    case LgvNode::H:
      if (i < 1 || i > n_ || j < 1 || j > cols_ + 1) return -1;
      return (i - 1) * (cols_ + 1) + (j - 1);
    case LgvNode::C:
      if (i < 1 || i > n_ || j < 1 || j > cols_) return -1;
      return hs + (i - 1) * cols_ + (j - 1);
    case LgvNode::V:
      if (i < 1 || i > n_ + 1 || j < 1 || j > cols_) return -1;
      return hs + cs + (i - 1) * cols_ + (j - 1);
  }
  return -1;
}

void LgvGraph::add_edge(int from, int to, Poly w, bool k_edge) {
  out_[from].push_back(int(edges_.size()));
  edges_.push_back({from, to, std::move(w), k_edge});
}

LgvGraph build_graph(int n, LgvMode mode, int cols) {
  if (n < 1) throw DomainError("n must be positive");
  if (cols <= 0) cols = n;
  LgvGraph g(n, cols, mode);
  const auto& reg = g.registry();
  const Poly one(reg, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= cols; ++j) {
      const int c = g.node(LgvNode::C, i, j);
      Poly w = mode == LgvMode::KTHEORY ? Poly::beta(reg) * oplus(Poly::x(reg, i), Poly::y(reg, j))
                                        : Poly::x(reg, i) + Poly::y(reg, j);
      g.add_edge(g.node(LgvNode::H, i, j), c, one);
      g.add_edge(c, g.node(LgvNode::H, i, j + 1), std::move(w));
      g.add_edge(c, g.node(LgvNode::V, i + 1, j), one);
      g.add_edge(g.node(LgvNode::V, i, j), g.node(LgvNode::H, i, j + 1), one);
      if (mode == LgvMode::KTHEORY && i < n) g.add_edge(c, g.node(LgvNode::C, i + 1, j), one, true);
    }
  return g;
}

Poly path_sum(const LgvGraph& g, int from, int to) {
  std::vector<std::optional<Poly>> memo(g.nodes().size());
  std::function<const Poly&(int)> go = [&](int v) -> const Poly& {
    auto& slot = memo[v];
    if (slot) return *slot;
    Poly s(g.registry(), v == to ? 1 : 0);
    for (int e : g.out_edges(v)) {
      const auto& edge = g.edges()[e];
      const Poly& rest = go(edge.to);
      if (!rest.is_zero()) s += edge.weight * rest;
    }
    slot = std::move(s);
    return *slot;
  };
  return go(from);
}

Poly path_sum_brute(const LgvGraph& g, int from, int to) {
  Poly total(g.registry());
  std::function<void(int, const Poly&)> walk = [&](int v, const Poly& w) {
    if (v == to) total += w;
    for (int e : g.out_edges(v)) walk(g.edges()[e].to, w * g.edges()[e].weight);
  };
  walk(from, Poly(g.registry(), 1));
  return total;
}

std::vector<int> lgv_heights(const Permutation& w) {
  std::vector<int> h = flagging(w);
  h.resize(w.size(), w.size());
  return h;
}

Poly closed_form_p(int a, int b, const Partition& lam, const std::vector<int>& h, const VarRegistry& reg) {
  const int len = lam[b] + a - b;
  const int top = h[b - 1];
  if (len < 0 || a > top) return Poly(reg);
  // Weakly increasing words t_1 <= ... <= t_len over 1..top-a+1; the letter t
  // in column c stands for x_{a-1+t} + y_{t+c-1}.
  const int k = top - a + 1;
  Poly total(reg);
  std::vector<int> word(len, 1);
  while (true) {
    Poly term(reg, 1);
    for (int c = 1; c <= len; ++c) {
      const int t = word[c - 1];
      term *= Poly::x(reg, a - 1 + t) + Poly::y(reg, t + c - 1);
    }
    total += term;
    int pos = len - 1;
    while (pos >= 0 && word[pos] == k) --pos;
    if (pos < 0) break;
    ++word[pos];
    for (int q = pos + 1; q < len; ++q) word[q] = word[pos];
  }
  return total;
}

std::vector<std::vector<Poly>> lgv_matrix(const Permutation& w) {
  if (!is_vexillary(w)) throw NotVexillary(w.str() + " is not vexillary");
  const int n = w.size();
  const Partition lam = lambda_w(w);
  const auto h = lgv_heights(w);
  const LgvGraph g = build_graph(n, LgvMode::SCHUBERT);
  std::vector<std::vector<Poly>> mat(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const int end = g.node(LgvNode::H, h[b - 1], h[b - 1] + lam[b] - b + 1);
      mat[a - 1].push_back(end < 0 ? Poly(g.registry()) : path_sum(g, g.node(LgvNode::H, a, 1), end));
    }
  return mat;
}

Poly lgv_determinant(const Permutation& w) { return determinant(lgv_matrix(w)); }

std::vector<std::vector<Poly>> lgv_matrix_full(int n) {
  const LgvGraph g = build_graph(n, LgvMode::KTHEORY);
  std::vector<std::vector<Poly>> mat(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      mat[a - 1].push_back(path_sum(g, g.node(LgvNode::H, n + 1 - a, 1), g.node(LgvNode::V, n + 1, b)));
  return mat;
}

Poly lgv_determinant_full(int n) { return determinant(lgv_matrix_full(n)); }

}  // namespace groth
