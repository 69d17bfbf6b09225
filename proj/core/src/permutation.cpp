#include "groth/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "groth/errors.hpp"

namespace groth {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > int(word_.size()) || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) { return times_simple(identity(n), i); }

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string item(text.substr(pos, next - pos));
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParseError("bad permutation entry '" + item + "'");
      }
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(w));
  } catch (const DomainError&) {
    throw ParseError("'" + std::string(text) + "' is not a permutation");
  }
}

std::string Permutation::str() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_.size() > 9 && i) s += ",";
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw DomainError("permutation sizes differ");
  std::vector<int> w(u.size());
  for (int i = 1; i <= u.size(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (int i = 1; i <= w.size(); ++i) inv[w(i) - 1] = i;
  return Permutation(std::move(inv));
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

Permutation times_simple(const Permutation& w, int i) {
  if (i < 1 || i >= w.size()) throw DomainError("simple transposition out of range");
  auto word = w.word();
  std::swap(word[i - 1], word[i]);
  return Permutation(std::move(word));
}

Permutation simple_times(int i, const Permutation& w) {
  if (i < 1 || i >= w.size()) throw DomainError("simple transposition out of range");
  auto word = w.word();
  for (int& v : word) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(word));
}

bool is_ascent(const Permutation& w, int i) { return w(i) < w(i + 1); }

std::vector<int> reduced_word(const Permutation& w) {
  // Peel right descents: w = w' s_i, so letters come out right to left.
  std::vector<int> word;
  Permutation u = w;
  for (;;) {
    int i = 1;
    while (i < u.size() && is_ascent(u, i)) ++i;
    if (i >= u.size()) break;
    word.push_back(i);
    u = times_simple(u, i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::map<Permutation, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(const Permutation&)> rec =
      [&](const Permutation& u) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    bool any = false;
    for (int i = 1; i < u.size(); ++i) {
      if (is_ascent(u, i)) continue;
      any = true;
      for (auto word : rec(times_simple(u, i))) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
    if (!any) out.push_back({});
    return memo.emplace(u, std::move(out)).first->second;
  };
  return rec(w);
}

Permutation word_product(const std::vector<int>& word, int n) {
  Permutation u = Permutation::identity(n);
  for (int i : word) u = times_simple(u, i);
  return u;
}

Permutation demazure_product(const std::vector<int>& word, int n) {
  Permutation u = Permutation::identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw DomainError("simple transposition out of range");
    if (is_ascent(u, i)) u = times_simple(u, i);
  }
  return u;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::set<Cell> diagram(const Permutation& w) {
  const Permutation inv = inverse(w);
  std::set<Cell> d;
  for (int p = 1; p <= w.size(); ++p)
    for (int q = 1; q <= w.size(); ++q)
      if (w(p) > q && inv(q) > p) d.emplace(p, q);
  return d;
}

std::set<Cell> essential_set(const Permutation& w) {
  const auto d = diagram(w);
  std::set<Cell> e;
  for (const auto& [p, q] : d)
    if (!d.count({p + 1, q}) && !d.count({p, q + 1})) e.emplace(p, q);
  return e;
}

bool is_vexillary(const Permutation& w) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!(w(j) < w(i))) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!(w(k) > w(i))) continue;
        for (int l = k + 1; l <= n; ++l)
          if (w(i) < w(l) && w(l) < w(k)) return false;
      }
    }
  return true;
}

bool is_vexillary_essential(const Permutation& w) {
  const auto e = essential_set(w);
  for (const auto& [p, q] : e)
    for (const auto& [i, j] : e)
      if (p < i && q < j) return false;
  return true;
}

bool is_vexillary_diagram(const Permutation& w) {
  // Rows of D(w) can be permuted into a partition iff their column sets form a chain.
  std::vector<std::set<int>> rows(w.size() + 1);
  for (const auto& [p, q] : diagram(w)) rows[p].insert(q);
  for (const auto& a : rows)
    for (const auto& b : rows) {
      const bool ab = std::includes(b.begin(), b.end(), a.begin(), a.end());
      const bool ba = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (!ab && !ba) return false;
    }
  return true;
}

Partition lambda_w(const Permutation& w) {
  if (!is_vexillary(w)) throw NotVexillary(w.str() + " is not vexillary");
  std::vector<int> counts(w.size(), 0);
  for (const auto& [p, q] : diagram(w)) ++counts[p - 1];
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return Partition(counts);
}

Partition Lambda_w(const Permutation& w) {
  std::vector<int> rows(w.size(), 0);
  for (const auto& [p, q] : diagram(w))
    for (int r = 1; r <= p; ++r) rows[r - 1] = std::max(rows[r - 1], q);
  return Partition(rows);
}

std::vector<int> flagging(const Permutation& w) {
  const Partition lam = lambda_w(w);
  const Partition big = Lambda_w(w);
  std::vector<int> f;
  for (int i = 1; i <= lam.length(); ++i) {
    const int d = lam[i] - i;
    int best = 0;
    for (int r = 1; r <= big.length(); ++r)
      if (r + d >= 1 && big.contains(r, r + d)) best = r;
    f.push_back(best);
  }
  return f;
}

Permutation shift(const Permutation& w, int k) {
  if (k < 0) throw DomainError("negative shift");
  std::vector<int> word(w.size() + k);
  for (int i = 1; i <= k; ++i) word[i - 1] = i;
  for (int i = 1; i <= w.size(); ++i) word[k + i - 1] = w(i) + k;
  return Permutation(std::move(word));
}

}  // namespace groth
