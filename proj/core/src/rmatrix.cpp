#include <algorithm>
#include <map>
#include <optional>

#include "groth/errors.hpp"
#include "groth/lattice.hpp"

namespace groth {

const RatFunc* RSolution::find(const RKey& k) const {
  for (const auto& [key, val] : entries)
    if (key == k) return &val;
  return nullptr;
}

namespace {

using Row = std::map<int, RatFunc>;

std::size_t row_cost(const Row& r) {
  std::size_t c = 0;
  for (const auto& [v, f] : r) c += f.num.size() + f.den.size();
  return c;
}

}  // namespace

RSolution solve_r_matrix(const WeightTable& L) {
  const VarRegistry reg(2, 1);
  const Poly zi = Poly::x(reg, 1), zj = Poly::x(reg, 2), y = Poly::y(reg, 1);
  const int K = L.colored ? 3 : 1;
  const int S = K + 1;
  auto to_label = [&](int code) { return Label(code == 0 ? 0 : L.colored ? S - code : 1); };

  // L_wt(aux_in, q_in, aux_out, q_out, z) with q running along the flow.
  auto lwt = [&](int ai, int qi, int ao, int qo, const Poly& z) -> std::optional<Poly> {
    VertexConfig c;
    c.w = to_label(ai);
    c.e = to_label(ao);
    if (L.flow == Flow::DOWN) {
      c.n = to_label(qi);
      c.s = to_label(qo);
    } else {
      c.s = to_label(qi);
      c.n = to_label(qo);
    }
    const int k = L.match(c);
    if (k < 0) return std::nullopt;
    return form_value(L.vertices[k].form, z, y);
  };

  std::vector<RKey> keys;
  std::map<RKey, int> key_index;
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      for (int c = 0; c < S; ++c)
        for (int d = 0; d < S; ++d)
          if ((a == c && b == d) || (a == d && b == c)) {
            key_index[{a, b, c, d}] = int(keys.size());
            keys.push_back({a, b, c, d});
          }

  const int N = S * S * S;
  auto dec = [S](int s) { return std::array<int, 3>{s / (S * S), s / S % S, s % S}; };
  using Mat = std::vector<std::optional<Poly>>;
  Mat l1(N * N), l2(N * N);
  for (int s = 0; s < N; ++s)
    for (int t = 0; t < N; ++t) {
      const auto a = dec(s), b = dec(t);
      if (a[1] == b[1]) l1[s * N + t] = lwt(a[0], a[2], b[0], b[2], zi);
      if (a[0] == b[0]) l2[s * N + t] = lwt(a[1], a[2], b[1], b[2], zj);
    }
  auto mul = [N, &reg](const Mat& a, const Mat& b) {
    Mat c(N * N);
    for (int s = 0; s < N; ++s)
      for (int t = 0; t < N; ++t) {
        if (!a[s * N + t]) continue;
        for (int u = 0; u < N; ++u) {
          if (!b[t * N + u]) continue;
          auto& slot = c[s * N + u];
          if (!slot) slot = Poly(reg);
          *slot += *a[s * N + t] * *b[t * N + u];
        }
      }
    return c;
  };
  const Mat p12 = mul(l1, l2), p21 = mul(l2, l1);
  // R[s, t] = var(in_top = s0, in_bot = s1, out_top = t1, out_bot = t0) when s2 == t2.
  auto rvar = [&](int s, int t) -> int {
    const auto a = dec(s), b = dec(t);
    if (a[2] != b[2]) return -1;
    const auto it = key_index.find({a[0], a[1], b[1], b[0]});
    return it == key_index.end() ? -1 : it->second;
  };

  std::vector<std::map<int, Poly>> raw;
  for (int s = 0; s < N; ++s)
    for (int u = 0; u < N; ++u) {
      std::map<int, Poly> eq;
      for (int t = 0; t < N; ++t) {
        if (p12[t * N + u]) {
          const int k = rvar(s, t);
          if (k >= 0) eq.try_emplace(k, reg).first->second += *p12[t * N + u];
        }
        if (p21[s * N + t]) {
          const int k = rvar(t, u);
          if (k >= 0) eq.try_emplace(k, reg).first->second -= *p21[s * N + t];
        }
      }
      std::erase_if(eq, [](const auto& kv) { return kv.second.is_zero(); });
      if (!eq.empty() && std::find(raw.begin(), raw.end(), eq) == raw.end()) raw.push_back(std::move(eq));
    }

  std::vector<Row> rows;
  for (const auto& eq : raw) {
    Row r;
    for (const auto& [k, p] : eq) r.emplace(k, RatFunc(p));
    rows.push_back(std::move(r));
  }

  // Gaussian elimination by substitution; each pivot is expressed in the
  // variables still free at that moment.
  std::vector<std::pair<int, Row>> pivots;
  while (true) {
    std::erase_if(rows, [](const Row& r) { return r.empty(); });
    if (rows.empty()) break;
    const auto best = std::min_element(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::pair(a.size(), row_cost(a)) < std::pair(b.size(), row_cost(b));
    });
    Row eq = std::move(*best);
    rows.erase(best);
    int piv = -1;
    std::size_t piv_cost = 0;
    for (const auto& [k, f] : eq) {
      const std::size_t c = f.num.size() + f.den.size();
      if (piv < 0 || c < piv_cost || (c == piv_cost && k > piv)) {
        piv = k;
        piv_cost = c;
      }
    }
    const RatFunc cp = eq.at(piv);
    Row expr;
    for (const auto& [k, f] : eq)
      if (k != piv) expr.emplace(k, rf_reduce(rf_neg(rf_div(f, cp))));
    for (auto& r : rows) {
      const auto it = r.find(piv);
      if (it == r.end()) continue;
      const RatFunc a = it->second;
      r.erase(it);
      for (const auto& [k, f] : expr) {
        const RatFunc add = rf_mul(a, f);
        auto jt = r.find(k);
        if (jt == r.end())
          r.emplace(k, rf_reduce(add));
        else {
          jt->second = rf_reduce(rf_add(jt->second, add));
          if (jt->second.is_zero()) r.erase(jt);
        }
      }
    }
    pivots.emplace_back(piv, std::move(expr));
  }

  std::vector<bool> bound(keys.size(), false);
  for (const auto& [p, e] : pivots) bound[p] = true;
  const auto free_count = std::size_t(std::count(bound.begin(), bound.end(), false));
  if (free_count != 1) throw KernelDimension(free_count);

  std::vector<RatFunc> val(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!bound[k]) val[k] = RatFunc(Poly(reg, 1));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    RatFunc v(Poly(reg), Poly(reg, 1));
    for (const auto& [k, f] : it->second) v = rf_reduce(rf_add(v, rf_mul(f, val[k])));
    val[it->first] = v;
  }
  const int zero_key = key_index.at({0, 0, 0, 0});
  if (val[zero_key].is_zero()) throw KernelDimension(0);
  const RatFunc norm = val[zero_key];
  for (auto& v : val) v = rf_reduce(rf_div(v, norm));

  for (const auto& eq : raw) {
    RatFunc sum(Poly(reg), Poly(reg, 1));
    for (const auto& [k, p] : eq) sum = rf_reduce(rf_add(sum, rf_mul(RatFunc(p), val[k])));
    if (!sum.is_zero()) throw Error("R-matrix back-substitution failed verification");
  }

  RSolution out{reg, {}, keys.size(), raw.size()};
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!val[k].is_zero()) out.entries.emplace_back(keys[k], val[k]);
  return out;
}

}  // namespace groth
