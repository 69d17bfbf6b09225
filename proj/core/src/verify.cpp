#include "groth/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "groth/bijections.hpp"
#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/lgv.hpp"
#include "groth/tableaux.hpp"

namespace groth {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok && r_.ok) {
      r_.ok = false;
      r_.counterexample = describe();
    }
  }

  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

std::string perm_case(const Permutation& w) { return "w = " + w.str(); }

const std::vector<Partition>& small_shapes() {
  static const std::vector<Partition> shapes{{1}, {2}, {1, 1}, {2, 1}};
  return shapes;
}

Poly at_beta_zero(const Poly& f) {
  return substitute(f, {{f.registry().beta(), Poly(f.registry())}});
}

std::vector<CheckResult> suite_ybe() {
  struct Pair {
    const char* name;
    WeightTable L;
    RTable R;
  };
  const std::vector<Pair> pairs{{"rll atom", atom_table(), atom_r_table()},
                                {"rll bumpless", bumpless_table(), bumpless_r_table()},
                                {"rll semidual", semidual_table(), semidual_r_table()}};
  std::vector<CheckResult> out;
  for (const auto& p : pairs) {
    Check c(p.name);
    const RllResult r = verify_rll(p.L, p.R);
    c.expect(r.ok, [&] {
      std::ostringstream os;
      os << "boundary (a0 a1 q | b0 b1 q') =";
      for (Label l : r.failure) os << ' ' << int(l);
      return os.str();
    });
    out.push_back(c.result());
  }
  Check printed("rll semidual printed table rejected");
  printed.expect(!verify_rll(semidual_table(), semidual_r_table_printed()).ok,
                 [] { return std::string("printed table satisfies the RLL relation"); });
  out.push_back(printed.result());

  Check solve("r-matrix kernel is one-dimensional");
  try {
    const RSolution s = solve_r_matrix(bumpless_table());
    solve.expect(!s.entries.empty(), [] { return std::string("empty solution"); });
  } catch (const KernelDimension& e) {
    solve.expect(false, [&] { return std::string(e.what()); });
  }
  out.push_back(solve.result());
  return out;
}

std::vector<CheckResult> suite_theorems(int max_n) {
  std::vector<CheckResult> out;
  Check main_thm("main theorem Z = b^l(w) G_w"), ground("ground state"), sym("symmetry"),
      rec("recurrence"), vex("vexillary flagged theorem");
  for (int n = 1; n <= max_n; ++n) {
    GrothendieckTable G(n);
    const Poly b = Poly::beta(G.registry());
    for (const auto& w : all_permutations(n)) {
      const ModelInstance m = build_bumpless(w);
      const auto states = enumerate_states(m);
      main_thm.expect(partition_function(m, states) == b.pow(length(w)) * G(w), [&] { return perm_case(w); });
      if (w == Permutation::longest(n)) {
        const bool ok = states.size() == 1 && state_weight(m, states.front()) ==
                                                  b.pow(n * (n - 1) / 2) * grothendieck_top(n, m.reg);
        ground.expect(ok, [&] { return "n = " + std::to_string(n); });
      }
      sym.expect(G(w) == exchange_xy(G(inverse(w))), [&] { return perm_case(w); });
      for (int i = 1; i < n; ++i)
        if (is_ascent(w, i))
          rec.expect(functional_equation_check(w, i), [&] { return perm_case(w) + ", i = " + std::to_string(i); });
      if (is_vexillary(w)) {
        const Partition lam = lambda_w(w);
        const auto flags = flagging(w);
        const VarRegistry need = flagged_registry(lam, flags);
        const VarRegistry big(std::max(need.nx, n), std::max(need.ny, n));
        const bool ok = flagged_factorial_grothendieck(lam, flags, big) == G(w).extend(big) &&
                        dw_partition_function(w) == G(w);
        vex.expect(ok, [&] { return perm_case(w); });
      }
    }
  }
  for (const Check* c : {&main_thm, &ground, &sym, &rec, &vex}) out.push_back(c->result());

  Check fac("five-vertex factorial theorem"), stable("stable limit");
  for (const auto& lam : small_shapes())
    for (int n = 2; n <= 3; ++n) {
      const ModelInstance m = build_five_vertex(lam, n);
      fac.expect(partition_function(m) == factorial_grothendieck(lam, n, m.reg),
                 [&] { return "lam = " + lam.str() + ", n = " + std::to_string(n); });
    }
  const std::vector<std::pair<Partition, Permutation>> bases{
      {{1}, {2, 1}}, {{2}, {3, 1, 2}}, {{1, 1}, {2, 3, 1}}, {{2, 1}, {3, 2, 1}}};
  for (const auto& [lam, w] : bases)
    for (int n = 2; n <= 3; ++n) {
      int k = 0;
      while (w.size() + k <= n + lam.first()) ++k;
      const Permutation big = shift(w, k);
      const Poly z = dw_partition_function_rows(big, n);
      stable.expect(lambda_w(big) == lam && z == factorial_grothendieck(lam, n, VarRegistry(big.size(), big.size())),
                    [&] { return "w = " + big.str() + ", n = " + std::to_string(n); });
    }
  out.push_back(fac.result());
  out.push_back(stable.result());

  Check las("extended lascoux"), u2o("u2o tile never occurs"), arec("atom recurrence");
  const std::vector<Partition> shapes{{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
  for (int n = 2; n <= std::min(max_n, 3); ++n)
    for (const auto& lam : shapes) {
      if (lam.length() > n) continue;
      for (const auto& w : all_permutations(n))
        for (auto var : {AtomVariant::ATOM, AtomVariant::POLY}) {
          const ModelInstance m = build_atom_model(lam, Permutation::longest(n) * w, var);
          const auto states = enumerate_states(m);
          const LascouxKind kind = var == AtomVariant::ATOM ? LascouxKind::ATOM : LascouxKind::POLY;
          las.expect(partition_function(m, states) == extended_lascoux(kind, lam, w), [&] {
            return "lam = " + lam.str() + ", " + perm_case(w) + (var == AtomVariant::ATOM ? ", atom" : ", poly");
          });
          for (const auto& s : states)
            for (int i = 0; i < m.rows; ++i)
              for (int j = 0; j < m.cols; ++j)
                u2o.expect(m.table.vertices[vertex_at(m, s, i, j)].name != "u2o",
                           [&] { return "lam = " + lam.str() + ", " + perm_case(w); });
          for (int i = 1; i < n; ++i)
            if (lam.size() > 0 && length(simple_times(i, w)) > length(w))
              arec.expect(atom_functional_equation_check(lam, w, i, var),
                          [&] { return "lam = " + lam.str() + ", " + perm_case(w) + ", i = " + std::to_string(i); });
        }
    }
  out.push_back(las.result());
  out.push_back(u2o.result());
  out.push_back(arec.result());
  return out;
}

std::vector<CheckResult> suite_operators(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const VarRegistry reg(4, 2);
  std::vector<Poly> samples;
  for (int k = 0; k < 20; ++k) samples.push_back(random_poly(reg, rng));
  const Poly b = Poly::beta(reg);
  struct Square {
    OperatorKind kind;
    const char* name;
    Poly (*rhs)(const Poly& once, const Poly& b);
  };
  const std::vector<Square> squares{
      {OperatorKind::PARTIAL, "d_i^2 = 0", [](const Poly& f, const Poly&) { return Poly(f.registry()); }},
      {OperatorKind::DEMAZURE, "pi_i^2 = pi_i", [](const Poly& f, const Poly&) { return f; }},
      {OperatorKind::KDD, "kd_i^2 = -b kd_i", [](const Poly& f, const Poly& beta) { return -(beta * f); }},
      {OperatorKind::LASCOUX, "lascoux_i^2 = lascoux_i", [](const Poly& f, const Poly&) { return f; }},
      {OperatorKind::LASCOUX_ATOM, "atom_i^2 = -atom_i", [](const Poly& f, const Poly&) { return -f; }},
  };
  std::vector<CheckResult> out;
  for (const auto& sq : squares) {
    Check c(sq.name);
    for (std::size_t k = 0; k < samples.size(); ++k)
      for (int i = 1; i <= 3; ++i) {
        const Poly once = apply(sq.kind, i, samples[k]);
        c.expect(apply(sq.kind, i, once) == sq.rhs(once, b),
                 [&] { return "sample " + std::to_string(k) + ", i = " + std::to_string(i); });
      }
    out.push_back(c.result());
  }
  for (const auto& sq : squares) {
    Check c(std::string("braid ") + to_string(sq.kind));
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const Poly& f = samples[k];
      for (int i = 1; i <= 2; ++i)
        c.expect(apply_word(sq.kind, {i, i + 1, i}, f) == apply_word(sq.kind, {i + 1, i, i + 1}, f),
                 [&] { return "sample " + std::to_string(k) + ", i = " + std::to_string(i); });
      c.expect(apply_word(sq.kind, {1, 3}, f) == apply_word(sq.kind, {3, 1}, f),
               [&] { return "sample " + std::to_string(k) + ", commuting 1 3"; });
    }
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> suite_bijections(int max_n) {
  // all_bpds grows too fast past n = 4.
  const int bpd_top = std::min(max_n, 4);
  Check key("key recovery"), phic("phi bijection"), bpd("bpd count"), dich("Lambda_w support dichotomy"),
      flags("flag reading"), eyd("excited Young diagrams"), th("theta");
  for (int n = 1; n <= max_n; ++n) {
    std::set<State> images;
    std::size_t total = 0;
    const auto bpds = n <= bpd_top ? all_bpds(n) : std::vector<BumplessPipeDream>{};
    for (const auto& w : all_permutations(n)) {
      const ModelInstance m = build_bumpless(w);
      const auto states = enumerate_states(m);
      const bool vexillary = is_vexillary(w);
      bool crossing = false;
      for (const auto& s : states) {
        const BumplessPipeDream d = forget_colors(m, s);
        key.expect(key_of_state(d) == w && demazure_product(crossing_word(d), n) == w, [&] { return perm_case(w); });
        const State t = phi(s);
        const auto [w2, s2] = phi_inverse(t);
        phic.expect(w2 == w && s2 == s, [&] { return perm_case(w); });
        images.insert(t);
        ++total;
        crossing |= crossing_in_Lambda(s, w);
        if (vexillary) {
          dich.expect(support_in_Lambda(t, w), [&] { return perm_case(w) + " support leaves Lambda_w"; });
          flags.expect(read_flags(t, w) == flagging(w), [&] { return perm_case(w); });
        }
      }
      dich.expect(vexillary != crossing, [&] { return perm_case(w); });
      const auto keyed = std::count_if(bpds.begin(), bpds.end(), [&](const auto& d) { return key_of_state(d) == w; });
      if (n <= bpd_top) bpd.expect(std::size_t(keyed) == states.size(), [&] { return perm_case(w); });
      if (vexillary) {
        std::set<ExcitedYoungDiagram> img;
        std::size_t count = 0;
        bool weights = true;
        for (const auto& ms : enumerate_marked_states(m, states)) {
          const auto d = state_to_eyd(m, ms);
          weights &= eyd_weight(d, m.reg) == marked_weight(m, ms);
          img.insert(d);
          ++count;
        }
        eyd.expect(weights && count == img.size() && img == generate_eyd(lambda_w(w), Lambda_w(w)),
                   [&] { return perm_case(w); });
      }
    }
    phic.expect(images.size() == total && enumerate_states(build_semidual(n)).size() == total,
                [&] { return "n = " + std::to_string(n) + " image size"; });
  }
  for (const auto& w : {Permutation{8, 7, 1, 6, 2, 9, 5, 3, 4}, Permutation{1, 4, 3, 2}})
    flags.expect(read_flags(w) == flagging(w), [&] { return perm_case(w); });

  for (const auto& lam : small_shapes())
    for (int n = 2; n <= 3; ++n) {
      const ModelInstance m = build_five_vertex(lam, n);
      std::set<SetValuedTableau> img;
      std::size_t count = 0;
      bool ok = true;
      for (const auto& ms : enumerate_marked_states(m)) {
        const SetValuedTableau t = theta(m, ms, lam);
        ok &= t.is_valid() && tableau_weight(t, m.reg) == marked_weight(m, ms);
        img.insert(t);
        ++count;
      }
      const auto all = enumerate_svt(lam, n);
      ok &= count == img.size() && img == std::set<SetValuedTableau>(all.begin(), all.end());
      th.expect(ok, [&] { return "lam = " + lam.str() + ", n = " + std::to_string(n); });
    }
  std::vector<CheckResult> out;
  for (const Check* c : {&key, &phic, &bpd, &dich, &flags, &eyd, &th}) out.push_back(c->result());
  return out;
}

std::vector<CheckResult> suite_lgv(int max_n) {
  Check det("lgv determinant"), cf("closed form p_ab"), full("k-theory determinant"), brute("path sums");
  for (int n = 1; n <= max_n; ++n) {
    GrothendieckTable G(n);
    for (const auto& w : all_permutations(n)) {
      if (!is_vexillary(w)) continue;
      det.expect(lgv_determinant(w) == at_beta_zero(G(w)), [&] { return perm_case(w); });
      const auto mat = lgv_matrix(w);
      const Partition lam = lambda_w(w);
      const auto h = lgv_heights(w);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          cf.expect(mat[a - 1][b - 1] == closed_form_p(a, b, lam, h, G.registry()), [&] {
            return perm_case(w) + ", a = " + std::to_string(a) + ", b = " + std::to_string(b);
          });
    }
  }
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    full.expect(lgv_determinant_full(n) == partition_function(build_semidual(n)), [&] { return "n = " + std::to_string(n); });
    for (auto mode : {LgvMode::SCHUBERT, LgvMode::KTHEORY}) {
      const LgvGraph g = build_graph(n, mode);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const int from = g.node(LgvNode::H, a, 1);
          for (int to : {g.node(LgvNode::V, n + 1, b), g.node(LgvNode::H, b, n + 1)})
            brute.expect(path_sum(g, from, to) == path_sum_brute(g, from, to),
                         [&] { return "n = " + std::to_string(n) + ", a = " + std::to_string(a); });
        }
    }
  }
  return {det.result(), cf.result(), full.result(), brute.result()};
}

}  // namespace

Poly random_poly(const VarRegistry& reg, std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, max_exp);
  Poly f(reg);
  for (int t = 0; t < terms; ++t) {
    Poly m(reg, coeff(rng));
    for (int i = 1; i <= reg.nx; ++i) m *= Poly::x(reg, i).pow(expo(rng));
    if (reg.ny > 0) m *= Poly::y(reg, 1).pow(expo(rng) / 2);
    f += m;
  }
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ybe", "theorems", "operators", "bijections", "lgv"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n, std::uint64_t seed) {
  if (max_n < 1 || max_n > 5) throw DomainError("max-n must lie in 1..5");
  if (suite == "ybe") return suite_ybe();
  if (suite == "theorems") return suite_theorems(max_n);
  if (suite == "operators") return suite_operators(seed);
  if (suite == "bijections") return suite_bijections(max_n);
  if (suite == "lgv") return suite_lgv(max_n);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, max_n, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite: " + suite);
}

}  // namespace groth
