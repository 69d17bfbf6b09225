#include "groth/diffops.hpp"

#include "groth/errors.hpp"

namespace groth {

const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::PARTIAL: return "partial";
    case OperatorKind::KDD: return "kdd";
    case OperatorKind::DEMAZURE: return "demazure";
    case OperatorKind::LASCOUX: return "lascoux";
    case OperatorKind::LASCOUX_ATOM: return "lascoux-atom";
  }
  return "?";
}

namespace {

Poly partial(int i, const Poly& f) {
  const auto& reg = f.registry();
  return exact_divide(f - swap_x(f, i), Poly::x(reg, i) - Poly::x(reg, i + 1));
}

Poly one_plus_bx(const VarRegistry& reg, int i) { return Poly(reg, 1) + Poly::beta(reg) * Poly::x(reg, i); }

}  // namespace

Poly apply(OperatorKind kind, int i, const Poly& f) {
  const auto& reg = f.registry();
  if (i < 1 || i >= reg.nx) throw DomainError("operator index out of range");
  switch (kind) {
    case OperatorKind::PARTIAL:
      return partial(i, f);
    case OperatorKind::KDD:
      return partial(i, one_plus_bx(reg, i + 1) * f);
    case OperatorKind::DEMAZURE:
      return partial(i, Poly::x(reg, i) * f);
    case OperatorKind::LASCOUX:
      return apply(OperatorKind::DEMAZURE, i, one_plus_bx(reg, i + 1) * f);
    case OperatorKind::LASCOUX_ATOM:
      return apply(OperatorKind::LASCOUX, i, f) - f;
  }
  throw DomainError("unknown operator");
}

Poly apply_word(OperatorKind kind, const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply(kind, *it, g);
  return g;
}

Poly grothendieck_top(int n, const VarRegistry& reg) {
  Poly g(reg, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) g *= oplus(Poly::x(reg, i), Poly::y(reg, j));
  return g;
}

Poly grothendieck_top(int n) { return grothendieck_top(n, VarRegistry(n, n)); }

Poly double_grothendieck_along(const Permutation& w, const std::vector<int>& word, const VarRegistry& reg) {
  const int n = w.size();
  if (word_product(word, n) != inverse(w) * Permutation::longest(n) || int(word.size()) != length(inverse(w) * Permutation::longest(n)))
    throw DomainError("word is not a reduced word of w^{-1} w0");
  // w0 = w s_{i1} ... s_{ik}, so G_w = d_{i1} ... d_{ik} G_{w0}.
  return apply_word(OperatorKind::KDD, word, grothendieck_top(n, reg));
}

Poly double_grothendieck(const Permutation& w, const VarRegistry& reg) {
  const int n = w.size();
  if (reg.nx < n || reg.ny < n) throw DomainError("registry too small for G_w");
  std::vector<int> word;
  Permutation u = w;
  while (length(u) < n * (n - 1) / 2) {
    int i = 1;
    while (!is_ascent(u, i)) ++i;
    word.push_back(i);
    u = times_simple(u, i);
  }
  return apply_word(OperatorKind::KDD, word, grothendieck_top(n, reg));
}

Poly double_grothendieck(const Permutation& w) { return double_grothendieck(w, VarRegistry(w.size(), w.size())); }

GrothendieckTable::GrothendieckTable(int n) : GrothendieckTable(n, VarRegistry(n, n)) {}

GrothendieckTable::GrothendieckTable(int n, const VarRegistry& reg) : n_(n), reg_(reg) {
  if (reg.nx < n || reg.ny < n) throw DomainError("registry too small for G_w");
}

const Poly& GrothendieckTable::operator()(const Permutation& w) {
  if (w.size() != n_) throw DomainError("permutation size does not match table");
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  Poly g;
  if (length(w) == n_ * (n_ - 1) / 2) {
    g = grothendieck_top(n_, reg_);
  } else {
    int i = 1;
    while (!is_ascent(w, i)) ++i;
    g = apply(OperatorKind::KDD, i, (*this)(times_simple(w, i)));
  }
  return memo_.emplace(w, std::move(g)).first->second;
}

Poly exchange_xy(const Poly& f) {
  const auto& reg = f.registry();
  if (reg.nx != reg.ny) throw RegistryMismatch("x/y exchange needs nx == ny");
  std::map<int, Poly> sub;
  for (int i = 1; i <= reg.nx; ++i) {
    sub.emplace(reg.x(i), Poly::y(reg, i));
    sub.emplace(reg.y(i), Poly::x(reg, i));
  }
  return substitute(f, sub);
}

Poly extended_lascoux(LascouxKind kind, const Partition& lam, const Permutation& w) {
  const int n = w.size();
  if (lam.length() > n) throw DomainError("partition longer than n");
  const VarRegistry reg(n, 1);
  Poly f(reg, 1);
  for (int i = 1; i <= lam.length(); ++i) f *= Poly::x(reg, i).pow(lam[i]);
  const auto op = kind == LascouxKind::ATOM ? OperatorKind::LASCOUX_ATOM : OperatorKind::LASCOUX;
  f = apply_word(op, reduced_word(w), f);
  std::map<int, Poly> sub;
  for (int i = 1; i <= n; ++i) sub.emplace(reg.x(i), oplus(Poly::x(reg, i), Poly::y(reg, 1)));
  return substitute(f, sub);
}

Poly shifted_lascoux_step(LascouxKind kind, int i, const Poly& f) {
  const auto& reg = f.registry();
  if (i < 1 || i >= reg.nx) throw DomainError("operator index out of range");
  Poly g = one_plus_bx(reg, i) * oplus(Poly::x(reg, i + 1), Poly::y(reg, 1)) * partial(i, f);
  if (kind == LascouxKind::POLY) g += f;
  return g;
}

}  // namespace groth
