#pragma once

#include <map>
#include <vector>

#include "groth/partition.hpp"
#include "groth/permutation.hpp"
#include "groth/poly.hpp"

namespace groth {

enum class OperatorKind { PARTIAL, KDD, DEMAZURE, LASCOUX, LASCOUX_ATOM };

const char* to_string(OperatorKind k);

Poly apply(OperatorKind kind, int i, const Poly& f);
// D_{i1} ... D_{ik} f: the last letter acts first.
Poly apply_word(OperatorKind kind, const std::vector<int>& word, const Poly& f);

// prod_{i+j<=n} x_i (+) y_j
Poly grothendieck_top(int n, const VarRegistry& reg);
Poly grothendieck_top(int n);

// Descends from w0 along the smallest ascent of w at each step.
Poly double_grothendieck(const Permutation& w, const VarRegistry& reg);
Poly double_grothendieck(const Permutation& w);
// Same, along an explicit reduced word of w^{-1} w0.
Poly double_grothendieck_along(const Permutation& w, const std::vector<int>& word, const VarRegistry& reg);

// Memoized over the whole weak order of S_n.
class GrothendieckTable {
 public:
  explicit GrothendieckTable(int n);
  GrothendieckTable(int n, const VarRegistry& reg);
  const Poly& operator()(const Permutation& w);
  const VarRegistry& registry() const { return reg_; }

 private:
  int n_;
  VarRegistry reg_;
  std::map<Permutation, Poly> memo_;
};

// x_i <-> y_i for all i; the registry must be square.
Poly exchange_xy(const Poly& f);

enum class LascouxKind { ATOM, POLY };

// The atom (resp. polynomial) operator word of w applied to x^lam, then each
// x_i replaced by x_i (+) y1. Uses registry (n, 1).
Poly extended_lascoux(LascouxKind kind, const Partition& lam, const Permutation& w);

// The shifted operators as a single step: f -> (1+b x_i)(x_{i+1} (+) y)(f - s_i f)/(x_i - x_{i+1}),
// with y = y1; the POLY variant adds f.
Poly shifted_lascoux_step(LascouxKind kind, int i, const Poly& f);

}  // namespace groth
