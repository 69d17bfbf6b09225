#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groth/partition.hpp"

namespace groth {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation simple(int n, int i);
  // "2413" for n <= 9, otherwise comma-separated; both forms are accepted.
  static Permutation parse(std::string_view text);

  int size() const { return int(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// (u*v)(i) = u(v(i))
Permutation operator*(const Permutation& u, const Permutation& v);
Permutation inverse(const Permutation& w);
int length(const Permutation& w);
// w*s_i: swaps positions i and i+1.
Permutation times_simple(const Permutation& w, int i);
// s_i*w: swaps values i and i+1.
Permutation simple_times(int i, const Permutation& w);
bool is_ascent(const Permutation& w, int i);

// w = s_{i1} ... s_{ik}, leftmost letter first.
std::vector<int> reduced_word(const Permutation& w);
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);
Permutation word_product(const std::vector<int>& word, int n);
Permutation demazure_product(const std::vector<int>& word, int n);

std::vector<Permutation> all_permutations(int n);

using Cell = std::pair<int, int>;  // (row, col), 1-based

std::set<Cell> diagram(const Permutation& w);
std::set<Cell> essential_set(const Permutation& w);

bool is_vexillary(const Permutation& w);
bool is_vexillary_essential(const Permutation& w);
bool is_vexillary_diagram(const Permutation& w);

Partition lambda_w(const Permutation& w);
Partition Lambda_w(const Permutation& w);
std::vector<int> flagging(const Permutation& w);

// 1^k x w
Permutation shift(const Permutation& w, int k);

}  // namespace groth
