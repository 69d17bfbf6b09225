#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groth/partition.hpp"
#include "groth/poly.hpp"

namespace groth {

// Bottom-up boundary word: horizontal steps 0, vertical steps 1.
std::vector<int> zero_one_sequence(const Partition& lam, int n);
std::string zero_one_string(const Partition& lam, int n);

using EntrySet = std::uint32_t;  // bit i-1 set iff i is in the set

class SetValuedTableau {
 public:
  SetValuedTableau() = default;
  explicit SetValuedTableau(const Partition& shape);
  SetValuedTableau(const Partition& shape, std::vector<std::vector<EntrySet>> cells);

  const Partition& shape() const { return shape_; }
  // 1-based box coordinates.
  EntrySet at(int row, int col) const { return cells_[row - 1][col - 1]; }
  void set(int row, int col, EntrySet s) { cells_[row - 1][col - 1] = s; }
  const std::vector<std::vector<EntrySet>>& cells() const { return cells_; }

  int total_entries() const;
  int max_entry() const;
  bool is_valid() const;
  bool respects_flags(const std::vector<int>& flags) const;
  std::string str() const;

  bool operator==(const SetValuedTableau&) const = default;
  auto operator<=>(const SetValuedTableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<EntrySet>> cells_;
};

std::vector<SetValuedTableau> enumerate_svt(const Partition& lam, int n);
std::vector<SetValuedTableau> enumerate_flagged_svt(const Partition& lam, const std::vector<int>& flags);

// b^{|T|-|lam|} prod over boxes A, i in A of x_i (+) y_{i+c(A)}
Poly tableau_weight(const SetValuedTableau& t, const VarRegistry& reg);

// Registries sized so every y_{i+c} exists.
VarRegistry factorial_registry(const Partition& lam, int n);
VarRegistry flagged_registry(const Partition& lam, const std::vector<int>& flags);

Poly factorial_grothendieck(const Partition& lam, int n, std::optional<VarRegistry> reg = {});
Poly flagged_factorial_grothendieck(const Partition& lam, const std::vector<int>& flags,
                                    std::optional<VarRegistry> reg = {});

}  // namespace groth
