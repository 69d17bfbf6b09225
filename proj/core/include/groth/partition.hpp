#pragma once

#include <string>
#include <vector>

namespace groth {

// Weakly decreasing; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return int(parts_.size()); }
  int size() const;
  // 1-based row; rows past the length are 0.
  int operator[](int row) const { return row >= 1 && row <= length() ? parts_[row - 1] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(int row, int col) const { return col >= 1 && col <= (*this)[row]; }
  bool contains(const Partition& mu) const;

  std::string str() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

}  // namespace groth
