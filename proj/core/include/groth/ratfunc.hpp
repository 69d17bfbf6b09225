#pragma once

#include <string>

#include "groth/poly.hpp"

namespace groth {

// num/den with no canonical form; equality is by cross-multiplication.
struct RatFunc {
  Poly num;
  Poly den;

  RatFunc() = default;
  explicit RatFunc(const Poly& p);
  RatFunc(const Poly& n, const Poly& d);

  bool is_zero() const { return num.is_zero(); }
  std::string str() const;
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_div(const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const RatFunc& a);
bool rf_eq(const RatFunc& a, const RatFunc& b);

// Cancels a common factor when one side divides the other, and the
// integer content. Not a gcd; the value is unchanged either way.
RatFunc rf_reduce(const RatFunc& a);

}  // namespace groth
