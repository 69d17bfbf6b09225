#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "groth/poly.hpp"

namespace groth {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing case, empty on success
};

// Suites: ybe, theorems, operators, bijections, lgv, all. Sweeps over S_n
// stop at max_n; the costlier sweeps cap it lower (see each suite).
std::vector<CheckResult> run_suite(const std::string& suite, int max_n = 4, std::uint64_t seed = 1);
const std::vector<std::string>& suite_names();

// Random polynomial with small exponents and coefficients in [-3, 3].
Poly random_poly(const VarRegistry& reg, std::mt19937_64& rng, int terms = 6, int max_exp = 2);

}  // namespace groth
