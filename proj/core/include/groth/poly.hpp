#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "groth/errors.hpp"

namespace groth {

// Variables are x1..x_nx, y1..y_ny and b (beta), stored in that order.
struct VarRegistry {
  int nx = 0;
  int ny = 0;

  static constexpr int kMaxVars = 30;

  VarRegistry() = default;
  VarRegistry(int nx_, int ny_);

  int size() const { return nx + ny + 1; }
  int x(int i) const;  // 1-based
  int y(int j) const;  // 1-based
  int beta() const { return nx + ny; }
  std::string name(int var) const;

  bool operator==(const VarRegistry&) const = default;
};

struct Monomial {
  std::uint16_t deg = 0;
  std::array<std::uint8_t, VarRegistry::kMaxVars> e{};

  bool operator==(const Monomial&) const = default;
  bool divides(const Monomial& o, int nvars) const;
};

// Graded lex, descending: higher total degree first, then larger exponent of
// the earliest variable.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.e > b.e;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GrlexGreater>;

  Poly() = default;
  explicit Poly(const VarRegistry& reg) : reg_(reg) {}
  Poly(const VarRegistry& reg, long c);
  Poly(const VarRegistry& reg, const mpz_class& c);

  static Poly var(const VarRegistry& reg, int index);
  static Poly x(const VarRegistry& reg, int i) { return var(reg, reg.x(i)); }
  static Poly y(const VarRegistry& reg, int j) { return var(reg, reg.y(j)); }
  static Poly beta(const VarRegistry& reg) { return var(reg, reg.beta()); }

  const VarRegistry& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int degree_in(int var) const;

  // Leading term under the grlex order. Undefined on zero.
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const mpz_class& lead_coeff() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const mpz_class& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpz_class& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& c) { return a *= c; }
  friend Poly operator*(const mpz_class& c, Poly a) { return a *= c; }
  Poly operator-() const;

  bool operator==(const Poly& o) const { return reg_ == o.reg_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned k) const;

  // Re-embed into a registry with at least as many x and y variables.
  Poly extend(const VarRegistry& bigger) const;

  std::string str() const;

 private:
  void check_same(const Poly& o) const;

  VarRegistry reg_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// p + q + b*p*q
Poly oplus(const Poly& p, const Poly& q);

Poly swap_x(const Poly& f, int i);
Poly swap_vars(const Poly& f, int var_a, int var_b);

// Exact multivariate division; throws NonzeroRemainder if g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f, Poly* quotient = nullptr);

// Simultaneous substitution var index -> value (values live in `target`).
Poly substitute(const Poly& f, const std::map<int, Poly>& assignment, const VarRegistry& target);
Poly substitute(const Poly& f, const std::map<int, Poly>& assignment);

Poly determinant(const std::vector<std::vector<Poly>>& mat);

Poly parse_poly(std::string_view text, const VarRegistry& reg);

std::string to_json(const Poly& p);
Poly poly_from_json(std::string_view text, const VarRegistry& reg);

}  // namespace groth
