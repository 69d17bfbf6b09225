#include "groth/ratfunc.hpp"

namespace groth {

RatFunc::RatFunc(const Poly& p) : num(p), den(p.registry(), 1) {}

RatFunc::RatFunc(const Poly& n, const Poly& d) : num(n), den(d) {
  if (den.is_zero()) throw DomainError("zero denominator");
}

std::string RatFunc::str() const {
  if (den == Poly(den.registry(), 1)) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, rf_neg(b)); }

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

RatFunc rf_div(const RatFunc& a, const RatFunc& b) {
  if (b.num.is_zero()) throw DomainError("division by zero rational function");
  return {a.num * b.den, a.den * b.num};
}

RatFunc rf_neg(const RatFunc& a) { return {-a.num, a.den}; }

bool rf_eq(const RatFunc& a, const RatFunc& b) { return a.num * b.den == b.num * a.den; }

namespace {

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) g = gcd(g, c);
  return g;
}

Poly scale_down(const Poly& p, const mpz_class& g) {
  Poly r(p.registry());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c / g);
  return r;
}

}  // namespace

RatFunc rf_reduce(const RatFunc& a) {
  if (a.num.is_zero()) return {a.num, Poly(a.den.registry(), 1)};
  Poly q;
  if (divides(a.den, a.num, &q)) return {q, Poly(a.den.registry(), 1)};
  RatFunc r = a;
  if (divides(a.num, a.den, &q)) r = {Poly(a.num.registry(), 1), q};
  mpz_class g = gcd(content(r.num), content(r.den));
  if (r.den.lead_coeff() < 0) g = -g;
  if (g != 1) r = {scale_down(r.num, g), scale_down(r.den, g)};
  return r;
}

}  // namespace groth
