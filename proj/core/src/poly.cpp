#include "groth/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace groth {

VarRegistry::VarRegistry(int nx_, int ny_) : nx(nx_), ny(ny_) {
  if (nx < 0 || ny < 0 || size() > kMaxVars)
    throw DomainError("registry size out of range");
}

int VarRegistry::x(int i) const {
  if (i < 1 || i > nx) throw DomainError("x" + std::to_string(i) + " not in registry");
  return i - 1;
}

int VarRegistry::y(int j) const {
  if (j < 1 || j > ny) throw DomainError("y" + std::to_string(j) + " not in registry");
  return nx + j - 1;
}

std::string VarRegistry::name(int var) const {
  if (var == beta()) return "b";
  if (var < nx) return "x" + std::to_string(var + 1);
  return "y" + std::to_string(var - nx + 1);
}

bool Monomial::divides(const Monomial& o, int nvars) const {
  for (int v = 0; v < nvars; ++v)
    if (e[v] > o.e[v]) return false;
  return true;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
  Monomial m;
  m.deg = a.deg + b.deg;
  for (int v = 0; v < nvars; ++v) {
    unsigned s = unsigned(a.e[v]) + b.e[v];
    if (s > 255) throw DomainError("exponent overflow");
    m.e[v] = std::uint8_t(s);
  }
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b, int nvars) {
  Monomial m;
  m.deg = a.deg - b.deg;
  for (int v = 0; v < nvars; ++v) m.e[v] = a.e[v] - b.e[v];
  return m;
}

}  // namespace

Poly::Poly(const VarRegistry& reg, long c) : reg_(reg) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Poly::Poly(const VarRegistry& reg, const mpz_class& c) : reg_(reg) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(const VarRegistry& reg, int index) {
  if (index < 0 || index >= reg.size()) throw DomainError("variable index out of range");
  Poly p(reg);
  Monomial m;
  m.deg = 1;
  m.e[index] = 1;
  p.terms_.emplace(m, mpz_class(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg; }

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[var]));
  return d;
}

void Poly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (!(reg_ == o.reg_)) throw RegistryMismatch("polynomials live in different registries");
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.reg_);
  if (a.is_zero() || b.is_zero()) return r;
  const int nv = a.reg_.size();
  mpz_class prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(mono_mul(ma, mb, nv), prod);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(reg_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::extend(const VarRegistry& bigger) const {
  if (bigger.nx < reg_.nx || bigger.ny < reg_.ny) throw RegistryMismatch("cannot shrink registry");
  Poly r(bigger);
  for (const auto& [m, c] : terms_) {
    Monomial n;
    n.deg = m.deg;
    for (int i = 0; i < reg_.nx; ++i) n.e[i] = m.e[i];
    for (int j = 0; j < reg_.ny; ++j) n.e[bigger.nx + j] = m.e[reg_.nx + j];
    n.e[bigger.beta()] = m.e[reg_.beta()];
    r.terms_.emplace(n, c);
  }
  return r;
}

namespace {

// Rendered variable order inside a monomial: b, x1.., y1..
std::vector<int> render_order(const VarRegistry& reg) {
  std::vector<int> order{reg.beta()};
  for (int v = 0; v < reg.beta(); ++v) order.push_back(v);
  return order;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const auto order = render_order(reg_);
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int v : order) {
      if (!m.e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += reg_.name(v);
      if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly oplus(const Poly& p, const Poly& q) {
  return p + q + Poly::beta(p.registry()) * p * q;
}

Poly swap_vars(const Poly& f, int a, int b) {
  Poly r(f.registry());
  for (const auto& [m, c] : f.terms()) {
    Monomial n = m;
    std::swap(n.e[a], n.e[b]);
    r.add_term(n, c);
  }
  return r;
}

Poly swap_x(const Poly& f, int i) {
  const auto& reg = f.registry();
  if (i < 1 || i >= reg.nx) throw DomainError("swap_x index out of range");
  return swap_vars(f, reg.x(i), reg.x(i + 1));
}

bool divides(const Poly& g, const Poly& f, Poly* quotient) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (!(g.registry() == f.registry())) throw RegistryMismatch("division across registries");
  const int nv = f.registry().size();
  Poly q(f.registry());
  Poly r = f;
  const Monomial& lg = g.lead_monomial();
  const mpz_class& cg = g.lead_coeff();
  while (!r.is_zero()) {
    const Monomial& lr = r.lead_monomial();
    if (!lg.divides(lr, nv)) return false;
    if (!mpz_divisible_p(r.lead_coeff().get_mpz_t(), cg.get_mpz_t())) return false;
    Poly t(f.registry());
    t.add_term(mono_div(lr, lg, nv), mpz_class(r.lead_coeff() / cg));
    r -= t * g;
    q += t;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

Poly exact_divide(const Poly& f, const Poly& g) {
  Poly q;
  if (!divides(g, f, &q)) throw NonzeroRemainder("(" + f.str() + ") / (" + g.str() + ")");
  return q;
}

Poly substitute(const Poly& f, const std::map<int, Poly>& assignment, const VarRegistry& target) {
  const auto& reg = f.registry();
  for (const auto& [v, val] : assignment) {
    if (v < 0 || v >= reg.size()) throw DomainError("substitution variable out of range");
    if (!(val.registry() == target)) throw RegistryMismatch("substitution value in wrong registry");
  }
  // Unassigned variables map to the same-named variable in the target.
  std::vector<Poly> image(reg.size());
  for (int v = 0; v < reg.size(); ++v) {
    auto it = assignment.find(v);
    if (it != assignment.end()) {
      image[v] = it->second;
    } else if (v == reg.beta()) {
      image[v] = Poly::beta(target);
    } else if (v < reg.nx) {
      image[v] = Poly::x(target, v + 1);
    } else {
      image[v] = Poly::y(target, v - reg.nx + 1);
    }
  }
  std::vector<std::vector<Poly>> powers(reg.size());
  auto power = [&](int v, int k) -> const Poly& {
    auto& tab = powers[v];
    if (tab.empty()) tab.push_back(Poly(target, 1));
    while (int(tab.size()) <= k) tab.push_back(tab.back() * image[v]);
    return tab[k];
  };
  Poly r(target);
  for (const auto& [m, c] : f.terms()) {
    Poly t(target, c);
    for (int v = 0; v < reg.size() && !t.is_zero(); ++v)
      if (m.e[v]) t *= power(v, m.e[v]);
    r += t;
  }
  return r;
}

Poly substitute(const Poly& f, const std::map<int, Poly>& assignment) {
  return substitute(f, assignment, f.registry());
}

namespace {

Poly laplace(const std::vector<std::vector<Poly>>& a, std::vector<int>& cols, int row) {
  const int n = int(a.size());
  if (row == n) return Poly(a[0][0].registry(), 1);
  Poly sum(a[0][0].registry());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int c = cols[k];
    if (!a[row][c].is_zero()) {
      cols.erase(cols.begin() + k);
      Poly minor = laplace(a, cols, row + 1);
      cols.insert(cols.begin() + k, c);
      if (!minor.is_zero()) {
        if (sign > 0)
          sum += a[row][c] * minor;
        else
          sum -= a[row][c] * minor;
      }
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Poly determinant(const std::vector<std::vector<Poly>>& mat) {
  const std::size_t n = mat.size();
  for (const auto& row : mat)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) throw DomainError("determinant of an empty matrix");
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return laplace(mat, cols, 0);
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const VarRegistry& reg) : s_(s), reg_(reg) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly acc(reg_);
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  Poly factor() {
    Poly base = atom();
    if (eat('^')) base = base.pow(unsigned(number()));
    return base;
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(reg_, mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == 'b') {
      ++pos_;
      return Poly::beta(reg_);
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      int k = int(number());
      try {
        return c == 'x' ? Poly::x(reg_, k) : Poly::y(reg_, k);
      } catch (const DomainError& e) {
        fail(e.what());
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const VarRegistry& reg_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarRegistry& reg) { return Parser(text, reg).parse(); }

std::string to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  const int nv = p.registry().size();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(m.e.begin(), m.e.begin() + nv);
    terms.push_back({{"e", e}, {"c", c.get_str()}});
  }
  return nlohmann::json{{"terms", terms}}.dump();
}

Poly poly_from_json(std::string_view text, const VarRegistry& reg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  Poly p(reg);
  const int nv = reg.size();
  for (const auto& t : j.at("terms")) {
    auto e = t.at("e").get<std::vector<int>>();
    if (int(e.size()) != nv) throw ParseError("exponent vector has wrong length");
    Monomial m;
    for (int v = 0; v < nv; ++v) {
      if (e[v] < 0 || e[v] > 255) throw ParseError("exponent out of range");
      m.e[v] = std::uint8_t(e[v]);
      m.deg += e[v];
    }
    p.add_term(m, mpz_class(t.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace groth
