#include "groth/tableaux.hpp"

#include <algorithm>
#include <bit>

#include "groth/errors.hpp"

namespace groth {

namespace {

int min_entry(EntrySet s) { return std::countr_zero(s) + 1; }
int max_entry_of(EntrySet s) { return 32 - std::countl_zero(s); }

}  // namespace

std::vector<int> zero_one_sequence(const Partition& lam, int n) {
  if (lam.length() > n) throw DomainError("partition " + lam.str() + " has more than n parts");
  std::vector<int> seq;
  for (int i = n; i >= 1; --i) {
    seq.insert(seq.end(), lam[i] - lam[i + 1], 0);
    seq.push_back(1);
  }
  return seq;
}

std::string zero_one_string(const Partition& lam, int n) {
  std::string s;
  for (int b : zero_one_sequence(lam, n)) s += char('0' + b);
  return s;
}

SetValuedTableau::SetValuedTableau(const Partition& shape) : shape_(shape) {
  for (int r = 1; r <= shape.length(); ++r) cells_.emplace_back(shape[r], 0);
}

SetValuedTableau::SetValuedTableau(const Partition& shape, std::vector<std::vector<EntrySet>> cells)
    : shape_(shape), cells_(std::move(cells)) {
  if (int(cells_.size()) != shape.length()) throw DomainError("tableau rows do not match shape");
  for (int r = 1; r <= shape.length(); ++r)
    if (int(cells_[r - 1].size()) != shape[r]) throw DomainError("tableau row length mismatch");
}

int SetValuedTableau::total_entries() const {
  int k = 0;
  for (const auto& row : cells_)
    for (EntrySet s : row) k += std::popcount(s);
  return k;
}

int SetValuedTableau::max_entry() const {
  int m = 0;
  for (const auto& row : cells_)
    for (EntrySet s : row) m = std::max(m, s ? max_entry_of(s) : 0);
  return m;
}

bool SetValuedTableau::is_valid() const {
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_[r]; ++c) {
      const EntrySet s = at(r, c);
      if (!s) return false;
      if (c > 1 && max_entry_of(at(r, c - 1)) > min_entry(s)) return false;
      if (r > 1 && max_entry_of(at(r - 1, c)) >= min_entry(s)) return false;
    }
  return true;
}

bool SetValuedTableau::respects_flags(const std::vector<int>& flags) const {
  if (int(flags.size()) < shape_.length()) return false;
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_[r]; ++c)
      if (max_entry_of(at(r, c)) > flags[r - 1]) return false;
  return true;
}

std::string SetValuedTableau::str() const {
  std::string out;
  for (int r = 1; r <= shape_.length(); ++r) {
    if (r > 1) out += " / ";
    out += "[";
    for (int c = 1; c <= shape_[r]; ++c) {
      if (c > 1) out += ",";
      out += "{";
      bool first = true;
      for (int i = 1; i <= 32; ++i)
        if (at(r, c) >> (i - 1) & 1u) {
          if (!first) out += ",";
          out += std::to_string(i);
          first = false;
        }
      out += "}";
    }
    out += "]";
  }
  return out;
}

namespace {

void fill(SetValuedTableau& t, std::vector<std::pair<int, int>>& boxes, std::size_t k, const std::vector<int>& bound,
          std::vector<SetValuedTableau>& out) {
  if (k == boxes.size()) {
    out.push_back(t);
    return;
  }
  const auto [r, c] = boxes[k];
  const int hi = bound[r - 1];
  int lo = 1;
  if (c > 1) lo = std::max(lo, max_entry_of(t.at(r, c - 1)));
  if (r > 1) lo = std::max(lo, max_entry_of(t.at(r - 1, c)) + 1);
  if (lo > hi) return;
  // Sets whose minimum is at least lo and maximum at most hi.
  const EntrySet allowed = ((hi >= 32 ? ~0u : ((1u << hi) - 1)) >> (lo - 1)) << (lo - 1);
  for (EntrySet s = allowed; s; s = (s - 1) & allowed) {
    t.set(r, c, s);
    fill(t, boxes, k + 1, bound, out);
  }
  t.set(r, c, 0);
}

std::vector<SetValuedTableau> enumerate_bounded(const Partition& lam, const std::vector<int>& bound) {
  std::vector<std::pair<int, int>> boxes;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam[r]; ++c) boxes.emplace_back(r, c);
  SetValuedTableau t(lam);
  std::vector<SetValuedTableau> out;
  fill(t, boxes, 0, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SetValuedTableau> enumerate_svt(const Partition& lam, int n) {
  if (n > 31) throw DomainError("too many variables for set-valued tableaux");
  return enumerate_bounded(lam, std::vector<int>(std::max(lam.length(), 1), n));
}

std::vector<SetValuedTableau> enumerate_flagged_svt(const Partition& lam, const std::vector<int>& flags) {
  if (int(flags.size()) < lam.length()) throw DomainError("flag vector shorter than partition");
  for (int f : flags)
    if (f > 31) throw DomainError("flag too large");
  return enumerate_bounded(lam, flags);
}

Poly tableau_weight(const SetValuedTableau& t, const VarRegistry& reg) {
  const Partition& lam = t.shape();
  Poly w(reg, 1);
  const Poly b = Poly::beta(reg);
  for (int k = t.total_entries() - lam.size(); k > 0; --k) w *= b;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam[r]; ++c)
      for (int i = 1; i <= 32; ++i) {
        if (!(t.at(r, c) >> (i - 1) & 1u)) continue;
        const int j = i + c - r;
        if (i > reg.nx || j < 1 || j > reg.ny) throw DomainError("tableau entry outside the registry");
        w *= oplus(Poly::x(reg, i), Poly::y(reg, j));
      }
  return w;
}

VarRegistry factorial_registry(const Partition& lam, int n) { return VarRegistry(n, n + lam.first()); }

VarRegistry flagged_registry(const Partition& lam, const std::vector<int>& flags) {
  int top = 0;
  for (int f : flags) top = std::max(top, f);
  return VarRegistry(top, top + lam.first());
}

namespace {

Poly sum_weights(const std::vector<SetValuedTableau>& ts, const VarRegistry& reg) {
  Poly z(reg);
  for (const auto& t : ts) z += tableau_weight(t, reg);
  return z;
}

}  // namespace

Poly factorial_grothendieck(const Partition& lam, int n, std::optional<VarRegistry> reg) {
  const VarRegistry r = reg ? *reg : factorial_registry(lam, n);
  if (r.nx < n || r.ny < n + lam.first() - 1) throw DomainError("registry too small for factorial Grothendieck");
  return sum_weights(enumerate_svt(lam, n), r);
}

Poly flagged_factorial_grothendieck(const Partition& lam, const std::vector<int>& flags,
                                    std::optional<VarRegistry> reg) {
  const VarRegistry need = flagged_registry(lam, flags);
  const VarRegistry r = reg ? *reg : need;
  if (r.nx < need.nx || r.ny < need.ny) throw DomainError("registry too small for flagged Grothendieck");
  return sum_weights(enumerate_flagged_svt(lam, flags), r);
}

}  // namespace groth
