#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "groth/bijections.hpp"
#include "groth/diffops.hpp"
#include "groth/errors.hpp"
#include "groth/lattice.hpp"
#include "groth/lgv.hpp"
#include "groth/tableaux.hpp"
#include "groth/verify.hpp"

using json = nlohmann::json;

namespace {

// "2,1" or, when every part is a single digit, "21".
std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw groth::ParseError("expected digits: " + text);
      out.push_back(ch - '0');
    }
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw groth::ParseError("bad integer: " + part);
    } catch (const std::logic_error&) {
      throw groth::ParseError("bad integer: " + part);
    }
  }
  return out;
}

groth::Partition parse_shape(const std::string& text) {
  if (text.empty() || text == "0") return groth::Partition{};
  auto parts = parse_ints(text);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) throw groth::ParseError("not a partition: " + text);
  return groth::Partition(parts);
}

groth::Permutation parse_perm(const std::string& text) {
  try {
    return groth::Permutation::parse(text);
  } catch (const groth::DomainError& e) {
    throw groth::ParseError(e.what());
  }
}

json registry_json(const groth::VarRegistry& reg) {
  json vars = json::array();
  for (int v = 0; v < reg.size(); ++v) vars.push_back(reg.name(v));
  return vars;
}

json poly_json(const groth::Poly& p) {
  return {{"variables", registry_json(p.registry())}, {"terms", json::parse(groth::to_json(p))["terms"]},
          {"text", p.str()}};
}

groth::Poly beta_zero(const groth::Poly& p) {
  return groth::substitute(p, {{p.registry().beta(), groth::Poly(p.registry())}});
}

void print_poly(const groth::Poly& p, bool as_json) {
  if (as_json)
    std::cout << poly_json(p).dump() << "\n";
  else
    std::cout << p << "\n";
}

struct Options {
  std::string what = "grothendieck";
  std::string perm, shape, flags;
  int n = 0;
  bool beta_zero = false;
  bool json = false;
  std::string model = "bumpless";
  std::string render = "ascii";
  std::string variant = "atom";
  bool marked = false;
  bool count = false;
  std::string suite = "all";
  int max_n = 4;
  std::uint64_t seed = 1;
  bool full = false;
  bool matrix = false;
  std::string out;
};

groth::Poly run_compute(const Options& o) {
  using namespace groth;
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw ParseError(std::string("missing ") + flag);
  };
  Poly p;
  if (o.what == "grothendieck") {
    need(o.perm, "--perm");
    p = double_grothendieck(parse_perm(o.perm));
  } else if (o.what == "factorial") {
    const Partition lam = parse_shape(o.shape);
    if (o.n < 1) throw ParseError("missing --n");
    p = factorial_grothendieck(lam, o.n);
  } else if (o.what == "flagged") {
    need(o.flags, "--flags");
    p = flagged_factorial_grothendieck(parse_shape(o.shape), parse_ints(o.flags));
  } else {
    need(o.perm, "--perm");
    const LascouxKind kind = o.what == "lascoux-atom" ? LascouxKind::ATOM : LascouxKind::POLY;
    p = extended_lascoux(kind, parse_shape(o.shape), parse_perm(o.perm));
  }
  return o.beta_zero ? beta_zero(p) : p;
}

struct Listing {
  groth::ModelInstance model;
  std::vector<groth::State> states;
};

Listing build_listing(const Options& o) {
  using namespace groth;
  if (o.model == "bumpless") {
    if (o.perm.empty()) throw ParseError("missing --perm");
    ModelInstance m = build_bumpless(parse_perm(o.perm));
    auto st = enumerate_states(m);
    return {std::move(m), std::move(st)};
  }
  if (o.model == "semidual") {
    if (!o.perm.empty()) {
      const Permutation w = parse_perm(o.perm);
      return {build_semidual(w.size(), true), dw_states(w)};
    }
    if (o.n < 1) throw ParseError("semidual needs --perm or --n");
    ModelInstance m = build_semidual(o.n);
    auto st = enumerate_states(m);
    return {std::move(m), std::move(st)};
  }
  if (o.model == "atom") {
    if (o.perm.empty()) throw ParseError("missing --perm");
    const Permutation w = parse_perm(o.perm);
    const AtomVariant var = o.variant == "poly" ? AtomVariant::POLY : AtomVariant::ATOM;
    ModelInstance m = build_atom_model(parse_shape(o.shape), Permutation::longest(w.size()) * w, var);
    auto st = enumerate_states(m);
    return {std::move(m), std::move(st)};
  }
  if (o.n < 1) throw ParseError("missing --n");
  ModelInstance m = build_five_vertex(parse_shape(o.shape), o.n);
  auto st = enumerate_states(m);
  return {std::move(m), std::move(st)};
}

json state_json(const groth::ModelInstance& m, const groth::State& s,
                const std::vector<std::pair<int, int>>* marks, const groth::Poly& weight) {
  json j = json::parse(groth::render_json(m, s, marks));
  j["weight"] = weight.str();
  return j;
}

int run_states(const Options& o) {
  using namespace groth;
  const Listing l = build_listing(o);
  const ModelInstance& m = l.model;
  if (o.marked) {
    const auto ms = enumerate_marked_states(m, l.states);
    if (o.count) {
      std::cout << ms.size() << "\n";
      return 0;
    }
    if (o.render == "json") {
      json arr = json::array();
      for (const auto& s : ms) arr.push_back(state_json(m, s.state, &s.marks, marked_weight(m, s)));
      std::cout << arr.dump() << "\n";
      return 0;
    }
    for (std::size_t k = 0; k < ms.size(); ++k) {
      std::cout << "# state " << k << "\n" << render_ascii(m, ms[k].state) << "marks:";
      for (const auto& [r, c] : ms[k].marks) std::cout << " (" << r << "," << c << ")";
      std::cout << "\nweight: " << marked_weight(m, ms[k]) << "\n\n";
    }
    return 0;
  }
  if (o.count) {
    std::cout << l.states.size() << "\n";
    return 0;
  }
  if (o.render == "json") {
    json arr = json::array();
    for (const auto& s : l.states) arr.push_back(state_json(m, s, nullptr, state_weight(m, s)));
    std::cout << arr.dump() << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < l.states.size(); ++k)
    std::cout << "# state " << k << "\n" << render_ascii(m, l.states[k]) << "weight: " << state_weight(m, l.states[k])
              << "\n\n";
  return 0;
}

int run_verify(const Options& o) {
  const auto results = groth::run_suite(o.suite, o.max_n, o.seed);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok &= r.ok;
    if (o.json) {
      arr.push_back({{"name", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"counterexample", r.counterexample}});
      continue;
    }
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.ok) std::cout << ": " << r.counterexample;
    std::cout << "\n";
  }
  if (o.json) std::cout << json{{"suite", o.suite}, {"max_n", o.max_n}, {"ok", ok}, {"checks", arr}}.dump() << "\n";
  return ok ? 0 : 1;
}

int run_lgv(const Options& o) {
  using namespace groth;
  std::vector<std::vector<Poly>> mat;
  if (o.full) {
    if (o.n < 1) throw ParseError("missing --n");
    mat = lgv_matrix_full(o.n);
  } else {
    if (o.perm.empty()) throw ParseError("missing --perm");
    mat = lgv_matrix(parse_perm(o.perm));
  }
  const Poly det = determinant(mat);
  if (o.json) {
    json rows = json::array();
    for (const auto& row : mat) {
      json r = json::array();
      for (const auto& p : row) r.push_back(p.str());
      rows.push_back(r);
    }
    std::cout << json{{"matrix", rows}, {"determinant", poly_json(det)}}.dump() << "\n";
    return 0;
  }
  if (o.matrix)
    for (std::size_t a = 0; a < mat.size(); ++a)
      for (std::size_t b = 0; b < mat.size(); ++b) std::cout << "p[" << a + 1 << "," << b + 1 << "] = " << mat[a][b] << "\n";
  std::cout << det << "\n";
  return 0;
}

int run_solve_r(const Options& o) {
  using namespace groth;
  WeightTable t;
  if (o.model == "bumpless")
    t = bumpless_table();
  else if (o.model == "atom")
    t = atom_table();
  else if (o.model == "semidual")
    t = semidual_table();
  else
    throw ParseError("solve-r supports bumpless, atom and semidual");
  const RSolution s = solve_r_matrix(t);
  if (o.json) {
    json arr = json::array();
    for (const auto& [k, v] : s.entries)
      arr.push_back({{"key", k}, {"num", v.num.str()}, {"den", v.den.str()}});
    std::cout << json{{"variables", {{"z_i", "x1"}, {"z_j", "x2"}, {"y", "y1"}}},
                      {"unknowns", s.unknowns},
                      {"equations", s.equations},
                      {"entries", arr}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "# " << s.entries.size() << " entries; z_i = x1, z_j = x2, y = y1\n";
  for (const auto& [k, v] : s.entries)
    std::cout << "(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ") " << v.str() << "\n";
  return 0;
}

int run_export(const Options& o) {
  using namespace groth;
  const Listing l = build_listing(o);
  json states = json::array();
  for (const auto& s : l.states) states.push_back(state_json(l.model, s, nullptr, state_weight(l.model, s)));
  const json doc{{"model", l.model.table.name},
                 {"perm", o.perm},
                 {"shape", o.shape},
                 {"partition_function", poly_json(partition_function(l.model, l.states))},
                 {"states", states}};
  if (o.out.empty()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainError("cannot write " + o.out);
  f << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Grothendieck polynomials by operators, lattice models, tableaux and path determinants"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Print a polynomial");
  compute->add_option("--what", o.what)
      ->check(CLI::IsMember({"grothendieck", "factorial", "flagged", "lascoux-atom", "lascoux-poly"}));
  compute->add_option("--perm", o.perm, "Permutation, one-line notation");
  compute->add_option("--shape", o.shape, "Partition, e.g. 2,1");
  compute->add_option("--flags", o.flags, "Flag bounds, e.g. 2,3");
  compute->add_option("--n", o.n, "Number of x variables");
  compute->add_flag("--beta-zero", o.beta_zero, "Set b = 0");
  compute->add_flag("--json", o.json);

  auto* states = app.add_subcommand("states", "Enumerate lattice model states");
  states->add_option("--model", o.model)->check(CLI::IsMember({"bumpless", "semidual", "atom", "five-vertex"}));
  states->add_option("--perm", o.perm);
  states->add_option("--shape", o.shape);
  states->add_option("--n", o.n);
  states->add_option("--variant", o.variant, "Atom model weights")->check(CLI::IsMember({"atom", "poly"}));
  states->add_option("--render", o.render)->check(CLI::IsMember({"ascii", "json"}));
  states->add_flag("--marked", o.marked, "Expand markable tiles");
  states->add_flag("--count", o.count, "Print only the number of states");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"ybe", "theorems", "operators", "bijections", "lgv", "all"}));
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(1, 5));
  verify->add_option("--seed", o.seed, "Seed for the random polynomials");
  verify->add_flag("--json", o.json);

  auto* lgv = app.add_subcommand("lgv", "Path matrix determinant");
  lgv->add_option("--perm", o.perm, "Vexillary permutation");
  lgv->add_flag("--full", o.full, "K-theory graph on the n x n grid");
  lgv->add_option("--n", o.n);
  lgv->add_flag("--matrix", o.matrix, "Print the matrix entries");
  lgv->add_flag("--json", o.json);

  auto* solve = app.add_subcommand("solve-r", "Solve the RLL system for the R-matrix");
  solve->add_option("--model", o.model)->check(CLI::IsMember({"bumpless", "atom", "semidual"}));
  solve->add_flag("--json", o.json);

  auto* exp = app.add_subcommand("export", "Write states and partition function as JSON");
  exp->add_option("--model", o.model)->check(CLI::IsMember({"bumpless", "semidual", "atom", "five-vertex"}));
  exp->add_option("--perm", o.perm);
  exp->add_option("--shape", o.shape);
  exp->add_option("--n", o.n);
  exp->add_option("--variant", o.variant)->check(CLI::IsMember({"atom", "poly"}));
  exp->add_option("--out", o.out, "Output file; stdout if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      print_poly(run_compute(o), o.json);
      return 0;
    }
    if (*states) return run_states(o);
    if (*verify) return run_verify(o);
    if (*lgv) return run_lgv(o);
    if (*solve) return run_solve_r(o);
    if (*exp) return run_export(o);
  } catch (const groth::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const groth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
