#pragma once

// The `behave` command line: behavior, glue, emergence and check. Reports are
// plain structs with text and JSON renderings; run() maps failures to exit
// codes 0 (ok), 1 (domain error or failed law), 2 (usage error).

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "behave/circuit.hpp"
#include "behave/errors.hpp"
#include "behave/laws.hpp"
#include "behave/serialize.hpp"

namespace behave::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

struct BehaviorReport {
  std::string circuit;
  std::vector<std::string> universum;
  std::vector<std::string> equations;
  std::size_t dim_u = 0;
  std::size_t dim_b = 0;
  Matrix basis;  // RREF rows spanning B

  friend bool operator==(const BehaviorReport&, const BehaviorReport&) = default;
};

struct GlueReport {
  std::string name;
  std::vector<std::string> universum;
  std::size_t syntax_dim = 0;
  std::size_t semantics_dim = 0;
  bool equal = false;
  std::vector<std::string> closed_terminals;
  Matrix basis;

  friend bool operator==(const GlueReport&, const GlueReport&) = default;
};

struct EmergenceSummary {
  std::vector<std::string> observed;
  std::size_t parts_dim = 0;
  std::size_t whole_dim = 0;
  bool whole_within_parts = false;
  bool emergent = false;

  friend bool operator==(const EmergenceSummary&, const EmergenceSummary&) = default;
};

struct CheckReport {
  std::string law;
  std::uint64_t seed = 0;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;

  bool ok() const { return passed == total; }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// ---------------------------------------------------------------------------
// building reports

inline BehaviorReport behavior_report(const Circuit& c) {
  const auto cc = compile_circuit(c);
  const auto b = behavior_subspace(cc.system());
  return {c.name, cc.universum().vars(), cc.rep.equations().vars(), cc.universum().dim(), b.dim(), b.basis()};
}

inline GlueReport glue_report(const Circuit& a, const Circuit& b, const GlueSpec& spec, bool close_dangling) {
  const auto g = glue(a, b, spec, close_dangling);
  return {spec.name.empty() ? a.name + "+" + b.name : spec.name,
          g.system.universum().vars(),
          g.syntax_system.behavior().dim(),
          g.system.behavior().dim(),
          g.syntax_equals_semantics,
          g.closed_terminals,
          behavior_subspace(g.system).basis()};
}

inline EmergenceSummary emergence_summary(const Circuit& a, const Circuit& b, const GlueSpec& spec,
                                          const std::vector<std::string>& observed, bool close_dangling) {
  const auto r = emergence_report(a, b, spec, observed, close_dangling);
  return {observed, r.parts_dim(), r.whole_dim(), r.whole_within_parts(), r.emergent()};
}

inline const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{"preservation", "duality", "adjunction", "lattice"};
  return names;
}

/// trials == 0 picks the law's default.
inline CheckReport check_report(const std::string& law, std::uint64_t seed, std::size_t trials) {
  LawTally t;
  if (law == "preservation") {
    t = preservation_law(seed, trials ? trials : 200);
  } else if (law == "duality") {
    t = duality_law(seed, trials ? trials : 500);
  } else if (law == "adjunction") {
    t = adjunction_law(seed, trials ? trials : 50);
  } else if (law == "lattice") {
    t = lattice_law(seed, trials ? trials : 100);
  } else {
    throw InvalidObject("unknown law '" + law + "'");
  }
  return {law, seed, t.passed, t.total, t.failures};
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const BehaviorReport& r) {
  return {{"report", "behavior"}, {"circuit", r.circuit},   {"universum", r.universum}, {"equations", r.equations},
          {"dim_u", r.dim_u},     {"dim_b", r.dim_b},       {"basis", encode(r.basis)}};
}

inline Json to_json(const GlueReport& r) {
  return {{"report", "glue"},
          {"name", r.name},
          {"universum", r.universum},
          {"syntax_dim", r.syntax_dim},
          {"semantics_dim", r.semantics_dim},
          {"syntax_equals_semantics", r.equal},
          {"closed_terminals", r.closed_terminals},
          {"basis", encode(r.basis)}};
}

inline Json to_json(const EmergenceSummary& r) {
  return {{"report", "emergence"},      {"observed", r.observed},
          {"parts_dim", r.parts_dim},   {"whole_dim", r.whole_dim},
          {"whole_within_parts", r.whole_within_parts}, {"emergent", r.emergent}};
}

inline Json to_json(const CheckReport& r) {
  return {{"report", "check"},   {"law", r.law},     {"seed", r.seed},
          {"passed", r.passed},  {"total", r.total}, {"failures", r.failures}};
}

inline BehaviorReport behavior_report_from_json(const Json& j) {
  BehaviorReport r;
  r.circuit = j.at("circuit").get<std::string>();
  r.universum = j.at("universum").get<std::vector<std::string>>();
  r.equations = j.at("equations").get<std::vector<std::string>>();
  r.dim_u = j.at("dim_u").get<std::size_t>();
  r.dim_b = j.at("dim_b").get<std::size_t>();
  r.basis = decode_matrix(j.at("basis"), r.dim_b, r.dim_u);
  return r;
}

inline GlueReport glue_report_from_json(const Json& j) {
  GlueReport r;
  r.name = j.at("name").get<std::string>();
  r.universum = j.at("universum").get<std::vector<std::string>>();
  r.syntax_dim = j.at("syntax_dim").get<std::size_t>();
  r.semantics_dim = j.at("semantics_dim").get<std::size_t>();
  r.equal = j.at("syntax_equals_semantics").get<bool>();
  r.closed_terminals = j.at("closed_terminals").get<std::vector<std::string>>();
  r.basis = decode_matrix(j.at("basis"), r.semantics_dim, r.universum.size());
  return r;
}

inline EmergenceSummary emergence_summary_from_json(const Json& j) {
  EmergenceSummary r;
  r.observed = j.at("observed").get<std::vector<std::string>>();
  r.parts_dim = j.at("parts_dim").get<std::size_t>();
  r.whole_dim = j.at("whole_dim").get<std::size_t>();
  r.whole_within_parts = j.at("whole_within_parts").get<bool>();
  r.emergent = j.at("emergent").get<bool>();
  return r;
}

inline CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.law = j.at("law").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.passed = j.at("passed").get<std::size_t>();
  r.total = j.at("total").get<std::size_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  return r;
}

// ---------------------------------------------------------------------------
// text

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

inline void print_basis(std::ostream& out, const Matrix& basis) {
  out << "basis:\n";
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::vector<std::string> row;
    for (const auto& x : basis.row(i)) row.push_back(to_string(x));
    out << "  [" << join(row, ", ") << "]\n";
  }
}

inline void print(std::ostream& out, const BehaviorReport& r) {
  out << "circuit " << r.circuit << "\n";
  out << "U = [" << join(r.universum, ", ") << "]\n";
  out << "dim(U)=" << r.dim_u << " dim(B)=" << r.dim_b << "\n";
  print_basis(out, r.basis);
}

inline void print(std::ostream& out, const GlueReport& r) {
  out << "glue " << r.name << "\n";
  out << "U* = [" << join(r.universum, ", ") << "]\n";
  if (!r.closed_terminals.empty()) out << "closed terminals: " << join(r.closed_terminals, " ") << "\n";
  out << "syntax dim=" << r.syntax_dim << ", semantics dim=" << r.semantics_dim << "\n";
  out << "dim=" << r.semantics_dim << ", syntax==semantics: " << (r.equal ? "true" : "false") << "\n";
  print_basis(out, r.basis);
}

inline void print(std::ostream& out, const EmergenceSummary& r) {
  out << "observe [" << join(r.observed, ", ") << "]\n";
  out << "parts=" << r.parts_dim << " whole=" << r.whole_dim << " emergent=" << (r.emergent ? "true" : "false")
      << "\n";
}

inline void print(std::ostream& out, const CheckReport& r) {
  out << r.law << ": " << r.passed << "/" << r.total << (r.ok() ? " pass" : " FAIL") << "\n";
  for (const auto& f : r.failures) out << "  failed: " << f << "\n";
}

// ---------------------------------------------------------------------------
// driver

/// A netlist with nothing in it is treated as a usage error.
struct EmptyInput : Error {
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Circuit load_circuit(const std::string& path) {
  try {
    return parse_netlist(read_file(path));
  } catch (const EmptyNetlist& e) {
    throw EmptyInput(path + ":" + e.what());
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

inline GlueSpec load_glue(const std::string& path) {
  try {
    return parse_glue(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

template <class Report>
void emit(std::ostream& out, const Report& r, bool json) {
  if (json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    print(out, r);
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Behavioral systems toolkit: circuits, interconnection, emergence and law checks", "behave"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  app.add_flag("--json", json, "Print reports as JSON");
  app.add_option("--seed", seed, "Random seed for law checks");
  app.add_option("--trials", trials, "Number of randomized trials (0 = law default)");

  auto* behavior = app.add_subcommand("behavior", "Compile a netlist and print its behavior");
  std::string netlist;
  behavior->add_option("netlist", netlist, "Netlist file (.ckt)")->required();

  auto* gluecmd = app.add_subcommand("glue", "Interconnect two circuits");
  std::string left, right, gluefile;
  bool close_dangling = false;
  gluecmd->add_option("left", left, "Left netlist")->required();
  gluecmd->add_option("right", right, "Right netlist")->required();
  gluecmd->add_option("glue", gluefile, "Glue file (.glue)")->required();
  gluecmd->add_flag("--close-dangling", close_dangling, "Zero the current at dangling terminals");

  auto* emerg = app.add_subcommand("emergence", "Compare the phenome of the whole with that of the parts");
  std::vector<std::string> observed;
  emerg->add_option("left", left, "Left netlist")->required();
  emerg->add_option("right", right, "Right netlist")->required();
  emerg->add_option("glue", gluefile, "Glue file (.glue)")->required();
  emerg->add_option("--observe", observed, "Observed variables, comma separated")->required()->delimiter(',');
  emerg->add_flag("--close-dangling", close_dangling, "Zero the current at dangling terminals");

  auto* check = app.add_subcommand("check", "Run a law check");
  std::string law;
  check->add_option("--law", law, "preservation | duality | adjunction | lattice")
      ->required()
      ->check(CLI::IsMember(law_names()));

  for (auto* sub : {behavior, gluecmd, emerg, check}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'behave --help' for usage\n";
    return kUsageError;
  }

  try {
    if (*behavior) {
      emit(out, behavior_report(load_circuit(netlist)), json);
    } else if (*gluecmd) {
      emit(out, glue_report(load_circuit(left), load_circuit(right), load_glue(gluefile), close_dangling), json);
    } else if (*emerg) {
      emit(out,
           emergence_summary(load_circuit(left), load_circuit(right), load_glue(gluefile), observed, close_dangling),
           json);
    } else {
      const auto r = check_report(law, seed, trials);
      emit(out, r, json);
      return r.ok() ? kOk : kDomainError;
    }
  } catch (const EmptyInput& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace behave::cli
