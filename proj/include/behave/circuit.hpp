#pragma once

// Resistive-circuit front-end: netlist and glue-file parsing, compilation to
// kernel representations, terminal gluing via syntax and semantics pullbacks,
// phenomes (projected behaviors) and emergence detection.
//
// Netlist (.ckt), one directive per line, '#' starts a comment:
//   circuit <name>
//   node <id> [<id> ...]
//   terminal <id> [<id> ...]
//   resistor <id> <n1> <n2> <int | p/q>
//   wire <id> <n1> <n2>
//
// Glue file (.glue):
//   glue <name>
//   identify <leftVar> = <rightVar>
//   option close_dangling

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "behave/carriers.hpp"
#include "behave/equation.hpp"
#include "behave/errors.hpp"
#include "behave/rational.hpp"
#include "behave/system.hpp"

namespace behave {

struct Element {
  enum class Kind { resistor, wire };
  Kind kind = Kind::wire;
  std::string id;
  std::string n1;  // current is oriented n1 -> n2
  std::string n2;
  Rational resistance = 0;  // resistors only, > 0
};

struct Circuit {
  std::string name;
  std::vector<std::string> nodes;
  std::vector<std::string> terminals;
  std::vector<Element> elements;

  bool is_terminal(const std::string& node) const {
    return std::find(terminals.begin(), terminals.end(), node) != terminals.end();
  }

  std::size_t degree(const std::string& node) const {
    std::size_t d = 0;
    for (const auto& e : elements) d += (e.n1 == node) + (e.n2 == node);
    return d;
  }
};

struct GlueSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> identifications;
  bool close_dangling = false;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

inline void check_identifier(const Token& t, std::size_t line) {
  if (t.text.find('=') != std::string::npos) {
    throw ParseError(line, t.column, "identifier '" + t.text + "' may not contain '='");
  }
}

}  // namespace detail

inline Circuit parse_netlist(std::string_view text) {
  using detail::Token;
  Circuit c;
  bool have_name = false;
  struct NodeRef {
    std::string id;
    std::size_t line, column;
  };
  std::vector<NodeRef> terminal_refs, endpoint_refs;
  std::set<std::string> element_ids;

  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const auto tokens = detail::tokenize_line(lines[ln - 1]);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    auto need = [&](std::size_t n, const char* usage) {
      if (tokens.size() != n) {
        const std::size_t col = tokens.size() > n ? tokens[n].column : tokens.back().column;
        throw ParseError(ln, col, std::string("expected '") + usage + "'");
      }
    };
    if (kw == "circuit") {
      need(2, "circuit <name>");
      if (have_name) throw ParseError(ln, tokens[0].column, "duplicate circuit directive");
      c.name = tokens[1].text;
      have_name = true;
    } else if (kw == "node" || kw == "terminal") {
      if (tokens.size() < 2) throw ParseError(ln, tokens[0].column, "expected at least one node id");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        detail::check_identifier(tokens[i], ln);
        if (kw == "node") {
          if (std::find(c.nodes.begin(), c.nodes.end(), tokens[i].text) != c.nodes.end()) {
            throw ParseError(ln, tokens[i].column, "duplicate node '" + tokens[i].text + "'");
          }
          c.nodes.push_back(tokens[i].text);
        } else {
          terminal_refs.push_back({tokens[i].text, ln, tokens[i].column});
        }
      }
    } else if (kw == "resistor" || kw == "wire") {
      const bool resistor = kw == "resistor";
      need(resistor ? 5 : 4, resistor ? "resistor <id> <n1> <n2> <value>" : "wire <id> <n1> <n2>");
      for (std::size_t i = 1; i < 4; ++i) detail::check_identifier(tokens[i], ln);
      Element e;
      e.kind = resistor ? Element::Kind::resistor : Element::Kind::wire;
      e.id = tokens[1].text;
      e.n1 = tokens[2].text;
      e.n2 = tokens[3].text;
      if (!element_ids.insert(e.id).second) {
        throw ParseError(ln, tokens[1].column, "duplicate element id '" + e.id + "'");
      }
      if (e.n1 == e.n2) throw ParseError(ln, tokens[3].column, "self-loop on node '" + e.n1 + "'");
      if (resistor) {
        try {
          e.resistance = parse_rational(tokens[4].text);
        } catch (const InvalidObject& err) {
          throw ParseError(ln, tokens[4].column, err.what());
        }
        if (e.resistance <= 0) throw ParseError(ln, tokens[4].column, "resistance must be positive");
      }
      endpoint_refs.push_back({e.n1, ln, tokens[2].column});
      endpoint_refs.push_back({e.n2, ln, tokens[3].column});
      c.elements.push_back(std::move(e));
    } else {
      throw ParseError(ln, tokens[0].column, "unknown directive '" + kw + "'");
    }
  }

  if (!have_name) throw ParseError(1, 1, "missing 'circuit <name>' directive");
  if (c.nodes.empty()) throw EmptyNetlist(1, 1, "circuit '" + c.name + "' declares no nodes");
  auto declared = [&](const std::string& n) { return std::find(c.nodes.begin(), c.nodes.end(), n) != c.nodes.end(); };
  for (const auto& r : endpoint_refs) {
    if (!declared(r.id)) throw ParseError(r.line, r.column, "unknown node '" + r.id + "'");
  }
  for (const auto& r : terminal_refs) {
    if (!declared(r.id)) throw ParseError(r.line, r.column, "unknown node '" + r.id + "'");
    if (!c.is_terminal(r.id)) c.terminals.push_back(r.id);
  }
  return c;
}

inline GlueSpec parse_glue(std::string_view text) {
  GlueSpec spec;
  bool have_name = false;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const auto tokens = detail::tokenize_line(lines[ln - 1]);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    if (kw == "glue") {
      if (tokens.size() != 2) throw ParseError(ln, tokens[0].column, "expected 'glue <name>'");
      if (have_name) throw ParseError(ln, tokens[0].column, "duplicate glue directive");
      spec.name = tokens[1].text;
      have_name = true;
    } else if (kw == "identify") {
      std::string rest;
      for (std::size_t i = 1; i < tokens.size(); ++i) rest += tokens[i].text;
      const auto eq = rest.find('=');
      if (tokens.size() < 2 || eq == std::string::npos || rest.find('=', eq + 1) != std::string::npos || eq == 0 ||
          eq + 1 == rest.size()) {
        throw ParseError(ln, tokens[0].column, "expected 'identify <leftVar> = <rightVar>'");
      }
      spec.identifications.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
    } else if (kw == "option") {
      if (tokens.size() != 2 || tokens[1].text != "close_dangling") {
        throw ParseError(ln, tokens.size() > 1 ? tokens[1].column : tokens[0].column, "unknown option");
      }
      spec.close_dangling = true;
    } else {
      throw ParseError(ln, tokens[0].column, "unknown directive '" + kw + "'");
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// compilation

inline std::string voltage_var(const std::string& node) { return "v_" + node; }
inline std::string current_var(const std::string& element) { return "i_" + element; }

struct CompiledCircuit {
  Circuit circuit;
  EquationRep<LinMap> rep;  // (f, 0)

  const VectObj& universum() const { return rep.universum(); }
  System<LinMap> system() const { return arr_eq(rep); }
};

/// U = <v_node...> + <i_element...>. Rows: v_n1 - v_n2 - R i = 0 per resistor,
/// v_n1 - v_n2 = 0 per wire, and KCL (out - in = 0) at every non-terminal node
/// that has at least one incident element.
inline CompiledCircuit compile_circuit(const Circuit& c) {
  std::vector<std::string> vars;
  for (const auto& n : c.nodes) vars.push_back(voltage_var(n));
  for (const auto& e : c.elements) vars.push_back(current_var(e.id));
  VectObj u(std::move(vars));

  std::vector<std::string> eq_names;
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : c.elements) {
    std::vector<Rational> row(u.dim());
    row[u.index_of(voltage_var(e.n1))] += 1;
    row[u.index_of(voltage_var(e.n2))] -= 1;
    if (e.kind == Element::Kind::resistor) {
      row[u.index_of(current_var(e.id))] = -e.resistance;
      eq_names.push_back("ohm_" + e.id);
    } else {
      eq_names.push_back("wire_" + e.id);
    }
    rows.push_back(std::move(row));
  }
  for (const auto& n : c.nodes) {
    if (c.is_terminal(n) || c.degree(n) == 0) continue;
    std::vector<Rational> row(u.dim());
    for (const auto& e : c.elements) {
      if (e.n1 == n) row[u.index_of(current_var(e.id))] += 1;
      if (e.n2 == n) row[u.index_of(current_var(e.id))] -= 1;
    }
    eq_names.push_back("kcl_" + n);
    rows.push_back(std::move(row));
  }
  VectObj e(std::move(eq_names));
  LinMap f(u, e, Matrix::from_rows(u.dim(), rows));
  return {c, kernel_rep(f)};
}

// ---------------------------------------------------------------------------
// gluing

struct GlueResult {
  EquationRep<LinMap> rep;         // syntax side: stacked equations on the glued universum
  System<LinMap> syntax_system;    // arr_eq(rep)
  System<LinMap> system;           // semantics side: pullback of the interpreted morphisms
  bool syntax_equals_semantics = false;
  std::vector<std::string> closed_terminals;
  std::map<std::string, std::string> left_names;   // left variable  -> glued variable
  std::map<std::string, std::string> right_names;  // right variable -> glued variable

  std::size_t universum_dim() const { return system.universum().dim(); }
  std::size_t behavior_dim() const { return system.behavior().dim(); }
};

/// "x" when both sides use the same name, else "x=y".
inline std::string merged_name(const std::string& left, const std::string& right) {
  return left == right ? left : left + "=" + right;
}

namespace detail {

inline bool is_voltage(const std::string& var) { return var.rfind("v_", 0) == 0; }
inline bool is_current(const std::string& var) { return var.rfind("i_", 0) == 0; }

/// Rows over `u` forcing zero net current at each degree <= 1 terminal of the glued circuit.
inline Matrix closing_rows(const Circuit& a, const Circuit& b, const GlueSpec& spec, const GlueResult& g,
                           const VectObj& u, std::vector<std::string>& closed) {
  // union-find over "L:node" / "R:node"
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  std::vector<std::string> order;
  for (const auto& n : a.nodes) order.push_back("L:" + n), parent["L:" + n] = "L:" + n;
  for (const auto& n : b.nodes) order.push_back("R:" + n), parent["R:" + n] = "R:" + n;
  for (const auto& [l, r] : spec.identifications) {
    if (!is_voltage(l)) continue;
    const auto x = find("L:" + l.substr(2)), y = find("R:" + r.substr(2));
    if (x != y) parent[y] = x;
  }

  std::vector<std::vector<Rational>> rows;
  std::set<std::string> done;
  for (const auto& key : order) {
    const auto root = find(key);
    if (!done.insert(root).second) continue;
    bool terminal = false;
    std::size_t degree = 0;
    std::vector<Rational> row(u.dim());
    std::string label;
    for (const auto& member : order) {
      if (find(member) != root) continue;
      const bool left = member[0] == 'L';
      const Circuit& c = left ? a : b;
      const std::string node = member.substr(2);
      label += label.empty() ? node : "=" + node;
      terminal = terminal || c.is_terminal(node);
      degree += c.degree(node);
      const auto& names = left ? g.left_names : g.right_names;
      for (const auto& e : c.elements) {
        const auto idx = u.index_of(names.at(current_var(e.id)));
        if (e.n1 == node) row[idx] += 1;
        if (e.n2 == node) row[idx] -= 1;
      }
    }
    if (!terminal || degree > 1 || degree == 0) continue;
    closed.push_back(label);
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(u.dim(), rows);
}

}  // namespace detail

/// Glue two circuits along identified variables. U_c is the free space on the
/// merged names; both sides map to it by coordinate projection (everything
/// else to 0) over the trivial equation (0, 0) : U_c -> 0. The syntax pullback
/// and the semantics pullback are both computed and compared.
inline GlueResult glue(const Circuit& left, const Circuit& right, const GlueSpec& spec, bool close_dangling = false) {
  const auto a = compile_circuit(left);
  const auto b = compile_circuit(right);
  const VectObj& ua = a.universum();
  const VectObj& ub = b.universum();

  std::set<std::string> used_left, used_right;
  std::vector<std::string> shared_names;
  for (const auto& [l, r] : spec.identifications) {
    if (!ua.find(l)) throw UnknownVariable("'" + l + "' is not a variable of circuit " + left.name);
    if (!ub.find(r)) throw UnknownVariable("'" + r + "' is not a variable of circuit " + right.name);
    if (detail::is_voltage(l) != detail::is_voltage(r)) {
      throw GlueError("ill-typed identification " + l + " = " + r + " (voltage with current)");
    }
    if (!used_left.insert(l).second || !used_right.insert(r).second) {
      throw GlueError("variable identified twice in " + l + " = " + r);
    }
    shared_names.push_back(merged_name(l, r));
  }
  VectObj uc;
  try {
    uc = VectObj(shared_names);
  } catch (const InvalidObject& e) {
    throw GlueError(std::string("name collision after merge: ") + e.what());
  }

  auto projection = [&](const VectObj& u, bool is_left) {
    Matrix m(uc.dim(), u.dim());
    for (std::size_t k = 0; k < spec.identifications.size(); ++k) {
      const auto& var = is_left ? spec.identifications[k].first : spec.identifications[k].second;
      m(k, u.index_of(var)) = 1;
    }
    return LinMap(u, uc, std::move(m));
  };
  const EquationRep<LinMap> common(zero_map(uc, zero_space()), zero_map(uc, zero_space()));
  const EquationMorphism<LinMap> psi(a.rep, common, projection(ua, true), to_terminal(a.rep.equations()));
  const EquationMorphism<LinMap> psi_prime(b.rep, common, projection(ub, false), to_terminal(b.rep.equations()));

  const auto syntax = pullback_equations(psi, psi_prime);
  const auto semantics = pullback_systems(arr_eq_morphism(psi), arr_eq_morphism(psi_prime));

  // Name the glued coordinates after what each basis vector of U* projects to.
  GlueResult out{syntax.rep, arr_eq(syntax.rep), semantics.system, false, {}, {}, {}};
  const Matrix& pa = syntax.proj.psi_u().matrix();
  const Matrix& pb = syntax.proj_prime.psi_u().matrix();
  const VectObj& ustar = syntax.rep.universum();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < ustar.dim(); ++k) {
    std::optional<std::size_t> ia, ib;
    for (std::size_t i = 0; i < pa.rows(); ++i)
      if (pa(i, k) != 0) ia = i;
    for (std::size_t i = 0; i < pb.rows(); ++i)
      if (pb(i, k) != 0) ib = i;
    std::string name;
    if (ia && ib) {
      name = merged_name(ua[*ia], ub[*ib]);
    } else if (ia) {
      name = ub.find(ua[*ia]) ? "L." + ua[*ia] : ua[*ia];
    } else if (ib) {
      name = ua.find(ub[*ib]) ? "R." + ub[*ib] : ub[*ib];
    } else {
      name = ustar[k];
    }
    if (ia) out.left_names[ua[*ia]] = name;
    if (ib) out.right_names[ub[*ib]] = name;
    names.push_back(std::move(name));
  }
  VectObj glued;
  try {
    glued = VectObj(names);
  } catch (const InvalidObject& e) {
    throw GlueError(std::string("name collision after merge: ") + e.what());
  }

  const VectObj& estar = syntax.rep.equations();
  LinMap f1 = relabel(syntax.rep.f1(), glued, estar);
  LinMap f2 = relabel(syntax.rep.f2(), glued, estar);
  System<LinMap> sem(relabel(semantics.system.inclusion(), semantics.system.behavior(), glued));

  if (close_dangling || spec.close_dangling) {
    const Matrix rows = detail::closing_rows(left, right, spec, out, glued, out.closed_terminals);
    std::vector<std::string> enames = estar.vars();
    for (const auto& t : out.closed_terminals) enames.push_back("close_" + t);
    VectObj e2(std::move(enames));
    f1 = LinMap(glued, e2, vstack(f1.matrix(), rows));
    f2 = LinMap(glued, e2, vstack(f2.matrix(), Matrix(rows.rows(), glued.dim())));
    sem = BehaviorLattice<LinMap>(glued).meet(sem, System<LinMap>(subspace_inclusion(Subspace::kernel(glued, rows))));
  }

  out.rep = EquationRep<LinMap>(std::move(f1), std::move(f2));
  out.syntax_system = arr_eq(out.rep);
  out.system = canonicalize(sem);
  out.syntax_equals_semantics = same_behavior(out.syntax_system, out.system);
  return out;
}

// ---------------------------------------------------------------------------
// phenomes and emergence

struct Phenome {
  std::vector<std::string> vars;
  System<LinMap> value;  // behavior projected onto vars
  std::size_t dim() const { return value.behavior().dim(); }
  Subspace subspace() const { return behavior_subspace(value); }
};

inline Phenome phenome(const System<LinMap>& s, const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (!s.universum().find(v)) throw UnknownVariable("unknown observable '" + v + "'");
  }
  auto projected = project_latent(s, coordinate_projection(s.universum(), vars));
  return {vars, std::move(projected.manifest)};
}

struct EmergenceReport {
  std::vector<std::string> vars;
  Subspace parts;  // interconnection of the parts' phenomes
  Subspace whole;  // phenome of the interconnection
  std::size_t parts_dim() const { return parts.dim(); }
  std::size_t whole_dim() const { return whole.dim(); }
  bool whole_within_parts() const { return parts.contains(whole); }
  bool emergent() const { return !(parts == whole); }
};

inline EmergenceReport emergence_report(const Circuit& left, const Circuit& right, const GlueSpec& spec,
                                        const std::vector<std::string>& vars, bool close_dangling = false) {
  const VectObj observed(vars);
  const auto a = compile_circuit(left);
  const auto b = compile_circuit(right);

  // Lift each part's phenome to the observed space (unobserved-by-that-part coordinates free).
  auto lifted = [&](const CompiledCircuit& c) {
    std::vector<std::string> mine;
    for (const auto& v : vars) {
      if (c.universum().find(v)) mine.push_back(v);
    }
    const auto p = phenome(c.system(), mine);
    return preimage(coordinate_projection(observed, mine), p.subspace());
  };
  for (const auto& v : vars) {
    if (!a.universum().find(v) && !b.universum().find(v)) {
      throw UnknownVariable("observable '" + v + "' is in neither circuit");
    }
  }
  Subspace parts = intersect(lifted(a), lifted(b));

  const auto glued = glue(left, right, spec, close_dangling);
  for (const auto& v : vars) {
    if (!glued.system.universum().find(v)) {
      throw UnknownVariable("observable '" + v + "' does not name a single variable of the glued circuit");
    }
  }
  Subspace whole = phenome(glued.system, vars).subspace();
  return {vars, std::move(parts), std::move(whole)};
}

}  // namespace behave
