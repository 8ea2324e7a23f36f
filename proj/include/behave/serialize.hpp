#pragma once

// JSON encoding of carrier maps, systems, equation representations and
// lattice homomorphisms. Rationals are "p/q" strings; matrices are arrays of
// rows. Every encoder has a matching decoder.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "behave/bool_dual.hpp"
#include "behave/carriers.hpp"
#include "behave/equation.hpp"
#include "behave/errors.hpp"
#include "behave/rational.hpp"
#include "behave/system.hpp"

namespace behave {

using Json = nlohmann::ordered_json;

inline Json encode(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix decode_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InvalidObject("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InvalidObject("matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rational(j[i][k].get<std::string>());
  }
  return m;
}

inline Json encode(const VectObj& x) { return x.vars(); }
inline Json encode(const FinObj& x) { return x.elements(); }

inline VectObj decode_vect(const Json& j) { return VectObj(j.get<std::vector<std::string>>()); }
inline FinObj decode_finset(const Json& j) { return FinObj(j.get<std::vector<std::string>>()); }

inline Json encode(const LinMap& f) {
  return {{"dom", encode(f.dom())}, {"cod", encode(f.cod())}, {"matrix", encode(f.matrix())}};
}

inline LinMap decode_linmap(const Json& j) {
  auto dom = decode_vect(j.at("dom"));
  auto cod = decode_vect(j.at("cod"));
  auto m = decode_matrix(j.at("matrix"), cod.dim(), dom.dim());
  return LinMap(std::move(dom), std::move(cod), std::move(m));
}

/// FinMap tables are objects label -> label.
inline Json encode(const FinMap& f) {
  Json table = Json::object();
  for (std::size_t i = 0; i < f.dom().size(); ++i) table[f.dom()[i]] = f.cod()[f(i)];
  return {{"dom", encode(f.dom())}, {"cod", encode(f.cod())}, {"table", table}};
}

inline FinMap decode_finmap(const Json& j) {
  auto dom = decode_finset(j.at("dom"));
  auto cod = decode_finset(j.at("cod"));
  std::map<std::string, std::string> table;
  for (const auto& [k, v] : j.at("table").items()) table[k] = v.get<std::string>();
  return FinMap(std::move(dom), std::move(cod), table);
}

inline Json encode(const System<LinMap>& s) {
  const auto b = behavior_subspace(s);
  return {{"carrier", "Vect"},
          {"universum", encode(s.universum())},
          {"behavior", {{"dim", b.dim()}, {"basis", encode(b.basis())}}}};
}

inline Json encode(const System<FinMap>& s) {
  return {{"carrier", "FinSet"}, {"universum", encode(s.universum())}, {"behavior", encode(behavior_set(s))}};
}

/// Rebuilt from the universum and the behavior basis / element list.
inline System<LinMap> decode_vect_system(const Json& j) {
  auto u = decode_vect(j.at("universum"));
  const auto& b = j.at("behavior");
  const auto dim = b.at("dim").get<std::size_t>();
  auto basis = decode_matrix(b.at("basis"), dim, u.dim());
  return System<LinMap>(subspace_inclusion(Subspace::span(std::move(u), basis)));
}

inline System<FinMap> decode_finset_system(const Json& j) {
  return System<FinMap>(subset_inclusion(decode_finset(j.at("behavior")), decode_finset(j.at("universum"))));
}

inline Json encode(const EquationRep<LinMap>& rep) {
  return {{"carrier", "Vect"},
          {"universum", encode(rep.universum())},
          {"equations", encode(rep.equations())},
          {"f1", encode(rep.f1().matrix())},
          {"f2", encode(rep.f2().matrix())}};
}

inline EquationRep<LinMap> decode_vect_equation(const Json& j) {
  const auto u = decode_vect(j.at("universum"));
  const auto e = decode_vect(j.at("equations"));
  return EquationRep<LinMap>(LinMap(u, e, decode_matrix(j.at("f1"), e.dim(), u.dim())),
                             LinMap(u, e, decode_matrix(j.at("f2"), e.dim(), u.dim())));
}

inline Json encode(const EquationRep<FinMap>& rep) {
  return {{"carrier", "FinSet"}, {"f1", encode(rep.f1())}, {"f2", encode(rep.f2())}};
}

inline EquationRep<FinMap> decode_finset_equation(const Json& j) {
  return EquationRep<FinMap>(decode_finmap(j.at("f1")), decode_finmap(j.at("f2")));
}

/// atom_image as an object label -> array of labels.
inline Json encode(const BoolHom& h) {
  Json atoms = Json::object();
  for (std::size_t t = 0; t < h.src().base().size(); ++t) {
    atoms[h.src().base()[t]] = h.dst().subset(h.atom_image()[t]).elements();
  }
  return {{"src", encode(h.src().base())}, {"dst", encode(h.dst().base())}, {"atom_image", atoms}};
}

inline BoolHom decode_boolhom(const Json& j) {
  PowerLattice src(decode_finset(j.at("src")));
  PowerLattice dst(decode_finset(j.at("dst")));
  std::vector<Mask> atoms(src.base().size());
  for (const auto& [k, v] : j.at("atom_image").items()) {
    atoms[src.base().index_of(k)] = dst.mask_of(FinObj(v.get<std::vector<std::string>>()));
  }
  return BoolHom(std::move(src), std::move(dst), std::move(atoms));
}

}  // namespace behave
