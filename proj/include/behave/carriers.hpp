#pragma once

// The categorical operations the rest of the library needs, for both carriers:
// finite sets (FinMap) and finite-dimensional rational spaces (LinMap).
// Every operation is an overload on the map type so the system/equation layers
// can be written once as templates.

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "behave/errors.hpp"
#include "behave/finset.hpp"
#include "behave/matrix.hpp"
#include "behave/vect.hpp"

namespace behave {

template <class Map>
using ObjectOf = typename Map::object_type;

template <class Map>
struct Product {
  ObjectOf<Map> object;
  Map p1;
  Map p2;
};

/// Object of the pullback with its two legs; f1 * p1 == f2 * p2.
template <class Map>
struct Pullback {
  ObjectOf<Map> object;
  Map p1;
  Map p2;
};

template <class Map>
struct Equalizer {
  ObjectOf<Map> object;
  Map inclusion;
};

/// f == inj * surj with surj epi and inj mono.
template <class Map>
struct Factorization {
  Map surj;
  Map inj;
};

struct MapClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
  friend bool operator==(const MapClass&, const MapClass&) = default;
};

template <class Map>
struct carrier_traits;

template <>
struct carrier_traits<FinMap> {
  static constexpr const char* name = "finset";
  static FinObj terminal() { return terminal_set(); }
};

template <>
struct carrier_traits<LinMap> {
  static constexpr const char* name = "vect";
  static VectObj terminal() { return zero_space(); }
};

template <class Map>
concept CarrierMapType = std::same_as<Map, FinMap> || std::same_as<Map, LinMap>;

// ---------------------------------------------------------------------------
// classification

inline MapClass classify_map(const FinMap& f) {
  MapClass c;
  c.mono = is_injective(f);
  c.epi = is_surjective(f);
  c.iso = c.mono && c.epi;
  return c;
}

inline MapClass classify_map(const LinMap& f) {
  const auto r = rank(f.matrix());
  MapClass c;
  c.mono = r == f.dom().dim();
  c.epi = r == f.cod().dim();
  c.iso = c.mono && c.epi;
  return c;
}

// ---------------------------------------------------------------------------
// products

inline Product<FinMap> product(const FinObj& x, const FinObj& y) {
  std::vector<std::string> labels;
  labels.reserve(x.size() * y.size());
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) labels.push_back(pair_label(a, b));
  FinObj p(std::move(labels));
  std::vector<std::size_t> t1(p.size()), t2(p.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const auto k = p.index_of(pair_label(x[i], y[j]));
      t1[k] = i;
      t2[k] = j;
    }
  }
  return {p, FinMap(p, x, std::move(t1)), FinMap(p, y, std::move(t2))};
}

/// Product variables are always side-qualified: "L.<x>" then "R.<y>".
inline Product<LinMap> product(const VectObj& x, const VectObj& y) {
  std::vector<std::string> vars;
  for (const auto& v : x.vars()) vars.push_back("L." + v);
  for (const auto& v : y.vars()) vars.push_back("R." + v);
  VectObj p(std::move(vars));
  Matrix m1(x.dim(), p.dim()), m2(y.dim(), p.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) m1(i, i) = 1;
  for (std::size_t i = 0; i < y.dim(); ++i) m2(i, x.dim() + i) = 1;
  return {p, LinMap(p, x, std::move(m1)), LinMap(p, y, std::move(m2))};
}

/// <f, g> : X -> A x B
inline FinMap tuple_map(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom())) throw CompositionError("tuple of maps with different domains");
  const auto prod = product(f.cod(), g.cod());
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = prod.object.index_of(pair_label(f.cod()[f(i)], g.cod()[g(i)]));
  return FinMap(f.dom(), prod.object, std::move(t));
}

inline LinMap tuple_map(const LinMap& f, const LinMap& g) {
  if (!(f.dom() == g.dom())) throw CompositionError("tuple of maps with different domains");
  return LinMap(f.dom(), product(f.cod(), g.cod()).object, vstack(f.matrix(), g.matrix()));
}

/// f x g : A x B -> A' x B'
template <CarrierMapType Map>
Map product_map(const Map& f, const Map& g) {
  const auto src = product(f.dom(), g.dom());
  return tuple_map(compose(f, src.p1), compose(g, src.p2));
}

// ---------------------------------------------------------------------------
// pullbacks and equalizers

inline Pullback<FinMap> pullback(const FinMap& f1, const FinMap& f2) {
  if (!(f1.cod() == f2.cod())) throw CodomainMismatch("pullback of maps with different codomains");
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < f1.dom().size(); ++a)
    for (std::size_t b = 0; b < f2.dom().size(); ++b)
      if (f1(a) == f2(b)) labels.push_back(pair_label(f1.dom()[a], f2.dom()[b]));
  FinObj k(std::move(labels));
  std::vector<std::size_t> t1(k.size()), t2(k.size());
  for (std::size_t a = 0; a < f1.dom().size(); ++a) {
    for (std::size_t b = 0; b < f2.dom().size(); ++b) {
      if (f1(a) != f2(b)) continue;
      const auto i = k.index_of(pair_label(f1.dom()[a], f2.dom()[b]));
      t1[i] = a;
      t2[i] = b;
    }
  }
  return {k, FinMap(k, f1.dom(), std::move(t1)), FinMap(k, f2.dom(), std::move(t2))};
}

/// K = ker [f1 | -f2] inside X1 x X2; K's basis vectors are named after the free
/// product coordinates ("L.<x>" / "R.<y>") of that kernel.
inline Pullback<LinMap> pullback(const LinMap& f1, const LinMap& f2) {
  if (!(f1.cod() == f2.cod())) throw CodomainMismatch("pullback of maps with different codomains");
  const auto prod = product(f1.dom(), f2.dom());
  const Matrix joint = hstack(f1.matrix(), -f2.matrix());
  const Matrix basis = nullspace(joint);
  const RowEchelon e = rref(joint);
  std::vector<bool> is_pivot(joint.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < joint.cols(); ++j) {
    if (!is_pivot[j]) names.push_back(prod.object[j]);
  }
  VectObj k(std::move(names));
  const auto d1 = f1.dom().dim();
  return {k, LinMap(k, f1.dom(), basis.select_rows(0, d1)),
          LinMap(k, f2.dom(), basis.select_rows(d1, basis.rows()))};
}

inline Equalizer<FinMap> equalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw NotParallel("equalizer of non-parallel maps");
  std::vector<std::string> agree;
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (f(i) == g(i)) agree.push_back(f.dom()[i]);
  }
  FinObj e(std::move(agree));
  return {e, subset_inclusion(e, f.dom())};
}

/// E = ker(f - g); its basis vectors are named after the free coordinates of X.
inline Equalizer<LinMap> equalizer(const LinMap& f, const LinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw NotParallel("equalizer of non-parallel maps");
  const Matrix diff = f.matrix() - g.matrix();
  const RowEchelon e = rref(diff);
  std::vector<bool> is_pivot(diff.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < diff.cols(); ++j) {
    if (!is_pivot[j]) names.push_back(f.dom()[j]);
  }
  VectObj obj(std::move(names));
  return {obj, LinMap(obj, f.dom(), nullspace(diff))};
}

// ---------------------------------------------------------------------------
// image factorization

inline Factorization<FinMap> image_factorize(const FinMap& f) {
  const FinObj im = image_set(f);
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = im.index_of(f.cod()[f(i)]);
  return {FinMap(f.dom(), im, std::move(t)), subset_inclusion(im, f.cod())};
}

/// The middle object is the column space with its RREF basis, each basis vector
/// named after its pivot coordinate in f.cod().
inline Factorization<LinMap> image_factorize(const LinMap& f) {
  const RowEchelon e = rref(f.matrix().transpose());
  const Matrix basis = e.reduced.select_rows(0, e.rank());
  std::vector<std::string> names;
  for (auto p : e.pivots) names.push_back(f.cod()[p]);
  VectObj mid(std::move(names));
  Matrix coords(e.rank(), f.dom().dim());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t j = 0; j < f.dom().dim(); ++j) coords(r, j) = f.matrix()(e.pivots[r], j);
  return {LinMap(f.dom(), mid, std::move(coords)), LinMap(mid, f.cod(), basis.transpose())};
}

/// The canonical mono with the same image as m (sorted subset / RREF basis).
template <CarrierMapType Map>
Map canonical_mono(const Map& m) {
  return image_factorize(m).inj;
}

// ---------------------------------------------------------------------------
// lifting and mediating maps

/// The unique y with m * y == f when m is mono and im f lies in im m.
inline std::optional<FinMap> lift_through_mono(const FinMap& m, const FinMap& f) {
  if (!(m.cod() == f.cod())) throw CodomainMismatch("lift: maps have different codomains");
  std::vector<std::optional<std::size_t>> preimage(m.cod().size());
  for (std::size_t i = 0; i < m.dom().size(); ++i) preimage[m(i)] = i;
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& p = preimage[f(i)];
    if (!p) return std::nullopt;
    t[i] = *p;
  }
  return FinMap(f.dom(), m.dom(), std::move(t));
}

inline std::optional<LinMap> lift_through_mono(const LinMap& m, const LinMap& f) {
  if (!(m.cod() == f.cod())) throw CodomainMismatch("lift: maps have different codomains");
  auto x = solve(m.matrix(), f.matrix());
  if (!x) return std::nullopt;
  return LinMap(f.dom(), m.dom(), std::move(*x));
}

/// The unique h : H -> K with p1 h == q1 and p2 h == q2; nullopt if (q1, q2) is not a cone.
template <CarrierMapType Map>
std::optional<Map> mediate(const Pullback<Map>& pb, const Map& q1, const Map& q2) {
  return lift_through_mono(tuple_map(pb.p1, pb.p2), tuple_map(q1, q2));
}

// ---------------------------------------------------------------------------
// subobject lattice of a fixed object (monos up to iso, in canonical form)

inline FinMap subobject_meet(const FinMap& a, const FinMap& b) {
  if (!(a.cod() == b.cod())) throw UniversumMismatch("subobjects of different objects");
  const FinObj ia = image_set(a), ib = image_set(b);
  std::vector<std::string> out;
  for (const auto& x : ia.elements()) {
    if (ib.contains(x)) out.push_back(x);
  }
  return subset_inclusion(FinObj(std::move(out)), a.cod());
}

inline FinMap subobject_join(const FinMap& a, const FinMap& b) {
  if (!(a.cod() == b.cod())) throw UniversumMismatch("subobjects of different objects");
  std::vector<std::string> out = image_set(a).elements();
  const FinObj ib = image_set(b);
  for (const auto& x : ib.elements()) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return subset_inclusion(FinObj(std::move(out)), a.cod());
}

/// Canonical mono whose image is s.
inline LinMap subspace_inclusion(const Subspace& s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.dim(); ++i) names.push_back("b" + std::to_string(i));
  return canonical_mono(LinMap(VectObj(std::move(names)), s.ambient(), s.basis().transpose()));
}

inline Subspace image_subspace(const LinMap& m) { return Subspace::image(m); }

inline LinMap subobject_meet(const LinMap& a, const LinMap& b) {
  return subspace_inclusion(intersect(image_subspace(a), image_subspace(b)));
}

inline LinMap subobject_join(const LinMap& a, const LinMap& b) {
  return subspace_inclusion(sum(image_subspace(a), image_subspace(b)));
}

// ---------------------------------------------------------------------------
// runtime carrier dispatch (used by the JSON / CLI layer)

using CarrierMap = std::variant<FinMap, LinMap>;

inline CarrierMap compose(const CarrierMap& g, const CarrierMap& f) {
  if (g.index() != f.index()) throw CarrierMismatch("cannot compose maps of different carriers");
  return std::visit(
      [&](const auto& gg) -> CarrierMap {
        using M = std::decay_t<decltype(gg)>;
        return compose(gg, std::get<M>(f));
      },
      g);
}

inline MapClass classify_map(const CarrierMap& f) {
  return std::visit([](const auto& m) { return classify_map(m); }, f);
}

}  // namespace behave
