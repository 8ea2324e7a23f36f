#pragma once

// Finite-dimensional rational vector spaces with named basis variables.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "behave/errors.hpp"
#include "behave/matrix.hpp"

namespace behave {

class LinMap;

/// Free rational space on an ordered list of distinct variable names.
class VectObj {
 public:
  using map_type = LinMap;

  VectObj() = default;
  explicit VectObj(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (!seen.insert(v).second) throw InvalidObject("duplicate variable name '" + v + "'");
    }
  }
  VectObj(std::initializer_list<std::string> vars) : VectObj(std::vector<std::string>(vars)) {}

  std::size_t dim() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& operator[](std::size_t i) const { return vars_[i]; }

  std::optional<std::size_t> find(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::size_t index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw UnknownVariable("unknown variable '" + name + "'");
    return *i;
  }

  friend bool operator==(const VectObj&, const VectObj&) = default;

 private:
  std::vector<std::string> vars_;
};

inline VectObj zero_space() { return VectObj{}; }

/// Linear map given by a cod.dim x dom.dim matrix.
class LinMap {
 public:
  using object_type = VectObj;

  LinMap() = default;
  LinMap(VectObj dom, VectObj cod, Matrix matrix)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != cod_.dim() || matrix_.cols() != dom_.dim()) {
      throw InvalidObject("matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                          " but the map is " + std::to_string(dom_.dim()) + " -> " + std::to_string(cod_.dim()));
    }
  }

  const VectObj& dom() const { return dom_; }
  const VectObj& cod() const { return cod_; }
  const Matrix& matrix() const { return matrix_; }

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  VectObj dom_;
  VectObj cod_;
  Matrix matrix_;
};

inline LinMap identity(const VectObj& x) { return LinMap(x, x, Matrix::identity(x.dim())); }

inline LinMap zero_map(const VectObj& dom, const VectObj& cod) { return LinMap(dom, cod, Matrix(cod.dim(), dom.dim())); }

inline LinMap to_terminal(const VectObj& x) { return zero_map(x, zero_space()); }

/// g after f.
inline LinMap compose(const LinMap& g, const LinMap& f) {
  if (!(f.cod() == g.dom())) throw CompositionError("cannot compose: codomain of f differs from domain of g");
  return LinMap(f.dom(), g.cod(), g.matrix() * f.matrix());
}

inline LinMap operator-(const LinMap& f, const LinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw NotParallel("difference of non-parallel maps");
  return LinMap(f.dom(), f.cod(), f.matrix() - g.matrix());
}

/// Projection onto the named coordinates (in the order given).
inline LinMap coordinate_projection(const VectObj& x, const std::vector<std::string>& names) {
  VectObj target(names);
  Matrix m(names.size(), x.dim());
  for (std::size_t i = 0; i < names.size(); ++i) m(i, x.index_of(names[i])) = 1;
  return LinMap(x, std::move(target), std::move(m));
}

/// Same matrix, objects with renamed variables (dimensions must agree).
inline LinMap relabel(const LinMap& f, const VectObj& dom, const VectObj& cod) {
  return LinMap(dom, cod, f.matrix());
}

/// A linear subspace of an ambient space, held as an RREF row basis (so == is subspace equality).
class Subspace {
 public:
  Subspace() = default;

  /// Span of the rows of `rows` (coordinates in `ambient`).
  static Subspace span(VectObj ambient, const Matrix& rows) {
    if (rows.cols() != ambient.dim()) throw InvalidObject("spanning vectors have the wrong length");
    Subspace s;
    s.ambient_ = std::move(ambient);
    s.basis_ = row_space_basis(rows);
    return s;
  }

  static Subspace whole(VectObj ambient) {
    const auto n = ambient.dim();
    return span(std::move(ambient), Matrix::identity(n));
  }

  static Subspace zero(VectObj ambient) {
    const auto n = ambient.dim();
    return span(std::move(ambient), Matrix(0, n));
  }

  /// Kernel of the constraint rows.
  static Subspace kernel(VectObj ambient, const Matrix& constraints) {
    if (constraints.cols() != ambient.dim()) throw InvalidObject("constraint rows have the wrong length");
    return span(std::move(ambient), nullspace(constraints).transpose());
  }

  /// Image of f.
  static Subspace image(const LinMap& f) { return span(f.cod(), f.matrix().transpose()); }

  const VectObj& ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }

  /// Rows spanning the annihilator: this subspace is exactly their common kernel.
  Matrix constraints() const {
    if (basis_.rows() == 0) return Matrix::identity(ambient_.dim());
    return nullspace(basis_).transpose();
  }

  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_.dim()) throw InvalidObject("vector has the wrong length");
    const Matrix c = constraints();
    for (std::size_t i = 0; i < c.rows(); ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j) acc += c(i, j) * v[j];
      if (acc != 0) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    if (!(other.ambient_ == ambient_)) throw UniversumMismatch("subspaces live in different ambient spaces");
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_.row(i))) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  VectObj ambient_;
  Matrix basis_;
};

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!(a.ambient() == b.ambient())) throw UniversumMismatch("subspaces live in different ambient spaces");
  return Subspace::kernel(a.ambient(), vstack(a.constraints(), b.constraints()));
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (!(a.ambient() == b.ambient())) throw UniversumMismatch("subspaces live in different ambient spaces");
  return Subspace::span(a.ambient(), vstack(a.basis(), b.basis()));
}

/// Preimage of a subspace of f.cod() under f.
inline Subspace preimage(const LinMap& f, const Subspace& s) {
  if (!(f.cod() == s.ambient())) throw UniversumMismatch("preimage: subspace is not in the codomain");
  return Subspace::kernel(f.dom(), s.constraints() * f.matrix());
}

}  // namespace behave
