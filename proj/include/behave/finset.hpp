#pragma once

// Finite sets with functions: the set-valued carrier.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "behave/errors.hpp"

namespace behave {

class FinMap;

/// A finite set of string labels, stored sorted so equal sets compare equal.
class FinObj {
 public:
  using map_type = FinMap;

  FinObj() = default;
  explicit FinObj(std::vector<std::string> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    const auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end()) throw InvalidObject("duplicate set element '" + *dup + "'");
  }
  FinObj(std::initializer_list<std::string> elements) : FinObj(std::vector<std::string>(elements)) {}

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const std::string& label) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), label);
    if (it == elements_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::size_t index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw InvalidObject("'" + label + "' is not an element");
    return *i;
  }

  bool contains(const std::string& label) const { return find(label).has_value(); }

  friend bool operator==(const FinObj&, const FinObj&) = default;

 private:
  std::vector<std::string> elements_;
};

/// Label of the pair (a, b) in products and pullbacks.
inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

/// The one-element set {*}.
inline FinObj terminal_set() { return FinObj{"*"}; }

/// A total function between finite sets, stored as a table of codomain indices.
class FinMap {
 public:
  using object_type = FinObj;

  FinMap() = default;

  FinMap(FinObj dom, FinObj cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) throw InvalidObject("map table does not cover the domain");
    for (auto t : table_) {
      if (t >= cod_.size()) throw InvalidObject("map image outside the codomain");
    }
  }

  FinMap(FinObj dom, FinObj cod, const std::map<std::string, std::string>& assignment)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    if (assignment.size() != dom_.size()) throw InvalidObject("map table does not cover the domain");
    table_.resize(dom_.size());
    for (const auto& [from, to] : assignment) {
      const auto i = dom_.find(from);
      if (!i) throw InvalidObject("map assigns '" + from + "' which is not in the domain");
      const auto j = cod_.find(to);
      if (!j) throw InvalidObject("map image '" + to + "' is not in the codomain");
      table_[*i] = *j;
    }
  }

  const FinObj& dom() const { return dom_; }
  const FinObj& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }

  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::string& operator()(const std::string& label) const {
    return cod_[table_[dom_.index_of(label)]];
  }

  std::map<std::string, std::string> assignment() const {
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < dom_.size(); ++i) out.emplace(dom_[i], cod_[table_[i]]);
    return out;
  }

  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  FinObj dom_;
  FinObj cod_;
  std::vector<std::size_t> table_;
};

inline FinMap identity(const FinObj& x) {
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FinMap(x, x, std::move(t));
}

/// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) throw CompositionError("cannot compose: codomain of f differs from domain of g");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

inline FinMap to_terminal(const FinObj& x) {
  return FinMap(x, terminal_set(), std::vector<std::size_t>(x.size(), 0));
}

/// Inclusion of a subset (given as labels of x).
inline FinMap subset_inclusion(const FinObj& subset, const FinObj& x) {
  std::vector<std::size_t> t(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) t[i] = x.index_of(subset[i]);
  return FinMap(subset, x, std::move(t));
}

inline bool is_injective(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (auto t : f.table()) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

inline bool is_surjective(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (auto t : f.table()) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

/// Labels of f's image, as a subset of f.cod().
inline FinObj image_set(const FinMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (auto t : f.table()) hit[t] = true;
  std::vector<std::string> out;
  for (std::size_t j = 0; j < hit.size(); ++j) {
    if (hit[j]) out.push_back(f.cod()[j]);
  }
  return FinObj(std::move(out));
}

}  // namespace behave
