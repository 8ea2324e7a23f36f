#pragma once

// Exhaustive enumeration over small finite sets. Exponential by nature; callers
// keep objects tiny.

#include <cstddef>
#include <string>
#include <vector>

#include "behave/errors.hpp"
#include "behave/finset.hpp"

namespace behave {

/// Every function X -> Y, in lexicographic order of tables.
inline std::vector<FinMap> all_maps(const FinObj& x, const FinObj& y, std::size_t limit = 1u << 20) {
  std::vector<FinMap> out;
  if (y.empty()) {
    if (x.empty()) out.emplace_back(x, y, std::vector<std::size_t>{});
    return out;
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    count *= y.size();
    if (count > limit) throw SizeBoundExceeded("too many maps to enumerate");
  }
  out.reserve(count);
  std::vector<std::size_t> table(x.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    out.emplace_back(x, y, table);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (++table[i] < y.size()) break;
      table[i] = 0;
    }
  }
  return out;
}

/// Every subset of X, as sub-FinObjs.
inline std::vector<FinObj> all_subsets(const FinObj& x) {
  if (x.size() > 16) throw SizeBoundExceeded("too many subsets to enumerate");
  std::vector<FinObj> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << x.size()); ++mask) {
    std::vector<std::string> items;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (mask & (std::size_t{1} << i)) items.push_back(x[i]);
    }
    out.emplace_back(std::move(items));
  }
  return out;
}

/// {"0", ..., "n-1"}
inline FinObj numbered_set(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> items;
  for (std::size_t i = 0; i < n; ++i) items.push_back(prefix + std::to_string(i));
  return FinObj(std::move(items));
}

}  // namespace behave
