#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "behave/circuit.hpp"
#include "behave/matrix.hpp"
#include "oracle.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(BEHAVE_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline behave::Circuit circuit(const std::string& name) { return behave::parse_netlist(slurp(name)); }
inline behave::GlueSpec glue_spec(const std::string& name) { return behave::parse_glue(slurp(name)); }

/// Entries must be integers.
inline oracle::IntMatrix to_ints(const behave::Matrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = boost::multiprecision::numerator(m(i, j));
  return out;
}

/// Clears denominators row by row so the oracle can take the rank.
inline oracle::IntMatrix scaled_ints(const behave::Matrix& m) {
  oracle::IntMatrix out(m.rows(), std::vector<oracle::Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    oracle::Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
    }
  }
  return out;
}

}  // namespace support
