#include <catch_amalgamated.hpp>

#include "behave/matrix.hpp"
#include "behave/rational.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace behave;

TEST_CASE("rationals print as p/q and parse back", "[rational]") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational(to_string(Rational(22, 7))) == Rational(22, 7));
}

TEST_CASE("decimal and malformed rationals are rejected", "[rational]") {
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidObject);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidObject);
  CHECK_THROWS_AS(parse_rational(""), InvalidObject);
  CHECK_THROWS_AS(parse_rational("x"), InvalidObject);
  CHECK_THROWS_AS(parse_rational("1e3"), InvalidObject);
}

TEST_CASE("matrix product and shape errors", "[matrix]") {
  Matrix g{{1, 1}};
  Matrix f{{1, 0}, {0, 2}};
  CHECK(g * f == Matrix{{1, 2}});
  CHECK_THROWS_AS(f * g, CompositionError);
  CHECK(Matrix::identity(2) * f == f);
  CHECK(f - f == Matrix(2, 2));
  CHECK(hstack(f, g.transpose()).cols() == 3);
  CHECK(vstack(f, g).rows() == 3);
}

TEST_CASE("rref rank agrees with the Bareiss oracle", "[matrix]") {
  const Matrix samples[] = {
      Matrix{{1, 2}, {2, 4}},
      Matrix{{1, 0, -1}, {0, 1, 1}, {1, 1, 0}},
      Matrix{{0, 0}, {0, 0}},
      Matrix{{2, 4, 6, 8}, {1, 3, 5, 7}, {0, 1, 2, 3}},
      Matrix{{1, -1, 0, 0, -1, 0}, {0, 1, 0, -1, 0, 0}},
  };
  for (const auto& m : samples) CHECK(rank(m) == oracle::rank(support::to_ints(m)));
}

TEST_CASE("rref multiplies back: rows of the reduced form span the same space", "[matrix]") {
  const Matrix m{{2, 4, 6}, {1, 3, 5}, {3, 7, 11}};
  const auto e = rref(m);
  // each original row is a combination of the reduced rows
  const Matrix basis = row_space_basis(m);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Matrix row(1, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row(0, j) = m(i, j);
    CHECK(solve(basis.transpose(), row.transpose()).has_value());
  }
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("nullspace columns are killed and have the right count", "[matrix]") {
  const Matrix m{{1, 0, -1}};
  const Matrix n = nullspace(m);
  CHECK(n.cols() == 2);
  CHECK((m * n).is_zero());
  const Matrix full{{1, 2}, {3, 4}};
  CHECK(nullspace(full).cols() == 0);
}

TEST_CASE("solve finds a solution or reports none", "[matrix]") {
  const Matrix a{{1, 1}, {1, -1}};
  const auto x = solve(a, Matrix{{2}, {0}});
  REQUIRE(x.has_value());
  CHECK(*x == Matrix{{1}, {1}});
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}).has_value());
}

TEST_CASE("exactness: thirds sum to one", "[matrix]") {
  Matrix m{{Rational(1, 3), Rational(1, 3), Rational(1, 3)}};
  const auto ones = Matrix{{1}, {1}, {1}};
  CHECK((m * ones)(0, 0) == 1);
}
