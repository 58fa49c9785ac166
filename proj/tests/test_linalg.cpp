#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "pax/errors.hpp"
#include "pax/linalg.hpp"

using namespace pax;

namespace {

Matrix m_of(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, rows[i][j]);
  return m;
}

Vec v_of(const Field& f, const std::vector<long long>& entries) {
  Vec v;
  for (long long e : entries) v.push_back(Scalar::of(f, e));
  return v;
}

}  // namespace

TEST_CASE("solve_linear agrees with the exhaustive F2 oracle") {
  const Field f2 = Field::prime(2);
  const Matrix a = m_of(f2, {{1, 1}});
  const Vec b = v_of(f2, {1});

  // Oracle: test every vector of F2^2.
  std::vector<Vec> sols;
  for (const Vec& v : enumerate_vectors(f2, 2))
    if (a.apply(v) == b) sols.push_back(v);
  REQUIRE(sols.size() == 2);
  REQUIRE(sols[0] == v_of(f2, {0, 1}));
  REQUIRE(sols[1] == v_of(f2, {1, 0}));

  const SolutionSet s = solve_linear(a, b);
  REQUIRE(s.solvable);
  REQUIRE(a.apply(s.particular) == b);
  REQUIRE(s.particular == v_of(f2, {1, 0}));
  REQUIRE(s.nullspace.size() == 1);
  REQUIRE(s.nullspace[0] == v_of(f2, {1, 1}));
  REQUIRE(std::find(sols.begin(), sols.end(), add(s.particular, s.nullspace[0])) != sols.end());
}

TEST_CASE("solve_linear over the rationals") {
  const Field q = Field::rationals();
  const SolutionSet s = solve_linear(m_of(q, {{2}}), v_of(q, {1}));
  REQUIRE(s.solvable);
  REQUIRE(s.particular[0].str() == "1/2");
  REQUIRE(s.nullspace.empty());

  const SolutionSet bad = solve_linear(m_of(q, {{1}, {1}}), v_of(q, {1, 0}));
  REQUIRE(!bad.solvable);
}

TEST_CASE("rank and row_space_basis produce reduced rows") {
  const Field f2 = Field::prime(2);
  const std::vector<Vec> rows = {v_of(f2, {1, 1, 0}), v_of(f2, {0, 1, 1}), v_of(f2, {1, 0, 1})};
  REQUIRE(rank(Matrix::from_rows(f2, rows, 3)) == 2);
  const std::vector<Vec> basis = row_space_basis(f2, rows, 3);
  REQUIRE(basis.size() == 2);
  REQUIRE(basis[0] == v_of(f2, {1, 0, 1}));
  REQUIRE(basis[1] == v_of(f2, {0, 1, 1}));
  // A basis is its own row space.
  REQUIRE(row_space_basis(f2, basis, 3) == basis);
}

TEST_CASE("nullspace_basis picks one vector per free column") {
  const Field q = Field::rationals();
  const std::vector<Vec> ns = nullspace_basis(m_of(q, {{1, 2}, {2, 4}}));
  REQUIRE(ns.size() == 1);
  REQUIRE(ns[0] == v_of(q, {-2, 1}));

  REQUIRE(nullspace_basis(m_of(q, {{1, 0}, {0, 1}})).empty());
}

TEST_CASE("right_inverse exists exactly for surjective maps") {
  const Field f3 = Field::prime(3);
  const Matrix pr = m_of(f3, {{1, 0, 0}, {0, 1, 0}});
  const auto r = right_inverse(pr);
  REQUIRE(r.has_value());
  REQUIRE(pr.mul(*r) == Matrix::identity(f3, 2));
  // Free coordinates of each solve are zeroed, so the canonical section is [I; 0].
  REQUIRE(*r == m_of(f3, {{1, 0}, {0, 1}, {0, 0}}));

  REQUIRE(!right_inverse(m_of(f3, {{1, 1}, {2, 2}})).has_value());

  const Matrix wide = m_of(f3, {{1, 2, 0}, {0, 1, 2}});
  const auto rw = right_inverse(wide);
  REQUIRE(rw.has_value());
  REQUIRE(wide.mul(*rw) == Matrix::identity(f3, 2));
}

TEST_CASE("matrix operations") {
  const Field q = Field::rationals();
  const Matrix a = m_of(q, {{1, 2}, {3, 4}});
  REQUIRE(a.mul(Matrix::identity(q, 2)) == a);
  REQUIRE(a.transpose().transpose() == a);
  REQUIRE(a.mul(m_of(q, {{0, 1}, {1, 0}})) == m_of(q, {{2, 1}, {4, 3}}));
  REQUIRE(a.apply(v_of(q, {1, 1})) == v_of(q, {3, 7}));
  REQUIRE(add(v_of(q, {1, 2}), scale(Scalar::of(q, 2), v_of(q, {1, 1}))) == v_of(q, {3, 4}));
  REQUIRE_THROWS_AS(a.mul(m_of(q, {{1, 2, 3}})), ShapeError);
  REQUIRE_THROWS_AS(a.apply(v_of(q, {1})), ShapeError);
}

TEST_CASE("vector enumeration order is lexicographic with the last coordinate fastest") {
  const Field f2 = Field::prime(2);
  const std::vector<Vec> all = enumerate_vectors(f2, 2);
  REQUIRE(all.size() == 4);
  REQUIRE(all[0] == v_of(f2, {0, 0}));
  REQUIRE(all[1] == v_of(f2, {0, 1}));
  REQUIRE(all[2] == v_of(f2, {1, 0}));
  REQUIRE(all[3] == v_of(f2, {1, 1}));

  const Field f3 = Field::prime(3);
  VectorEnumerator en(f3, 2);
  REQUIRE(*en.next() == v_of(f3, {0, 0}));
  REQUIRE(*en.next() == v_of(f3, {0, 1}));
  REQUIRE(*en.next() == v_of(f3, {0, 2}));
  REQUIRE(*en.next() == v_of(f3, {1, 0}));

  VectorEnumerator empty(f3, 0);
  const auto only = empty.next();
  REQUIRE(only.has_value());
  REQUIRE(only->empty());
  REQUIRE(!empty.next().has_value());

  REQUIRE_THROWS_AS(VectorEnumerator(Field::rationals(), 1), InfiniteFieldError);
}
