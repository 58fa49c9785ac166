#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "helpers.hpp"
#include "pax/metabelian.hpp"

using namespace pax;
using namespace paxtest;

namespace {

// All systems with one-dimensional base and fiber: five scalar slots.
template <typename Fn>
void for_all_11(const Field& f, Fn&& fn) {
  for (const Vec& v : enumerate_vectors(f, 5)) {
    MetabelianSystem s = MetabelianSystem::zero(f, 1, 1);
    s.act_l.at(0, 0, 0) = v[0];
    s.act_r.at(0, 0, 0) = v[1];
    s.act_lie.at(0, 0, 0) = v[2];
    s.theta.at(0, 0, 0) = v[3];
    s.eff.at(0, 0, 0) = v[4];
    fn(std::as_const(s));
  }
}

template <typename Fn>
void for_all_cmatrix(const Field& f, std::size_t n, Fn&& fn) {
  const std::size_t nn = n * n;
  for (const Vec& v : enumerate_vectors(f, 3 * nn + n)) {
    CMatrixDatum c{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n), zero_vec(f, n)};
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.a.at(i, j) = v[t++];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.b.at(i, j) = v[t++];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.c.at(i, j) = v[t++];
    for (std::size_t i = 0; i < n; ++i) c.theta0[i] = v[t++];
    fn(std::as_const(c));
  }
}

CMatrixDatum nilpotent_pair(const Field& f) {
  CMatrixDatum c{Matrix(f, 2, 2), Matrix(f, 2, 2), Matrix(f, 2, 2), zero_vec(f, 2)};
  c.a.at(0, 1) = Scalar::of(f, 1);
  c.b.at(0, 1) = Scalar::of(f, 1);
  c.theta0[0] = Scalar::of(f, 1);
  return c;
}

}  // namespace

TEST_CASE("system validity matches the lifted crossed check, exhaustively") {
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for_all_11(f, [](const MetabelianSystem& s) {
      const AxiomReport fast = check_metabelian_system(s);
      const AxiomReport full = check_crossed_system(lift_metabelian(s));
      REQUIRE(fast.passed == full.passed);
    });
  }
}

TEST_CASE("valid systems over a point have zero actions and orthogonal cochains") {
  for (long long pr : {2, 3, 5}) {
    const Field f = Field::prime(pr);
    std::size_t count = 0;
    for_all_11(f, [&](const MetabelianSystem& s) {
      if (!check_metabelian_system(s).passed) return;
      ++count;
      REQUIRE(s.act_l.is_zero());
      REQUIRE(s.act_r.is_zero());
      REQUIRE(s.eff.is_zero());
      REQUIRE((s.act_lie.at(0, 0, 0) * s.theta.at(0, 0, 0)).is_zero());
    });
    REQUIRE(count == static_cast<std::size_t>(2 * pr - 1));
  }
}

TEST_CASE("matrix data validity matches the lifted system check") {
  const Field f2 = Field::prime(2);
  for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
    for_all_cmatrix(f2, n, [](const CMatrixDatum& c) {
      REQUIRE(check_cmatrix(c).passed == check_metabelian_system(lift_cmatrix(c)).passed);
    });
  }
  const Field f3 = Field::prime(3);
  for_all_cmatrix(f3, 1, [](const CMatrixDatum& c) {
    REQUIRE(check_cmatrix(c).passed == check_metabelian_system(lift_cmatrix(c)).passed);
  });
}

TEST_CASE("shape errors are reported before axioms") {
  const Field f2 = Field::prime(2);
  MetabelianSystem s = MetabelianSystem::zero(f2, 1, 2);
  s.theta = BilinearTable(f2, 1, 1, 1);
  REQUIRE_THROWS_AS(check_metabelian_system(s), ShapeError);

  CMatrixDatum c{Matrix(f2, 2, 2), Matrix(f2, 2, 1), Matrix(f2, 2, 2), zero_vec(f2, 2)};
  REQUIRE_THROWS_AS(check_cmatrix(c), ShapeError);
}

TEST_CASE("the matrix-pair decider matches the general one on lifts") {
  const Field f3 = Field::prime(3);
  const CMatrixDatum c = nilpotent_pair(f3);
  CMatrixDatum t = nilpotent_pair(f3);
  t.theta0 = zero_vec(f3, 2);
  REQUIRE(check_cmatrix(c).passed);
  REQUIRE(check_cmatrix(t).passed);

  const auto w = equiv_cmatrix(c, t);
  REQUIRE(w.has_value());
  REQUIRE((*w)[1] == Scalar::of(f3, 2));  // (A + B) r = theta0 difference

  // The same witness works on the crossed lifts.
  Matrix r(f3, 2, 1);
  r.at(0, 0) = (*w)[0];
  r.at(1, 0) = (*w)[1];
  REQUIRE(is_witness(r, lift_metabelian(lift_cmatrix(c)), lift_metabelian(lift_cmatrix(t))));

  // Over F2 the same pair admits no witness: A + B = 0 there.
  const Field f2 = Field::prime(2);
  REQUIRE(!equiv_cmatrix(nilpotent_pair(f2), [&] {
            CMatrixDatum z = nilpotent_pair(f2);
            z.theta0 = zero_vec(f2, 2);
            return z;
          }()).has_value());
}

TEST_CASE("all deciders agree on exhaustively enumerated valid pairs") {
  const Field f2 = Field::prime(2);
  std::vector<CMatrixDatum> valid;
  for_all_cmatrix(f2, 2, [&](const CMatrixDatum& c) {
    if (check_cmatrix(c).passed) valid.push_back(c);
  });
  REQUIRE(valid.size() >= 3);

  // Stride-sample the pair set to keep the quadratic scan small.
  const std::size_t stride = valid.size() > 60 ? valid.size() / 60 : 1;
  for (std::size_t i = 0; i < valid.size(); i += stride)
    for (std::size_t j = 0; j < valid.size(); j += stride) {
      const MetabelianSystem si = lift_cmatrix(valid[i]), sj = lift_cmatrix(valid[j]);
      const auto wc = equiv_cmatrix(valid[i], valid[j]);
      const auto wm = equiv_metabelian(si, sj);
      const Decision dec = find_witness(lift_metabelian(si), lift_metabelian(sj));
      REQUIRE(wc.has_value() == wm.has_value());
      REQUIRE(wc.has_value() == (dec.verdict == Verdict::Cohomologous));
      if (wm)
        REQUIRE(is_witness(*wm, lift_metabelian(si), lift_metabelian(sj)));
    }
}

TEST_CASE("the ABC builder produces the lifted crossed product up to reordering") {
  const Field f3 = Field::prime(3);
  const CMatrixDatum c = nilpotent_pair(f3);
  const PoissonAlgebra built = build_kn1_ABC(c);
  REQUIRE(verify_poisson(built).passed);
  REQUIRE(is_metabelian(built).has_value());

  // Spot entries: E3 * E1 = A e1 = e2, E1 * E3 = B e1 = e2, E3^2 = theta0.
  REQUIRE(built.mul.at(2, 0, 1) == Scalar::of(f3, 1));
  REQUIRE(built.mul.at(0, 2, 1) == Scalar::of(f3, 1));
  REQUIRE(built.mul.at(2, 2, 0) == Scalar::of(f3, 1));

  // Reordering the basis (fiber first vs base first) is a Poisson isomorphism.
  const PoissonAlgebra crossed = crossed_product(lift_metabelian(lift_cmatrix(c)));
  Matrix perm(f3, 3, 3);
  perm.at(2, 0) = Scalar::of(f3, 1);  // base generator moves to the top slot
  perm.at(0, 1) = Scalar::of(f3, 1);
  perm.at(1, 2) = Scalar::of(f3, 1);
  REQUIRE(check_poisson_morphism(perm, crossed, built).passed);
  REQUIRE(check_poisson_morphism(perm.transpose(), built, crossed).passed);

  CMatrixDatum bad = nilpotent_pair(f3);
  bad.a.at(0, 0) = Scalar::of(f3, 1);  // A^2 != 0
  REQUIRE_THROWS_AS(build_kn1_ABC(bad), InvalidCMatrixError);
}

TEST_CASE("the theta/f builder covers the abelian-action families") {
  const Field f3 = Field::prime(3);
  Matrix theta(f3, 2, 2), f(f3, 2, 2);
  theta.at(0, 0) = Scalar::of(f3, 1);
  theta.at(0, 1) = Scalar::of(f3, 2);
  theta.at(1, 1) = Scalar::of(f3, 1);
  f.at(0, 1) = Scalar::of(f3, 1);
  f.at(1, 0) = Scalar::of(f3, 2);

  const PoissonAlgebra e = build_kn1_theta_f(theta, f);
  REQUIRE(verify_poisson(e).passed);
  REQUIRE(is_metabelian(e).has_value());
  REQUIRE(e.mul.at(0, 1, 2) == Scalar::of(f3, 2));
  REQUIRE(e.bracket.at(0, 1, 2) == Scalar::of(f3, 1));

  Matrix skew = f;
  skew.at(1, 0) = Scalar::of(f3, 1);
  REQUIRE_THROWS_AS(build_kn1_theta_f(theta, skew), PreconditionError);
  REQUIRE_THROWS_AS(build_kn1_theta_f(theta, Matrix(f3, 3, 3)), ShapeError);
}

TEST_CASE("the gamma/f builder guards its cyclic identity") {
  const Field f3 = Field::prime(3);
  Vec gamma = zero_vec(f3, 2);
  gamma[0] = Scalar::of(f3, 1);
  Matrix f(f3, 2, 2);
  f.at(0, 1) = Scalar::of(f3, 1);
  f.at(1, 0) = Scalar::of(f3, 2);

  const PoissonAlgebra e = build_kn1_gamma_f(gamma, f);
  REQUIRE(verify_poisson(e).passed);
  REQUIRE(is_metabelian(e).has_value());
  REQUIRE(e.bracket.at(0, 1, 2) == Scalar::of(f3, 1));
  REQUIRE(e.bracket.at(0, 2, 2) == Scalar::of(f3, 1));
  REQUIRE(e.bracket.at(2, 0, 2) == Scalar::of(f3, 2));

  REQUIRE_THROWS_AS(build_kn1_gamma_f(zero_vec(f3, 2), Matrix(f3, 2, 2)), PreconditionError);

  Vec g3 = zero_vec(f3, 3);
  g3[0] = Scalar::of(f3, 1);
  Matrix f3x(f3, 3, 3);
  f3x.at(1, 2) = Scalar::of(f3, 1);
  f3x.at(2, 1) = Scalar::of(f3, 2);
  REQUIRE_THROWS_AS(build_kn1_gamma_f(g3, f3x), PreconditionError);
}

TEST_CASE("the derived-subspace test recognizes metabelian algebras") {
  const Field f3 = Field::prime(3);
  const auto h = is_metabelian(heisenberg(f3));
  REQUIRE(h.has_value());
  REQUIRE(h->rows() == 1);
  REQUIRE(h->at(0, 2) == Scalar::of(f3, 1));

  const auto none = is_metabelian(k0(f3));
  REQUIRE(none.has_value());
  REQUIRE(none->rows() == 0);

  REQUIRE(!is_metabelian(k1(f3)).has_value());
  REQUIRE(!is_metabelian(k11_2(f3)).has_value());

  PoissonAlgebra broken = PoissonAlgebra::zero(f3, 1);
  broken.bracket.at(0, 0, 0) = Scalar::of(f3, 1);
  REQUIRE_THROWS_AS(is_metabelian(broken), NotPoissonError);
}

TEST_CASE("classification of line-on-line systems") {
  const Field f2 = Field::prime(2);
  const ClassificationResult r2 = classify_metabelian(1, 1, f2);
  REQUIRE(r2.total() == 3);
  REQUIRE(r2.candidates == 3);

  // The three classes realize the zero algebra, the theta line and the
  // gamma line; match each expected system to exactly one representative.
  std::vector<MetabelianSystem> expected(3, MetabelianSystem::zero(f2, 1, 1));
  expected[1].theta.at(0, 0, 0) = Scalar::of(f2, 1);
  expected[2].act_lie.at(0, 0, 0) = Scalar::of(f2, 1);
  for (const MetabelianSystem& want : expected) {
    std::size_t hits = 0;
    for (const ClassEntry& cls : r2.classes)
      if (equiv_metabelian(read_metabelian(cls.rep), want).has_value()) ++hits;
    REQUIRE(hits == 1);
  }

  REQUIRE(classify_metabelian(1, 1, Field::prime(3)).total() == 5);
}

TEST_CASE("classification agrees with the independent matrix-pair pipeline") {
  const Field f2 = Field::prime(2);
  std::vector<CMatrixDatum> valid;
  for_all_cmatrix(f2, 2, [&](const CMatrixDatum& c) {
    if (check_cmatrix(c).passed) valid.push_back(c);
  });

  // Union-find over equiv_cmatrix.
  std::vector<std::size_t> parent(valid.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < valid.size(); ++i)
    for (std::size_t j = i + 1; j < valid.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (equiv_cmatrix(valid[i], valid[j]).has_value()) parent[find(j)] = find(i);
    }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < valid.size(); ++i)
    if (find(i) == i) ++roots;

  const ClassificationResult staged = classify_metabelian(1, 2, f2);
  REQUIRE(staged.candidates == valid.size());
  REQUIRE(staged.total() == roots);
}

TEST_CASE("classification guards its resource bounds") {
  REQUIRE_THROWS_AS(classify_metabelian(7, 1, Field::prime(2)), TooLargeError);
  REQUIRE_THROWS_AS(classify_metabelian(1, 2, Field::prime(5)), TooLargeError);
  REQUIRE_THROWS_AS(classify_metabelian(1, 1, Field::rationals()), InfiniteFieldError);
}
