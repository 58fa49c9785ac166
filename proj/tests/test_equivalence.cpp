#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pax;
using namespace paxtest;

namespace {

Matrix negated(const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = -m.at(i, j);
  return out;
}

}  // namespace

TEST_CASE("psi matrices invert by negating the witness") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + i % 3, m = 1 + (i / 3) % 3;
      const Matrix r = random_matrix(rng, f, m, n);
      const Matrix prod = psi_of(r, n).mul(psi_of(negated(r), n));
      REQUIRE(prod == Matrix::identity(f, n + m));
    }
  }
  REQUIRE_THROWS_AS(psi_of(Matrix(Field::prime(2), 1, 2), 1), ShapeError);
}

TEST_CASE("a witness realizes an isomorphism of crossed products") {
  const Field f2 = Field::prime(2);
  for (const PoissonAlgebra& base : {k0(f2), k1(f2)}) {
    const auto valid = collect_valid(base, 1);
    for (const PreCrossedDatum& a : valid)
      for (const PreCrossedDatum& b : valid)
        for (const Vec& rv : enumerate_vectors(f2, 1)) {
          Matrix r(f2, 1, 1);
          r.at(0, 0) = rv[0];
          if (!is_witness(r, a, b)) continue;
          const AxiomReport rep =
              check_poisson_morphism(psi_of(r, 1), crossed_product(a), crossed_product(b));
          REQUIRE(rep.passed);
        }
  }
}

TEST_CASE("witnesses compose additively") {
  const Field f2 = Field::prime(2);
  for (const PoissonAlgebra& base : {k0(f2), k1(f2)}) {
    const auto valid = collect_valid(base, 1);
    for (const PreCrossedDatum& a : valid)
      for (const PreCrossedDatum& b : valid)
        for (const PreCrossedDatum& c : valid) {
          const auto w1 = exhaustive_witness(a, b);
          const auto w2 = exhaustive_witness(b, c);
          if (!w1 || !w2) continue;
          REQUIRE(is_witness(w1->add(*w2), a, c));
        }
  }
}

TEST_CASE("coboundary data are valid and cohomologous to the trivial system") {
  std::mt19937_64 rng(13);
  const Field f3 = Field::prime(3);
  for (const PoissonAlgebra& base : {k0(f3), k1(f3), k11_2(f3), heisenberg(f3)}) {
    for (const PoissonAlgebra& v : {k0(f3), k1(f3)}) {
      const Matrix r = random_matrix(rng, f3, v.dim, base.dim);
      const PreCrossedDatum d = coboundary_datum(base, v, r);
      REQUIRE(check_crossed_system(d).passed);
      const Decision dec = is_coboundary(d);
      REQUIRE(dec.verdict == Verdict::Cohomologous);
      REQUIRE(is_witness(*dec.witness, d, PreCrossedDatum::trivial(base, v)));
    }
  }
}

TEST_CASE("a cocycle difference of theta is absorbed by a linear witness") {
  const Field q = Field::rationals();
  const PoissonAlgebra p = k1(q);
  PreCrossedDatum d = PreCrossedDatum::make_zero(p, 1);
  d.theta.at(0, 0, 0) = Scalar::of(q, 5);
  const PreCrossedDatum t = PreCrossedDatum::make_zero(p, 1);

  const Decision dec = find_witness(d, t);
  REQUIRE(dec.verdict == Verdict::Cohomologous);
  REQUIRE(dec.witness->at(0, 0) == Scalar::of(q, -5));
  REQUIRE(is_witness(*dec.witness, d, t));
}

TEST_CASE("the decision ladder distinguishes structural differences") {
  const Field f2 = Field::prime(2);
  const PoissonAlgebra p = k0(f2);

  PreCrossedDatum unital_fiber = PreCrossedDatum::trivial(p, k1(f2));
  const PreCrossedDatum zero_fiber = PreCrossedDatum::trivial(p, k0(f2));
  REQUIRE(find_witness(unital_fiber, zero_fiber).verdict == Verdict::NotCohomologous);

  PreCrossedDatum acts = PreCrossedDatum::make_zero(p, 1);
  acts.act_lie.at(0, 0, 0) = Scalar::of(f2, 1);
  REQUIRE(find_witness(acts, PreCrossedDatum::make_zero(p, 1)).verdict ==
          Verdict::NotCohomologous);

  REQUIRE_THROWS_AS(find_witness(PreCrossedDatum::make_zero(p, 1), PreCrossedDatum::make_zero(p, 2)),
                    PreconditionError);
}

TEST_CASE("non-abelian fibers are decided by exhaustion over finite fields") {
  const Field f3 = Field::prime(3);
  Matrix r(f3, 1, 1);
  r.at(0, 0) = Scalar::of(f3, 2);
  const PreCrossedDatum d = coboundary_datum(k0(f3), k1(f3), r);
  const PreCrossedDatum t = PreCrossedDatum::trivial(k0(f3), k1(f3));

  const Decision dec = find_witness(d, t);
  REQUIRE(dec.verdict == Verdict::Cohomologous);
  REQUIRE(is_witness(*dec.witness, d, t));
}

TEST_CASE("non-abelian fibers over the rationals are undecidable") {
  const Field q = Field::rationals();
  Matrix r(q, 1, 1);
  r.at(0, 0) = Scalar::of(q, 1);
  const PreCrossedDatum d = coboundary_datum(k0(q), k1(q), r);
  const Decision dec = find_witness(d, PreCrossedDatum::trivial(k0(q), k1(q)));
  REQUIRE(dec.verdict == Verdict::Undecidable);
}

TEST_CASE("the linear decider agrees with exhaustive search on all small data") {
  const Field f2 = Field::prime(2);
  const auto valid_k0 = collect_valid(k0(f2), 1);
  const auto valid_k1 = collect_valid(k1(f2), 1);
  REQUIRE(valid_k0.size() == 5);
  REQUIRE(valid_k1.size() == 10);

  for (const auto* valid : {&valid_k0, &valid_k1}) {
    for (const PreCrossedDatum& a : *valid)
      for (const PreCrossedDatum& b : *valid) {
        const auto brute = exhaustive_witness(a, b);
        const Decision dec = find_witness(a, b);
        REQUIRE(dec.verdict != Verdict::Undecidable);
        REQUIRE((dec.verdict == Verdict::Cohomologous) == brute.has_value());
        if (brute) {
          REQUIRE(is_witness(*brute, a, b));
          REQUIRE(is_witness(*dec.witness, a, b));
        }
      }
  }
}

TEST_CASE("quotienting is order-independent and keyed deterministically") {
  const Field f2 = Field::prime(2);
  auto valid = collect_valid(k0(f2), 1);
  const ClassificationResult fwd = raw_classify(valid);
  std::reverse(valid.begin(), valid.end());
  const ClassificationResult rev = raw_classify(valid);

  REQUIRE(fwd.classes.size() == 4);
  REQUIRE(fwd.candidates == 5);
  REQUIRE(fwd.classes.size() == rev.classes.size());
  for (std::size_t i = 0; i < fwd.classes.size(); ++i) {
    REQUIRE(fwd.classes[i].rep == rev.classes[i].rep);
    REQUIRE(fwd.classes[i].family == rev.classes[i].family);
    REQUIRE(fwd.classes[i].size == rev.classes[i].size);
  }
}

TEST_CASE("an undecidable pair aborts the quotient") {
  const Field f2 = Field::prime(2);
  const std::vector<PreCrossedDatum> data = {PreCrossedDatum::make_zero(k0(f2), 1),
                                             PreCrossedDatum::make_zero(k1(f2), 1)};
  REQUIRE_THROWS_AS(
      quotient_classes(data,
                       [](const PreCrossedDatum&, const PreCrossedDatum&) {
                         return Decision::unknown("declined");
                       }),
      UndecidableError);
}
