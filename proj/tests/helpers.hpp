// Shared fixtures, deterministic random generators, and the raw exhaustive
// pipelines the staged code is cross-checked against.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/coflag.hpp"
#include "pax/crossed.hpp"
#include "pax/equivalence.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace paxtest {

using namespace pax;

// One-dimensional algebras: k0 has zero structure, k1 is spanned by an
// idempotent with zero bracket.
inline PoissonAlgebra k0(const Field& f) { return PoissonAlgebra::zero(f, 1); }

inline PoissonAlgebra k1(const Field& f) {
  PoissonAlgebra p = PoissonAlgebra::zero(f, 1);
  p.mul.at(0, 0, 0) = Scalar::of(f, 1);
  return p;
}

// Heisenberg: h1 h1 = h3, {h1, h2} = h3 = -{h2, h1}.
inline PoissonAlgebra heisenberg(const Field& f) {
  PoissonAlgebra p = PoissonAlgebra::zero(f, 3);
  p.names = {"h1", "h2", "h3"};
  const Scalar one = Scalar::of(f, 1);
  p.mul.at(0, 0, 2) = one;
  p.bracket.at(0, 1, 2) = one;
  p.bracket.at(1, 0, 2) = Scalar::of(f, -1);
  return p;
}

// e1 e1 = e1, e1 e2 = e2, {e1, e2} = e2: the unital 2-dim co-flag algebra
// over k1 with lambda = gamma = 1, Lambda = 0.
inline PoissonAlgebra k11_2(const Field& f) {
  PoissonAlgebra p = PoissonAlgebra::zero(f, 2);
  const Scalar one = Scalar::of(f, 1);
  p.mul.at(0, 0, 0) = one;
  p.mul.at(0, 1, 1) = one;
  p.bracket.at(0, 1, 1) = one;
  p.bracket.at(1, 0, 1) = Scalar::of(f, -1);
  return p;
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  if (f.is_finite()) {
    std::uniform_int_distribution<long long> d(0, f.modulus() - 1);
    return Scalar::of(f, d(rng));
  }
  std::uniform_int_distribution<long long> num(-4, 4), den(1, 3);
  return Scalar::of(f, num(rng)) / Scalar::of(f, den(rng));
}

inline void fill_random(BilinearTable& t, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < t.d1(); ++i)
    for (std::size_t j = 0; j < t.d2(); ++j)
      for (std::size_t k = 0; k < t.dout(); ++k) t.at(i, j, k) = random_scalar(rng, t.field());
}

inline PoissonAlgebra random_algebra(std::mt19937_64& rng, const Field& f, std::size_t dim) {
  PoissonAlgebra p = PoissonAlgebra::zero(f, dim);
  fill_random(p.mul, rng);
  fill_random(p.bracket, rng);
  return p;
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows,
                            std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, f);
  return m;
}

inline PreCrossedDatum random_datum(std::mt19937_64& rng, const PoissonAlgebra& base,
                                    std::size_t dim_v) {
  PreCrossedDatum d = PreCrossedDatum::make_zero(base, dim_v);
  for (BilinearTable* t :
       {&d.act_l, &d.act_r, &d.act_lie, &d.theta, &d.eff, &d.v_mul, &d.v_bracket})
    fill_random(*t, rng);
  return d;
}

// Every pre-crossed datum over the base, visited in lexicographic order of
// the concatenated table flattening (act_l, act_r, act_lie, theta, eff,
// v_mul, v_bracket).  Finite fields only.
template <typename Fn>
inline void for_all_data(const PoissonAlgebra& base, std::size_t dim_v, Fn&& fn) {
  PreCrossedDatum d = PreCrossedDatum::make_zero(base, dim_v);
  const std::initializer_list<BilinearTable*> tabs{
      &d.act_l, &d.act_r, &d.act_lie, &d.theta, &d.eff, &d.v_mul, &d.v_bracket};
  std::size_t total = 0;
  for (BilinearTable* t : tabs) total += t->flat().size();
  VectorEnumerator en(base.field, total);
  while (auto v = en.next()) {
    std::size_t pos = 0;
    for (BilinearTable* t : tabs)
      for (std::size_t i = 0; i < t->d1(); ++i)
        for (std::size_t j = 0; j < t->d2(); ++j)
          for (std::size_t k = 0; k < t->dout(); ++k) t->at(i, j, k) = (*v)[pos++];
    fn(std::as_const(d));
  }
}

inline std::vector<PreCrossedDatum> collect_valid(const PoissonAlgebra& base,
                                                  std::size_t dim_v) {
  std::vector<PreCrossedDatum> out;
  for_all_data(base, dim_v, [&](const PreCrossedDatum& d) {
    if (check_crossed_system(d).passed) out.push_back(d);
  });
  return out;
}

// Definitional decider: try every candidate witness.  Grounds the staged
// linear-solve deciders.
inline std::optional<Matrix> exhaustive_witness(const PreCrossedDatum& a,
                                                const PreCrossedDatum& b) {
  const Field& f = a.P.field;
  const std::size_t n = a.P.dim, m = a.dim_v;
  VectorEnumerator en(f, n * m);
  while (auto v = en.next()) {
    Matrix r(f, m, n);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t c = 0; c < n; ++c) r.at(x, c) = (*v)[x * n + c];
    if (is_witness(r, a, b)) return r;
  }
  return std::nullopt;
}

// Quotient of raw valid data by exhaustive witness search; family tags as in
// the staged pipeline so class lists are directly comparable.
inline ClassificationResult raw_classify(const std::vector<PreCrossedDatum>& valid) {
  return quotient_classes(
      valid,
      [](const PreCrossedDatum& a, const PreCrossedDatum& b) {
        auto w = exhaustive_witness(a, b);
        return w ? Decision::yes(std::move(*w)) : Decision::no("witness space exhausted");
      },
      coflag_family_tag);
}

}  // namespace paxtest
