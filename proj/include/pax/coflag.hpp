// Dimension-one fibers: co-flag data, their axioms, the bijection with
// crossed systems, the two specialized equivalence deciders, staged
// enumeration and classification over F_p, iterated towers, and the
// bracket-only analogue.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/crossed.hpp"
#include "pax/equivalence.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace pax {

// Describes an extension of P by the zero algebra on k: three covectors and
// two square grids of scalars.
struct AbelianCoflagDatum {
  Field field;
  std::size_t dim_p = 0;
  Vec lambda, Lambda, gamma;  // -> action, <- action, |> action
  Matrix theta, f;

  static AbelianCoflagDatum zero(const Field& fld, std::size_t n) {
    return {fld, n, zero_vec(fld, n), zero_vec(fld, n), zero_vec(fld, n), Matrix(fld, n, n),
            Matrix(fld, n, n)};
  }

  bool operator==(const AbelianCoflagDatum& o) const {
    return field == o.field && dim_p == o.dim_p && lambda == o.lambda && Lambda == o.Lambda &&
           gamma == o.gamma && theta == o.theta && f == o.f;
  }
};

// Describes an extension of P by the algebra k with x*x = u x, u nonzero.
// Both multiplicative actions come from lambda; the Lie cochain is the
// derived map -(1/u) lambda([p,q]).
struct NonabelianCoflagDatum {
  Field field;
  std::size_t dim_p = 0;
  Vec lambda;
  Matrix theta;
  Scalar u;

  bool operator==(const NonabelianCoflagDatum& o) const {
    return field == o.field && dim_p == o.dim_p && lambda == o.lambda && theta == o.theta &&
           u == o.u;
  }
};

using CoflagDatum = std::variant<AbelianCoflagDatum, NonabelianCoflagDatum>;

inline bool is_abelian(const CoflagDatum& c) {
  return std::holds_alternative<AbelianCoflagDatum>(c);
}
inline const Field& coflag_field(const CoflagDatum& c) {
  return std::visit([](const auto& x) -> const Field& { return x.field; }, c);
}
inline std::size_t coflag_dim(const CoflagDatum& c) {
  return std::visit([](const auto& x) { return x.dim_p; }, c);
}

namespace detail {

inline Scalar dot(const Field& f, const Vec& a, const Vec& b) {
  Scalar s = Scalar::of(f, 0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

inline void require_coflag_shapes(const PoissonAlgebra& p, const Field& fld, std::size_t dim,
                                  const std::vector<const Vec*>& covecs,
                                  const std::vector<const Matrix*>& grids) {
  if (fld != p.field) throw FieldMismatchError("coflag: datum field differs from P");
  if (dim != p.dim) throw ShapeError("coflag: datum dimension differs from P");
  for (const Vec* v : covecs)
    if (v->size() != p.dim) throw ShapeError("coflag: covector length differs from dim P");
  for (const Matrix* m : grids)
    if (m->rows() != p.dim || m->cols() != p.dim || m->field() != p.field)
      throw ShapeError("coflag: grid shape differs from dim P");
}

}  // namespace detail

// Axioms AF1..AF7 of an abelian co-flag datum over P.
inline AxiomReport check_abelian_coflag(const PoissonAlgebra& p, const AbelianCoflagDatum& a) {
  detail::require_coflag_shapes(p, a.field, a.dim_p, {&a.lambda, &a.Lambda, &a.gamma},
                                {&a.theta, &a.f});
  const Field& fld = p.field;
  const std::size_t n = p.dim;
  const Scalar zero = Scalar::of(fld, 0);
  AxiomReport rep;
  const auto one = [&](const Scalar& s) { return Vec{s}; };
  const auto dot = [&](const Vec& a_, const Vec& b_) { return detail::dot(fld, a_, b_); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec mul_ij = p.mul.eval_basis(i, j);
      const Vec br_ij = p.bracket.eval_basis(i, j);
      // AF1: lambda and Lambda are multiplicative.
      rep.require("AF1", {i, j}, one(dot(a.lambda, mul_ij)), one(a.lambda[i] * a.lambda[j]));
      rep.require("AF1", {i, j}, one(dot(a.Lambda, mul_ij)), one(a.Lambda[i] * a.Lambda[j]));
      // AF6: gamma is a (lambda, Lambda)-derivation of the multiplication.
      rep.require("AF6", {i, j}, one(dot(a.gamma, mul_ij)),
                  one(a.gamma[i] * a.Lambda[j] + a.lambda[i] * a.gamma[j]));
      // AF7: lambda and Lambda vanish on brackets.
      rep.require("AF7", {i, j}, one(dot(a.lambda, br_ij)), one(zero));
      rep.require("AF7", {i, j}, one(dot(a.Lambda, br_ij)), one(zero));
      // AF3: gamma vanishes on brackets (second half below).
      rep.require("AF3", {i, j}, one(dot(a.gamma, br_ij)), one(zero));
    }

  // AF3: f alternating.
  for (std::size_t i = 0; i < n; ++i) rep.require("AF3", {i}, one(a.f.at(i, i)), one(zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rep.require("AF3", {i, j}, one(a.f.at(i, j)), one(zero - a.f.at(j, i)));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec mul_ij = p.mul.eval_basis(i, j);
        const Vec mul_jk = p.mul.eval_basis(j, k);
        const Vec br_ij = p.bracket.eval_basis(i, j);
        const Vec br_jk = p.bracket.eval_basis(j, k);
        const Vec br_ki = p.bracket.eval_basis(k, i);
        const Vec br_ik = p.bracket.eval_basis(i, k);
        // AF2: theta(p, qr) - theta(pq, r) = theta(p,q) Lambda(r) - theta(q,r) lambda(p)
        rep.require("AF2", {i, j, k},
                    one(dot(a.theta.row(i), mul_jk) - dot(mul_ij, a.theta.col(k))),
                    one(a.theta.at(i, j) * a.Lambda[k] - a.theta.at(j, k) * a.lambda[i]));
        // AF4: cyclic f over brackets, weighted by gamma.
        Scalar af4 = dot(a.f.row(i), br_jk) + dot(a.f.row(j), br_ki) + dot(a.f.row(k), br_ij);
        af4 = af4 + a.gamma[i] * a.f.at(j, k) + a.gamma[j] * a.f.at(k, i) +
              a.gamma[k] * a.f.at(i, j);
        rep.require("AF4", {i, j, k}, one(af4), one(zero));
        // AF5: f(pq, r) - Lambda(q) f(p,r) - lambda(p) f(q,r)
        //      = gamma(r) theta(p,q) + theta([p,r], q) + theta(p, [q,r])
        const Scalar lhs = dot(mul_ij, a.f.col(k)) - a.Lambda[j] * a.f.at(i, k) -
                           a.lambda[i] * a.f.at(j, k);
        const Scalar rhs = a.gamma[k] * a.theta.at(i, j) + dot(br_ik, a.theta.col(j)) +
                           dot(a.theta.row(i), br_jk);
        rep.require("AF5", {i, j, k}, one(lhs), one(rhs));
      }
  return rep;
}

// Axioms NF1..NF2 of a non-abelian co-flag datum over P.
inline AxiomReport check_nonabelian_coflag(const PoissonAlgebra& p,
                                           const NonabelianCoflagDatum& c) {
  detail::require_coflag_shapes(p, c.field, c.dim_p, {&c.lambda}, {&c.theta});
  if (c.u.field() != p.field) throw FieldMismatchError("coflag: u field differs from P");
  if (c.u.is_zero()) throw InvalidCoflagError("non-abelian datum requires u != 0");
  const Field& fld = p.field;
  const std::size_t n = p.dim;
  AxiomReport rep;
  const auto one = [&](const Scalar& s) { return Vec{s}; };
  const auto dot = [&](const Vec& a_, const Vec& b_) { return detail::dot(fld, a_, b_); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      // NF1: lambda(pq) = lambda(p) lambda(q) - u theta(p, q)
      rep.require("NF1", {i, j}, one(dot(c.lambda, p.mul.eval_basis(i, j))),
                  one(c.lambda[i] * c.lambda[j] - c.u * c.theta.at(i, j)));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        // NF2: theta(p, qr) - theta(pq, r) = theta(p,q) lambda(r) - theta(q,r) lambda(p)
        rep.require("NF2", {i, j, k},
                    one(dot(c.theta.row(i), p.mul.eval_basis(j, k)) -
                        dot(p.mul.eval_basis(i, j), c.theta.col(k))),
                    one(c.theta.at(i, j) * c.lambda[k] - c.theta.at(j, k) * c.lambda[i]));
  return rep;
}

// Lift a co-flag datum to its dimension-one pre-crossed datum.  The datum is
// checked first; the lift of a passing datum over a Poisson base always
// passes check_crossed_system.
inline PreCrossedDatum datum_from_coflag(const PoissonAlgebra& p, const AbelianCoflagDatum& a) {
  {
    const AxiomReport rep = check_abelian_coflag(p, a);
    if (!rep.passed)
      throw InvalidCoflagError("abelian co-flag datum fails " + rep.violations.front().axiom);
  }
  PreCrossedDatum d = PreCrossedDatum::make_zero(p, 1);
  for (std::size_t i = 0; i < p.dim; ++i) {
    d.act_l.at(i, 0, 0) = a.lambda[i];
    d.act_r.at(0, i, 0) = a.Lambda[i];
    d.act_lie.at(i, 0, 0) = a.gamma[i];
    for (std::size_t j = 0; j < p.dim; ++j) {
      d.theta.at(i, j, 0) = a.theta.at(i, j);
      d.eff.at(i, j, 0) = a.f.at(i, j);
    }
  }
  return d;
}

inline PreCrossedDatum datum_from_coflag(const PoissonAlgebra& p,
                                         const NonabelianCoflagDatum& c) {
  {
    const AxiomReport rep = check_nonabelian_coflag(p, c);
    if (!rep.passed)
      throw InvalidCoflagError("non-abelian co-flag datum fails " +
                               rep.violations.front().axiom);
  }
  PreCrossedDatum d = PreCrossedDatum::make_zero(p, 1);
  d.v_mul.at(0, 0, 0) = c.u;
  const Scalar inv_u = Scalar::of(p.field, 1) / c.u;
  for (std::size_t i = 0; i < p.dim; ++i) {
    d.act_l.at(i, 0, 0) = c.lambda[i];
    d.act_r.at(0, i, 0) = c.lambda[i];
    for (std::size_t j = 0; j < p.dim; ++j) {
      d.theta.at(i, j, 0) = c.theta.at(i, j);
      d.eff.at(i, j, 0) =
          Scalar::of(p.field, 0) -
          inv_u * detail::dot(p.field, c.lambda, p.bracket.eval_basis(i, j));
    }
  }
  return d;
}

inline PreCrossedDatum datum_from_coflag(const PoissonAlgebra& p, const CoflagDatum& c) {
  return std::visit([&](const auto& x) { return datum_from_coflag(p, x); }, c);
}

namespace detail {

// Field reads for dimension-one data; no validation.
inline CoflagDatum read_coflag(const PreCrossedDatum& d) {
  const Field& fld = d.P.field;
  const std::size_t n = d.P.dim;
  const Scalar u = d.v_mul.at(0, 0, 0);
  if (u.is_zero()) {
    AbelianCoflagDatum a = AbelianCoflagDatum::zero(fld, n);
    for (std::size_t i = 0; i < n; ++i) {
      a.lambda[i] = d.act_l.at(i, 0, 0);
      a.Lambda[i] = d.act_r.at(0, i, 0);
      a.gamma[i] = d.act_lie.at(i, 0, 0);
      for (std::size_t j = 0; j < n; ++j) {
        a.theta.at(i, j) = d.theta.at(i, j, 0);
        a.f.at(i, j) = d.eff.at(i, j, 0);
      }
    }
    return a;
  }
  NonabelianCoflagDatum c{fld, n, zero_vec(fld, n), Matrix(fld, n, n), u};
  for (std::size_t i = 0; i < n; ++i) {
    c.lambda[i] = d.act_l.at(i, 0, 0);
    for (std::size_t j = 0; j < n; ++j) c.theta.at(i, j) = d.theta.at(i, j, 0);
  }
  return c;
}

}  // namespace detail

// Inverse of datum_from_coflag on valid systems.  The tag is read off the
// fiber multiplication.
inline CoflagDatum coflag_from_datum(const PreCrossedDatum& d) {
  if (d.dim_v != 1) throw DimVNotOneError("coflag_from_datum: fiber dimension must be 1");
  {
    const AxiomReport rep = check_crossed_system(d);
    if (!rep.passed)
      throw NotValidSystemError("coflag_from_datum: datum fails " +
                                rep.violations.front().axiom);
  }
  return detail::read_coflag(d);
}

// Family tag used in classifications of dimension-one extensions.
inline std::string coflag_family_tag(const PreCrossedDatum& d) {
  return d.v_mul.at(0, 0, 0).is_zero() ? "abelian" : "nonabelian";
}

// Decider for two abelian co-flag data over the same P.  Absent unless
// (lambda, Lambda, gamma) agree; then the cochain relations are linear in
// the witness and are solved exactly, over any field.
inline std::optional<Matrix> equiv1(const PoissonAlgebra& p, const AbelianCoflagDatum& a,
                                    const AbelianCoflagDatum& a2) {
  detail::require_coflag_shapes(p, a.field, a.dim_p, {&a.lambda, &a.Lambda, &a.gamma},
                                {&a.theta, &a.f});
  detail::require_coflag_shapes(p, a2.field, a2.dim_p, {&a2.lambda, &a2.Lambda, &a2.gamma},
                                {&a2.theta, &a2.f});
  if (a.lambda != a2.lambda || a.Lambda != a2.Lambda || a.gamma != a2.gamma)
    return std::nullopt;

  const Field& fld = p.field;
  const std::size_t n = p.dim;
  // Unknowns r_0..r_{n-1}; rows are the theta relation then the f relation,
  // each over all basis pairs:
  //   theta(p,q) = theta'(p,q) + r(q) lambda'(p) + r(p) Lambda'(q) - r(pq)
  //   f(p,q)     = f'(p,q) + r(q) gamma'(p) - r(p) gamma'(q) - r([p,q])
  Matrix sys(fld, 2 * n * n, n);
  Vec rhs = zero_vec(fld, 2 * n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++row) {
      sys.at(row, j) = sys.at(row, j) + a2.lambda[i];
      sys.at(row, i) = sys.at(row, i) + a2.Lambda[j];
      const Vec mul_ij = p.mul.eval_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.at(row, k) = sys.at(row, k) - mul_ij[k];
      rhs[row] = a.theta.at(i, j) - a2.theta.at(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++row) {
      sys.at(row, j) = sys.at(row, j) + a2.gamma[i];
      sys.at(row, i) = sys.at(row, i) - a2.gamma[j];
      const Vec br_ij = p.bracket.eval_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.at(row, k) = sys.at(row, k) - br_ij[k];
      rhs[row] = a.f.at(i, j) - a2.f.at(i, j);
    }

  const SolutionSet sol = solve_linear(sys, rhs);
  if (!sol.solvable) return std::nullopt;
  Matrix r(fld, 1, n);
  for (std::size_t k = 0; k < n; ++k) r.at(0, k) = sol.particular[k];
  return r;
}

// Decider for two non-abelian co-flag data over the same P.  Absent unless
// u = u'; then the witness is forced entrywise by the action relation and
// only the theta relation remains to verify.  Total over any field.
inline std::optional<Matrix> equiv2(const PoissonAlgebra& p, const NonabelianCoflagDatum& c,
                                    const NonabelianCoflagDatum& c2) {
  detail::require_coflag_shapes(p, c.field, c.dim_p, {&c.lambda}, {&c.theta});
  detail::require_coflag_shapes(p, c2.field, c2.dim_p, {&c2.lambda}, {&c2.theta});
  if (c.u.is_zero() || c2.u.is_zero())
    throw InvalidCoflagError("equiv2: non-abelian data require u != 0");
  if (c.u != c2.u) return std::nullopt;

  const Field& fld = p.field;
  const std::size_t n = p.dim;
  // lambda(p) = lambda'(p) + r(p) u forces r.
  Vec r(n, Scalar::of(fld, 0));
  for (std::size_t i = 0; i < n; ++i) r[i] = (c.lambda[i] - c2.lambda[i]) / c.u;

  // theta(p,q) = theta'(p,q) + r(q) lambda'(p) + r(p) lambda'(q) - r(pq)
  //              + r(p) r(q) u
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar rhs = c2.theta.at(i, j) + r[j] * c2.lambda[i] + r[i] * c2.lambda[j] -
                         detail::dot(fld, r, p.mul.eval_basis(i, j)) + r[i] * r[j] * c.u;
      if (c.theta.at(i, j) != rhs) return std::nullopt;
    }
  Matrix w(fld, 1, n);
  for (std::size_t i = 0; i < n; ++i) w.at(0, i) = r[i];
  return w;
}

// Full decision ladder.  Extends find_witness with the dimension-one
// deciders, which are total on valid systems over any field.
inline Decision decide_cohomologous(const PreCrossedDatum& a, const PreCrossedDatum& b) {
  Decision first = find_witness(a, b);
  if (first.verdict != Verdict::Undecidable) return first;
  if (a.dim_v != 1) return first;

  // A witness transports one valid system onto another, so validity is an
  // invariant of the relation; mixed validity settles the question.
  const bool va = check_crossed_system(a).passed;
  const bool vb = check_crossed_system(b).passed;
  if (va != vb) return Decision::no("exactly one side is a valid crossed system");
  if (!va) return first;

  const CoflagDatum ca = detail::read_coflag(a), cb = detail::read_coflag(b);
  const auto* na = std::get_if<NonabelianCoflagDatum>(&ca);
  const auto* nb = std::get_if<NonabelianCoflagDatum>(&cb);
  if (!na || !nb) return first;  // abelian fibers were already decided linearly
  if (auto w = equiv2(a.P, *na, *nb)) return Decision::yes(std::move(*w));
  return Decision::no("fiber multiplications carry different parameters");
}

// All co-flag data of P over a prime field, staged:
//   abelian: (lambda, Lambda, gamma) cells in lexicographic order, filtered
//   by their closed conditions; per cell the (theta, f) constraints are a
//   homogeneous linear system whose solution space is enumerated via its
//   nullspace basis.  Non-abelian: u ascending in F_p*, lambda lexicographic,
//   theta derived from NF1, kept iff NF2 holds.  No duplicates arise.
inline std::vector<CoflagDatum> enumerate_coflag(const PoissonAlgebra& p_in,
                                                 const Field& fld) {
  if (!fld.is_finite()) throw InfiniteFieldError("enumerate_coflag: finite field required");
  const PoissonAlgebra p = base_change(p_in, fld);
  const std::size_t n = p.dim;
  if (n > 6) throw TooLargeError("enumerate_coflag: dim P above supported bound 6");

  std::vector<CoflagDatum> out;

  // When brackets span P, the three covectors must vanish (they kill all
  // brackets), so the abelian stage has a single cell.
  bool perfect = false;
  {
    std::vector<Vec> brs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) brs.push_back(p.bracket.eval_basis(i, j));
    perfect = row_space_basis(fld, brs, n).size() == n && n > 0;
  }

  // Abelian stage.
  VectorEnumerator cells(fld, perfect ? 0 : 3 * n);
  while (auto cell = cells.next()) {
    const Vec lambda = perfect ? zero_vec(fld, n) : Vec(cell->begin(), cell->begin() + n);
    const Vec Lambda =
        perfect ? zero_vec(fld, n) : Vec(cell->begin() + n, cell->begin() + 2 * n);
    const Vec gamma = perfect ? zero_vec(fld, n) : Vec(cell->begin() + 2 * n, cell->end());

    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j) {
        const Vec mul_ij = p.mul.eval_basis(i, j);
        const Vec br_ij = p.bracket.eval_basis(i, j);
        ok = detail::dot(fld, lambda, mul_ij) == lambda[i] * lambda[j] &&
             detail::dot(fld, Lambda, mul_ij) == Lambda[i] * Lambda[j] &&
             detail::dot(fld, gamma, mul_ij) ==
                 gamma[i] * Lambda[j] + lambda[i] * gamma[j] &&
             detail::dot(fld, lambda, br_ij).is_zero() &&
             detail::dot(fld, Lambda, br_ij).is_zero() &&
             detail::dot(fld, gamma, br_ij).is_zero();
      }
    if (!ok) continue;

    // Unknowns: theta_ab at a*n+b, f_ab at n*n + a*n+b.
    const std::size_t nn = n * n;
    const auto ti = [&](std::size_t a_, std::size_t b_) { return a_ * n + b_; };
    const auto fi = [&](std::size_t a_, std::size_t b_) { return nn + a_ * n + b_; };
    std::vector<Vec> rows;

    for (std::size_t i = 0; i < n; ++i) {
      Vec row = zero_vec(fld, 2 * nn);
      row[fi(i, i)] = Scalar::of(fld, 1);
      rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec row = zero_vec(fld, 2 * nn);
        row[fi(i, j)] = Scalar::of(fld, 1);
        row[fi(j, i)] = row[fi(j, i)] + Scalar::of(fld, 1);
        rows.push_back(std::move(row));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec mul_ij = p.mul.eval_basis(i, j);
          const Vec mul_jk = p.mul.eval_basis(j, k);
          const Vec br_ij = p.bracket.eval_basis(i, j);
          const Vec br_jk = p.bracket.eval_basis(j, k);
          const Vec br_ki = p.bracket.eval_basis(k, i);
          const Vec br_ik = p.bracket.eval_basis(i, k);

          Vec af2 = zero_vec(fld, 2 * nn);
          for (std::size_t l = 0; l < n; ++l) {
            af2[ti(i, l)] = af2[ti(i, l)] + mul_jk[l];
            af2[ti(l, k)] = af2[ti(l, k)] - mul_ij[l];
          }
          af2[ti(i, j)] = af2[ti(i, j)] - Lambda[k];
          af2[ti(j, k)] = af2[ti(j, k)] + lambda[i];
          rows.push_back(std::move(af2));

          Vec af4 = zero_vec(fld, 2 * nn);
          for (std::size_t l = 0; l < n; ++l) {
            af4[fi(i, l)] = af4[fi(i, l)] + br_jk[l];
            af4[fi(j, l)] = af4[fi(j, l)] + br_ki[l];
            af4[fi(k, l)] = af4[fi(k, l)] + br_ij[l];
          }
          af4[fi(j, k)] = af4[fi(j, k)] + gamma[i];
          af4[fi(k, i)] = af4[fi(k, i)] + gamma[j];
          af4[fi(i, j)] = af4[fi(i, j)] + gamma[k];
          rows.push_back(std::move(af4));

          Vec af5 = zero_vec(fld, 2 * nn);
          for (std::size_t l = 0; l < n; ++l) {
            af5[fi(l, k)] = af5[fi(l, k)] + mul_ij[l];
            af5[ti(l, j)] = af5[ti(l, j)] - br_ik[l];
            af5[ti(i, l)] = af5[ti(i, l)] - br_jk[l];
          }
          af5[fi(i, k)] = af5[fi(i, k)] - Lambda[j];
          af5[fi(j, k)] = af5[fi(j, k)] - lambda[i];
          af5[ti(i, j)] = af5[ti(i, j)] - gamma[k];
          rows.push_back(std::move(af5));
        }

    const Matrix sys = Matrix::from_rows(fld, rows, 2 * nn);
    const std::vector<Vec> basis = nullspace_basis(sys);
    VectorEnumerator coeffs(fld, basis.size());
    while (auto co = coeffs.next()) {
      Vec combo = zero_vec(fld, 2 * nn);
      for (std::size_t t = 0; t < basis.size(); ++t)
        combo = add(combo, scale((*co)[t], basis[t]));
      AbelianCoflagDatum a = AbelianCoflagDatum::zero(fld, n);
      a.lambda = lambda;
      a.Lambda = Lambda;
      a.gamma = gamma;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a.theta.at(i, j) = combo[ti(i, j)];
          a.f.at(i, j) = combo[fi(i, j)];
        }
      out.push_back(std::move(a));
    }
  }

  // Non-abelian stage.
  for (long long ur = 1; ur < fld.modulus(); ++ur) {
    const Scalar u = Scalar::of(fld, ur);
    const Scalar inv_u = Scalar::of(fld, 1) / u;
    VectorEnumerator lams(fld, n);
    while (auto lam = lams.next()) {
      const Vec& lambda = *lam;
      Matrix theta(fld, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          theta.at(i, j) = (lambda[i] * lambda[j] -
                            detail::dot(fld, lambda, p.mul.eval_basis(i, j))) *
                           inv_u;
      bool ok = true;
      for (std::size_t i = 0; ok && i < n; ++i)
        for (std::size_t j = 0; ok && j < n; ++j)
          for (std::size_t k = 0; ok && k < n; ++k)
            ok = detail::dot(fld, theta.row(i), p.mul.eval_basis(j, k)) -
                     detail::dot(fld, p.mul.eval_basis(i, j), theta.col(k)) ==
                 theta.at(i, j) * lambda[k] - theta.at(j, k) * lambda[i];
      if (ok) out.push_back(NonabelianCoflagDatum{fld, n, lambda, std::move(theta), u});
    }
  }
  return out;
}

// Classification of dimension-one extensions of P over F_p: enumerate, lift,
// quotient the abelian part by equiv1 and the non-abelian part by equiv2.
// Tags never merge.
inline ClassificationResult classify_coflag(const PoissonAlgebra& p_in, const Field& fld) {
  const PoissonAlgebra p = base_change(p_in, fld);
  {
    const AxiomReport rep = verify_poisson(p);
    if (!rep.passed)
      throw NotPoissonError("classify_coflag: base fails " + rep.violations.front().axiom);
  }
  const std::vector<CoflagDatum> data = enumerate_coflag(p, fld);
  std::vector<PreCrossedDatum> lifts;
  lifts.reserve(data.size());
  for (const CoflagDatum& c : data) lifts.push_back(datum_from_coflag(p, c));

  const auto decider = [](const PreCrossedDatum& a, const PreCrossedDatum& b) {
    const CoflagDatum ca = detail::read_coflag(a), cb = detail::read_coflag(b);
    if (is_abelian(ca) != is_abelian(cb)) return Decision::no("fiber tags differ");
    if (is_abelian(ca)) {
      auto w = equiv1(a.P, std::get<AbelianCoflagDatum>(ca), std::get<AbelianCoflagDatum>(cb));
      return w ? Decision::yes(std::move(*w)) : Decision::no("no witness under equiv1");
    }
    auto w = equiv2(a.P, std::get<NonabelianCoflagDatum>(ca),
                    std::get<NonabelianCoflagDatum>(cb));
    return w ? Decision::yes(std::move(*w)) : Decision::no("no witness under equiv2");
  };
  return quotient_classes(lifts, decider, coflag_family_tag);
}

// Iterated dimension-one extensions: stage i applies choices[i] to the
// previous algebra.  Returns the full chain, base first.  A stage whose
// datum fails its checker raises InvalidCoflagError naming the stage.
inline std::vector<PoissonAlgebra> tower(const PoissonAlgebra& base,
                                         const std::vector<CoflagDatum>& choices) {
  std::vector<PoissonAlgebra> chain{base};
  for (std::size_t i = 0; i < choices.size(); ++i) {
    const PoissonAlgebra& cur = chain.back();
    PreCrossedDatum d = PreCrossedDatum::make_zero(cur, 1);
    try {
      d = datum_from_coflag(cur, choices[i]);
    } catch (const InvalidCoflagError& e) {
      throw InvalidCoflagError("stage " + std::to_string(i + 1) + ": " + e.what());
    } catch (const ShapeError& e) {
      throw ShapeError("stage " + std::to_string(i + 1) + ": " + e.what());
    } catch (const FieldMismatchError& e) {
      throw FieldMismatchError("stage " + std::to_string(i + 1) + ": " + e.what());
    }
    PoissonAlgebra next = crossed_product(d);
    // The projection onto the previous stage must be a Poisson epimorphism;
    // anything else is an internal fault.
    Matrix pi(cur.field, cur.dim, next.dim);
    for (std::size_t k = 0; k < cur.dim; ++k) pi.at(k, k) = Scalar::of(cur.field, 1);
    if (!check_poisson_morphism(pi, next, cur).passed)
      throw Error("tower: stage projection failed verification");
    chain.push_back(std::move(next));
  }
  return chain;
}

// Bracket-only analogue for a Lie algebra presented with zero multiplication:
// pairs (lambda, f) with lambda vanishing on brackets, f alternating, and the
// weighted cyclic condition
//   f(p,[q,r]) + f(q,[r,p]) + f(r,[p,q])
//     + lambda(p) f(q,r) + lambda(q) f(r,p) + lambda(r) f(p,q) = 0.
struct LieCoflagDatum {
  Field field;
  std::size_t dim_p = 0;
  Vec lambda;
  Matrix f;

  bool operator==(const LieCoflagDatum& o) const {
    return field == o.field && dim_p == o.dim_p && lambda == o.lambda && f == o.f;
  }
};

inline std::vector<LieCoflagDatum> enumerate_lie_coflag(const PoissonAlgebra& p_in,
                                                        const Field& fld) {
  if (!fld.is_finite())
    throw InfiniteFieldError("enumerate_lie_coflag: finite field required");
  const PoissonAlgebra p = base_change(p_in, fld);
  if (!p.mul.is_zero())
    throw PreconditionError("enumerate_lie_coflag: multiplication must be zero");
  const std::size_t n = p.dim;
  if (n > 6) throw TooLargeError("enumerate_lie_coflag: dim P above supported bound 6");

  std::vector<LieCoflagDatum> out;
  VectorEnumerator lams(fld, n);
  while (auto lam = lams.next()) {
    const Vec& lambda = *lam;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j)
        ok = detail::dot(fld, lambda, p.bracket.eval_basis(i, j)).is_zero();
    if (!ok) continue;

    const std::size_t nn = n * n;
    const auto fi = [&](std::size_t a_, std::size_t b_) { return a_ * n + b_; };
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Vec row = zero_vec(fld, nn);
      row[fi(i, i)] = Scalar::of(fld, 1);
      rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec row = zero_vec(fld, nn);
        row[fi(i, j)] = Scalar::of(fld, 1);
        row[fi(j, i)] = row[fi(j, i)] + Scalar::of(fld, 1);
        rows.push_back(std::move(row));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec br_jk = p.bracket.eval_basis(j, k);
          const Vec br_ki = p.bracket.eval_basis(k, i);
          const Vec br_ij = p.bracket.eval_basis(i, j);
          Vec row = zero_vec(fld, nn);
          for (std::size_t l = 0; l < n; ++l) {
            row[fi(i, l)] = row[fi(i, l)] + br_jk[l];
            row[fi(j, l)] = row[fi(j, l)] + br_ki[l];
            row[fi(k, l)] = row[fi(k, l)] + br_ij[l];
          }
          row[fi(j, k)] = row[fi(j, k)] + lambda[i];
          row[fi(k, i)] = row[fi(k, i)] + lambda[j];
          row[fi(i, j)] = row[fi(i, j)] + lambda[k];
          rows.push_back(std::move(row));
        }

    const Matrix sys = Matrix::from_rows(fld, rows, nn);
    const std::vector<Vec> basis = nullspace_basis(sys);
    VectorEnumerator coeffs(fld, basis.size());
    while (auto co = coeffs.next()) {
      Vec combo = zero_vec(fld, nn);
      for (std::size_t t = 0; t < basis.size(); ++t)
        combo = add(combo, scale((*co)[t], basis[t]));
      LieCoflagDatum lc{fld, n, lambda, Matrix(fld, n, n)};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lc.f.at(i, j) = combo[fi(i, j)];
      out.push_back(std::move(lc));
    }
  }
  return out;
}

}  // namespace pax
