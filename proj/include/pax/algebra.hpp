// Finite-dimensional Poisson algebras as structure-constant tables, axiom
// verification with exhaustive violation reports, and the basic
// constructions (direct product, commutator bracket, unit adjunction).
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace pax {

// Structure constants of a bilinear map U x W -> Z on chosen bases:
// c(i, j, k) is the k-th coordinate of the image of (u_i, w_j).
class BilinearTable {
 public:
  BilinearTable(const Field& f, std::size_t d1, std::size_t d2, std::size_t dout)
      : field_(f), d1_(d1), d2_(d2), dout_(dout), c_(d1 * d2 * dout, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t dout() const { return dout_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_.at((i * d2_ + j) * dout_ + k);
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.at((i * d2_ + j) * dout_ + k);
  }

  Vec eval_basis(std::size_t i, std::size_t j) const {
    Vec r;
    r.reserve(dout_);
    for (std::size_t k = 0; k < dout_; ++k) r.push_back(at(i, j, k));
    return r;
  }

  void set_basis(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != dout_) throw ShapeError("set_basis: size mismatch");
    for (std::size_t k = 0; k < dout_; ++k) at(i, j, k) = v[k];
  }

  // Bilinear extension to coordinate vectors.
  Vec eval(const Vec& u, const Vec& w) const {
    if (u.size() != d1_ || w.size() != d2_) throw ShapeError("eval: size mismatch");
    Vec r = zero_vec(field_, dout_);
    for (std::size_t i = 0; i < d1_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < d2_; ++j) {
        if (w[j].is_zero()) continue;
        const Scalar c = u[i] * w[j];
        for (std::size_t k = 0; k < dout_; ++k) r[k] = r[k] + c * at(i, j, k);
      }
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const BilinearTable& o) const {
    return d1_ == o.d1_ && d2_ == o.d2_ && dout_ == o.dout_ && field_ == o.field_ &&
           c_ == o.c_;
  }

  const std::vector<Scalar>& flat() const { return c_; }

 private:
  Field field_;
  std::size_t d1_, d2_, dout_;
  std::vector<Scalar> c_;
};

// One failed axiom instance: which law, at which basis tuple, and both
// evaluated sides so the report is re-checkable by hand.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> at;
  Vec lhs, rhs;
};

// Verdict of an axiom battery.  Collects all violations (never just the
// first) in deterministic loop order.
struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;

  void require(const std::string& axiom, std::vector<std::size_t> at, Vec lhs, Vec rhs) {
    if (lhs == rhs) return;
    passed = false;
    violations.push_back({axiom, std::move(at), std::move(lhs), std::move(rhs)});
  }

  void merge(AxiomReport other) {
    passed = passed && other.passed;
    for (auto& v : other.violations) violations.push_back(std::move(v));
  }

  // Relabel every violation, e.g. fold a whole battery under one axiom id.
  AxiomReport relabeled(const std::string& axiom) && {
    for (auto& v : violations) v.axiom = axiom;
    return std::move(*this);
  }
};

// (P, mul, bracket): not assumed unital or commutative; validity is a
// property checked by verify_poisson, not an invariant of the type.
struct PoissonAlgebra {
  Field field;
  std::size_t dim;
  BilinearTable mul;
  BilinearTable bracket;
  std::vector<std::string> names;  // optional basis labels, empty or size dim

  static PoissonAlgebra zero(const Field& f, std::size_t dim) {
    return {f, dim, BilinearTable(f, dim, dim, dim), BilinearTable(f, dim, dim, dim), {}};
  }

  bool operator==(const PoissonAlgebra& o) const {
    return field == o.field && dim == o.dim && mul == o.mul && bracket == o.bracket;
  }
};

// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
inline AxiomReport verify_associative(const PoissonAlgebra& p) {
  AxiomReport rep;
  const std::size_t n = p.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        rep.require("assoc", {i, j, k},
                    p.mul.eval(p.mul.eval_basis(i, j), unit_vec(p.field, n, k)),
                    p.mul.eval(unit_vec(p.field, n, i), p.mul.eval_basis(j, k)));
  return rep;
}

// Alternating ([e_i,e_i] = 0 and [e_i,e_j] = -[e_j,e_i]; over any field the
// table needs both) plus the Jacobi identity.
inline AxiomReport verify_lie(const PoissonAlgebra& p) {
  AxiomReport rep;
  const std::size_t n = p.dim;
  for (std::size_t i = 0; i < n; ++i)
    rep.require("alt", {i}, p.bracket.eval_basis(i, i), zero_vec(p.field, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rep.require("antisym", {i, j}, p.bracket.eval_basis(i, j),
                  negate(p.bracket.eval_basis(j, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ek = unit_vec(p.field, n, k);
        const Vec ej = unit_vec(p.field, n, j);
        const Vec ei = unit_vec(p.field, n, i);
        Vec sum = p.bracket.eval(p.bracket.eval_basis(i, j), ek);
        sum = add(sum, p.bracket.eval(p.bracket.eval_basis(j, k), ei));
        sum = add(sum, p.bracket.eval(p.bracket.eval_basis(k, i), ej));
        rep.require("jacobi", {i, j, k}, sum, zero_vec(p.field, n));
      }
  return rep;
}

// [e_i e_j, e_k] = [e_i, e_k] e_j + e_i [e_j, e_k] on all basis triples.
inline AxiomReport verify_leibniz(const PoissonAlgebra& p) {
  AxiomReport rep;
  const std::size_t n = p.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = p.bracket.eval(p.mul.eval_basis(i, j), unit_vec(p.field, n, k));
        const Vec rhs = add(p.mul.eval(p.bracket.eval_basis(i, k), unit_vec(p.field, n, j)),
                            p.mul.eval(unit_vec(p.field, n, i), p.bracket.eval_basis(j, k)));
        rep.require("leibniz", {i, j, k}, lhs, rhs);
      }
  return rep;
}

inline AxiomReport verify_poisson(const PoissonAlgebra& p) {
  AxiomReport rep = verify_associative(p);
  rep.merge(verify_lie(p));
  rep.merge(verify_leibniz(p));
  return rep;
}

// phi: from -> to as a dim(to) x dim(from) matrix (columns are images of the
// source basis).  Checks multiplicativity for both operations.
inline AxiomReport check_poisson_morphism(const Matrix& phi, const PoissonAlgebra& from,
                                          const PoissonAlgebra& to) {
  if (phi.rows() != to.dim || phi.cols() != from.dim)
    throw ShapeError("check_poisson_morphism: matrix shape mismatch");
  if (phi.field() != from.field || from.field != to.field)
    throw FieldMismatchError("check_poisson_morphism: field mismatch");
  AxiomReport rep;
  for (std::size_t i = 0; i < from.dim; ++i)
    for (std::size_t j = 0; j < from.dim; ++j) {
      rep.require("morphism:mul", {i, j}, phi.apply(from.mul.eval_basis(i, j)),
                  to.mul.eval(phi.col(i), phi.col(j)));
      rep.require("morphism:bracket", {i, j}, phi.apply(from.bracket.eval_basis(i, j)),
                  to.bracket.eval(phi.col(i), phi.col(j)));
    }
  return rep;
}

// Componentwise operations on P (+) Q, basis of P first.
inline PoissonAlgebra direct_product(const PoissonAlgebra& p, const PoissonAlgebra& q) {
  if (p.field != q.field) throw FieldMismatchError("direct_product: field mismatch");
  const std::size_t n = p.dim + q.dim;
  PoissonAlgebra r = PoissonAlgebra::zero(p.field, n);
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j)
      for (std::size_t k = 0; k < p.dim; ++k) {
        r.mul.at(i, j, k) = p.mul.at(i, j, k);
        r.bracket.at(i, j, k) = p.bracket.at(i, j, k);
      }
  for (std::size_t i = 0; i < q.dim; ++i)
    for (std::size_t j = 0; j < q.dim; ++j)
      for (std::size_t k = 0; k < q.dim; ++k) {
        r.mul.at(p.dim + i, p.dim + j, p.dim + k) = q.mul.at(i, j, k);
        r.bracket.at(p.dim + i, p.dim + j, p.dim + k) = q.bracket.at(i, j, k);
      }
  return r;
}

// [a, b] := u (ab - ba) on an associative algebra given with a zero bracket.
inline PoissonAlgebra commutator_poisson(const PoissonAlgebra& a, const Scalar& u) {
  if (!a.bracket.is_zero())
    throw PreconditionError("commutator_poisson: input bracket must be zero");
  if (u.field() != a.field) throw FieldMismatchError("commutator_poisson: field mismatch");
  PoissonAlgebra r = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      r.bracket.set_basis(i, j,
                          scale(u, sub(a.mul.eval_basis(i, j), a.mul.eval_basis(j, i))));
  return r;
}

// k (+) P with the new basis vector (index 0) acting as a unit with zero
// bracket against everything.
inline PoissonAlgebra adjoin_unit(const PoissonAlgebra& p) {
  const std::size_t n = p.dim + 1;
  PoissonAlgebra r = PoissonAlgebra::zero(p.field, n);
  r.mul.at(0, 0, 0) = Scalar::one(p.field);
  for (std::size_t i = 0; i < p.dim; ++i) {
    r.mul.at(0, i + 1, i + 1) = Scalar::one(p.field);
    r.mul.at(i + 1, 0, i + 1) = Scalar::one(p.field);
  }
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j)
      for (std::size_t k = 0; k < p.dim; ++k) {
        r.mul.at(i + 1, j + 1, k + 1) = p.mul.at(i, j, k);
        r.bracket.at(i + 1, j + 1, k + 1) = p.bracket.at(i, j, k);
      }
  if (!p.names.empty()) {
    r.names.push_back("1");
    for (const auto& s : p.names) r.names.push_back(s);
  }
  return r;
}

// Reduce a scalar into a target field.  Identity when the fields agree;
// rationals reduce mod p when every denominator is invertible.
inline Scalar change_field(const Scalar& s, const Field& target) {
  if (s.field() == target) return s;
  if (s.field().is_finite() || !target.is_finite())
    throw FieldMismatchError("change_field: only Q -> F_p reduction is supported");
  const Rational q = s.rational_value();
  const Scalar num = Scalar::of(target, Integer(boost::multiprecision::numerator(q)));
  const Scalar den = Scalar::of(target, Integer(boost::multiprecision::denominator(q)));
  if (den.is_zero())
    throw DivisionByZeroError("change_field: denominator vanishes in the target field");
  return num / den;
}

// Reduce all structure constants of an algebra over Q into F_p.
inline PoissonAlgebra base_change(const PoissonAlgebra& p, const Field& target) {
  if (p.field == target) return p;
  PoissonAlgebra r = PoissonAlgebra::zero(target, p.dim);
  r.names = p.names;
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < p.dim; ++j)
      for (std::size_t k = 0; k < p.dim; ++k) {
        r.mul.at(i, j, k) = change_field(p.mul.at(i, j, k), target);
        r.bracket.at(i, j, k) = change_field(p.bracket.at(i, j, k), target);
      }
  return r;
}

// Poisson bimodule battery for actions of P on a space V:
//   act_l  (n_P, n_V, n_V)   p -> x
//   act_r  (n_V, n_P, n_V)   x <- p
//   act_lie(n_P, n_V, n_V)   p |> x
// Axiom ids bimod1..bimod7 in the order: left module, right module, bimodule
// compatibility, left Lie module, then the three mixed conditions.
inline AxiomReport check_poisson_bimodule(const PoissonAlgebra& p, const BilinearTable& act_l,
                                          const BilinearTable& act_r,
                                          const BilinearTable& act_lie) {
  const std::size_t n = p.dim;
  const std::size_t m = act_l.d2();
  if (act_l.d1() != n || act_l.dout() != m || act_r.d1() != m || act_r.d2() != n ||
      act_r.dout() != m || act_lie.d1() != n || act_lie.d2() != m || act_lie.dout() != m)
    throw ShapeError("check_poisson_bimodule: table shape mismatch");
  if (act_l.field() != p.field || act_r.field() != p.field || act_lie.field() != p.field)
    throw FieldMismatchError("check_poisson_bimodule: field mismatch");

  AxiomReport rep;
  const Field& f = p.field;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < m; ++x) {
        const Vec ea = unit_vec(f, n, a), eb = unit_vec(f, n, b), ex = unit_vec(f, m, x);
        const Vec ab = p.mul.eval_basis(a, b), br = p.bracket.eval_basis(a, b);
        // bimod1: (pq) -> x = p -> (q -> x)
        rep.require("bimod1", {a, b, x}, act_l.eval(ab, ex),
                    act_l.eval(ea, act_l.eval(eb, ex)));
        // bimod2: x <- (pq) = (x <- p) <- q
        rep.require("bimod2", {a, b, x}, act_r.eval(ex, ab),
                    act_r.eval(act_r.eval(ex, ea), eb));
        // bimod3: (p -> x) <- q = p -> (x <- q)
        rep.require("bimod3", {a, b, x}, act_r.eval(act_l.eval(ea, ex), eb),
                    act_l.eval(ea, act_r.eval(ex, eb)));
        // bimod4: [p,q] |> x = p |> (q |> x) - q |> (p |> x)
        rep.require("bimod4", {a, b, x}, act_lie.eval(br, ex),
                    sub(act_lie.eval(ea, act_lie.eval(eb, ex)),
                        act_lie.eval(eb, act_lie.eval(ea, ex))));
        // bimod5: (pq) |> x = p -> (q |> x) + (p |> x) <- q
        rep.require("bimod5", {a, b, x}, act_lie.eval(ab, ex),
                    add(act_l.eval(ea, act_lie.eval(eb, ex)),
                        act_r.eval(act_lie.eval(ea, ex), eb)));
        // bimod6: [p,q] -> x = p -> (q |> x) - q |> (p -> x)
        rep.require("bimod6", {a, b, x}, act_l.eval(br, ex),
                    sub(act_l.eval(ea, act_lie.eval(eb, ex)),
                        act_lie.eval(eb, act_l.eval(ea, ex))));
        // bimod7: x <- [p,q] = (q |> x) <- p - q |> (x <- p)
        rep.require("bimod7", {a, b, x}, act_r.eval(ex, br),
                    sub(act_r.eval(act_lie.eval(eb, ex), ea),
                        act_lie.eval(eb, act_r.eval(ex, ea))));
      }
  return rep;
}

}  // namespace pax
