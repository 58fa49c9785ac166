// Pre-crossed data Omega(P, V), the Hochschild / Lie-crossed / crossed-system
// axiom batteries, the crossed product P # V, and extraction of a crossed
// system from an epimorphism with a linear section.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace pax {

// The seven structure maps of a candidate extension of P by a space V:
//   act_l    (n_P, n_V, n_V)   p -> x     left action of (P, mul)
//   act_r    (n_V, n_P, n_V)   x <- p     right action of (P, mul)
//   act_lie  (n_P, n_V, n_V)   p |> x     left action of (P, bracket)
//   theta    (n_P, n_P, n_V)   associative 2-cochain
//   eff      (n_P, n_P, n_V)   Lie 2-cochain
//   v_mul, v_bracket (n_V, n_V, n_V)      algebra structure carried by V
// No axioms are assumed; check_crossed_system decides validity.
struct PreCrossedDatum {
  PoissonAlgebra P;
  std::size_t dim_v;
  BilinearTable act_l, act_r, act_lie, theta, eff, v_mul, v_bracket;

  static PreCrossedDatum make_zero(PoissonAlgebra base, std::size_t dim_v) {
    const Field f = base.field;
    const std::size_t n = base.dim;
    return {std::move(base),
            dim_v,
            BilinearTable(f, n, dim_v, dim_v),
            BilinearTable(f, dim_v, n, dim_v),
            BilinearTable(f, n, dim_v, dim_v),
            BilinearTable(f, n, n, dim_v),
            BilinearTable(f, n, n, dim_v),
            BilinearTable(f, dim_v, dim_v, dim_v),
            BilinearTable(f, dim_v, dim_v, dim_v)};
  }

  // All maps zero except the algebra structure carried by V.
  static PreCrossedDatum trivial(PoissonAlgebra base, const PoissonAlgebra& v) {
    if (base.field != v.field) throw FieldMismatchError("trivial datum: field mismatch");
    PreCrossedDatum d = make_zero(std::move(base), v.dim);
    d.v_mul = v.mul;
    d.v_bracket = v.bracket;
    return d;
  }

  PoissonAlgebra v_algebra() const {
    return {P.field, dim_v, v_mul, v_bracket, {}};
  }

  bool operator==(const PreCrossedDatum& o) const {
    return P == o.P && dim_v == o.dim_v && act_l == o.act_l && act_r == o.act_r &&
           act_lie == o.act_lie && theta == o.theta && eff == o.eff && v_mul == o.v_mul &&
           v_bracket == o.v_bracket;
  }
};

// Associative half of the system, ids H0..H7.  H0 is associativity of v_mul.
inline AxiomReport check_hochschild(const PreCrossedDatum& d) {
  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v;
  AxiomReport rep = verify_associative(d.v_algebra()).relabeled("H0");

  const auto ep = [&](std::size_t i) { return unit_vec(f, n, i); };
  const auto ev = [&](std::size_t i) { return unit_vec(f, m, i); };

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t p = 0; p < n; ++p) {
        // H1: (x y) <- p = x (y <- p)
        rep.require("H1", {x, y, p}, d.act_r.eval(d.v_mul.eval_basis(x, y), ep(p)),
                    d.v_mul.eval(ev(x), d.act_r.eval(ev(y), ep(p))));
        // H2: (x <- p) y = x (p -> y)
        rep.require("H2", {x, p, y}, d.v_mul.eval(d.act_r.eval_basis(x, p), ev(y)),
                    d.v_mul.eval(ev(x), d.act_l.eval_basis(p, y)));
        // H3: p -> (x y) = (p -> x) y
        rep.require("H3", {p, x, y}, d.act_l.eval(ep(p), d.v_mul.eval_basis(x, y)),
                    d.v_mul.eval(d.act_l.eval_basis(p, x), ev(y)));
      }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t q = 0; q < n; ++q)
        // H4: (p -> x) <- q = p -> (x <- q)
        rep.require("H4", {p, x, q}, d.act_r.eval(d.act_l.eval_basis(p, x), ep(q)),
                    d.act_l.eval(ep(p), d.act_r.eval_basis(x, q)));

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t r = 0; r < n; ++r) {
        // H5: theta(p,q) <- r = theta(p, qr) - theta(pq, r) + p -> theta(q,r)
        Vec rhs = sub(d.theta.eval(ep(p), d.P.mul.eval_basis(q, r)),
                      d.theta.eval(d.P.mul.eval_basis(p, q), ep(r)));
        rhs = add(rhs, d.act_l.eval(ep(p), d.theta.eval_basis(q, r)));
        rep.require("H5", {p, q, r}, d.act_r.eval(d.theta.eval_basis(p, q), ep(r)), rhs);
      }
      for (std::size_t x = 0; x < m; ++x) {
        // H6: (pq) -> x = p -> (q -> x) - theta(p,q) x
        rep.require("H6", {p, q, x}, d.act_l.eval(d.P.mul.eval_basis(p, q), ev(x)),
                    sub(d.act_l.eval(ep(p), d.act_l.eval_basis(q, x)),
                        d.v_mul.eval(d.theta.eval_basis(p, q), ev(x))));
        // H7: x <- (pq) = (x <- p) <- q - x theta(p,q)
        rep.require("H7", {x, p, q}, d.act_r.eval(ev(x), d.P.mul.eval_basis(p, q)),
                    sub(d.act_r.eval(d.act_r.eval_basis(x, p), ep(q)),
                        d.v_mul.eval(ev(x), d.theta.eval_basis(p, q))));
      }
    }
  return rep;
}

// Lie half of the system, ids L0..L4.  L0 is (V, v_bracket) being Lie.
inline AxiomReport check_lie_crossed(const PreCrossedDatum& d) {
  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v;
  AxiomReport rep = verify_lie(d.v_algebra()).relabeled("L0");

  const auto ep = [&](std::size_t i) { return unit_vec(f, n, i); };
  const auto ev = [&](std::size_t i) { return unit_vec(f, m, i); };

  // L1: eff alternating (diagonal zero and antisymmetric).
  for (std::size_t p = 0; p < n; ++p)
    rep.require("L1", {p}, d.eff.eval_basis(p, p), zero_vec(f, m));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      rep.require("L1", {p, q}, d.eff.eval_basis(p, q), negate(d.eff.eval_basis(q, p)));

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        // L2: p |> [x,y] = [p |> x, y] + [x, p |> y]
        rep.require("L2", {p, x, y}, d.act_lie.eval(ep(p), d.v_bracket.eval_basis(x, y)),
                    add(d.v_bracket.eval(d.act_lie.eval_basis(p, x), ev(y)),
                        d.v_bracket.eval(ev(x), d.act_lie.eval_basis(p, y))));

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t x = 0; x < m; ++x) {
        // L3: [p,q] |> x = p |> (q |> x) - q |> (p |> x) + [x, eff(p,q)]
        Vec rhs = sub(d.act_lie.eval(ep(p), d.act_lie.eval_basis(q, x)),
                      d.act_lie.eval(ep(q), d.act_lie.eval_basis(p, x)));
        rhs = add(rhs, d.v_bracket.eval(ev(x), d.eff.eval_basis(p, q)));
        rep.require("L3", {p, q, x}, d.act_lie.eval(d.P.bracket.eval_basis(p, q), ev(x)),
                    rhs);
      }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        // L4: eff(p,[q,r]) + eff(q,[r,p]) + eff(r,[p,q])
        //     + p |> eff(q,r) + q |> eff(r,p) + r |> eff(p,q) = 0
        Vec sum = d.eff.eval(ep(p), d.P.bracket.eval_basis(q, r));
        sum = add(sum, d.eff.eval(ep(q), d.P.bracket.eval_basis(r, p)));
        sum = add(sum, d.eff.eval(ep(r), d.P.bracket.eval_basis(p, q)));
        sum = add(sum, d.act_lie.eval(ep(p), d.eff.eval_basis(q, r)));
        sum = add(sum, d.act_lie.eval(ep(q), d.eff.eval_basis(r, p)));
        sum = add(sum, d.act_lie.eval(ep(r), d.eff.eval_basis(p, q)));
        rep.require("L4", {p, q, r}, sum, zero_vec(f, m));
      }
  return rep;
}

// Full validity battery: base P is Poisson, both halves above, (V, v_mul,
// v_bracket) is Poisson (its Leibniz part is tagged P0), and the seven mixed
// compatibilities P1..P7.  Passing is equivalent to the crossed product
// being a Poisson algebra.
inline AxiomReport check_crossed_system(const PreCrossedDatum& d) {
  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v;

  AxiomReport rep;
  {
    AxiomReport base = verify_poisson(d.P);
    for (auto& v : base.violations) v.axiom = "base:" + v.axiom;
    rep.merge(std::move(base));
  }
  rep.merge(check_hochschild(d));
  rep.merge(check_lie_crossed(d));
  rep.merge(verify_leibniz(d.v_algebra()).relabeled("P0"));

  const auto ep = [&](std::size_t i) { return unit_vec(f, n, i); };
  const auto ev = [&](std::size_t i) { return unit_vec(f, m, i); };

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) {
        // P1: eff(pq, r) - eff(p,r) <- q - p -> eff(q,r)
        //     = r |> theta(p,q) + theta([p,r], q) + theta(p, [q,r])
        Vec lhs = d.eff.eval(d.P.mul.eval_basis(p, q), ep(r));
        lhs = sub(lhs, d.act_r.eval(d.eff.eval_basis(p, r), ep(q)));
        lhs = sub(lhs, d.act_l.eval(ep(p), d.eff.eval_basis(q, r)));
        Vec rhs = d.act_lie.eval(ep(r), d.theta.eval_basis(p, q));
        rhs = add(rhs, d.theta.eval(d.P.bracket.eval_basis(p, r), ep(q)));
        rhs = add(rhs, d.theta.eval(ep(p), d.P.bracket.eval_basis(q, r)));
        rep.require("P1", {p, q, r}, lhs, rhs);
      }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t x = 0; x < m; ++x) {
        // P2: (pq) |> x = p -> (q |> x) + (p |> x) <- q - [theta(p,q), x]
        Vec rhs = add(d.act_l.eval(ep(p), d.act_lie.eval_basis(q, x)),
                      d.act_r.eval(d.act_lie.eval_basis(p, x), ep(q)));
        rhs = sub(rhs, d.v_bracket.eval(d.theta.eval_basis(p, q), ev(x)));
        rep.require("P2", {p, q, x}, d.act_lie.eval(d.P.mul.eval_basis(p, q), ev(x)), rhs);
        // P3: [p,q] -> x = p -> (q |> x) - q |> (p -> x) - eff(p,q) x
        Vec rhs3 = sub(d.act_l.eval(ep(p), d.act_lie.eval_basis(q, x)),
                       d.act_lie.eval(ep(q), d.act_l.eval_basis(p, x)));
        rhs3 = sub(rhs3, d.v_mul.eval(d.eff.eval_basis(p, q), ev(x)));
        rep.require("P3", {p, q, x}, d.act_l.eval(d.P.bracket.eval_basis(p, q), ev(x)),
                    rhs3);
        // P5: x <- [p,q] = (q |> x) <- p - q |> (x <- p) - x eff(p,q)
        Vec rhs5 = sub(d.act_r.eval(d.act_lie.eval_basis(q, x), ep(p)),
                       d.act_lie.eval(ep(q), d.act_r.eval_basis(x, p)));
        rhs5 = sub(rhs5, d.v_mul.eval(ev(x), d.eff.eval_basis(p, q)));
        rep.require("P5", {x, p, q}, d.act_r.eval(ev(x), d.P.bracket.eval_basis(p, q)),
                    rhs5);
      }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        // P4: p -> [x,y] = [p -> x, y] - (p |> y) x
        Vec rhs = sub(d.v_bracket.eval(d.act_l.eval_basis(p, x), ev(y)),
                      d.v_mul.eval(d.act_lie.eval_basis(p, y), ev(x)));
        rep.require("P4", {p, x, y}, d.act_l.eval(ep(p), d.v_bracket.eval_basis(x, y)),
                    rhs);
        // P6: [x,y] <- p = [x <- p, y] - x (p |> y)
        Vec rhs6 = sub(d.v_bracket.eval(d.act_r.eval_basis(x, p), ev(y)),
                       d.v_mul.eval(ev(x), d.act_lie.eval_basis(p, y)));
        rep.require("P6", {x, y, p}, d.act_r.eval(d.v_bracket.eval_basis(x, y), ep(p)),
                    rhs6);
        // P7: p |> (x y) = (p |> x) y + x (p |> y)
        Vec rhs7 = add(d.v_mul.eval(d.act_lie.eval_basis(p, x), ev(y)),
                       d.v_mul.eval(ev(x), d.act_lie.eval_basis(p, y)));
        rep.require("P7", {p, x, y}, d.act_lie.eval(ep(p), d.v_mul.eval_basis(x, y)),
                    rhs7);
      }
  return rep;
}

// The algebra P # V on basis (P-basis, then V-basis):
//   (p, x) * (q, y) = (pq,    theta(p,q) + p -> y + x <- q + x y)
//   {(p, x), (q, y)} = ([p,q], eff(p,q) + p |> y - q |> x + [x,y])
inline PoissonAlgebra crossed_product(const PreCrossedDatum& d) {
  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v, t = n + m;
  PoissonAlgebra e = PoissonAlgebra::zero(f, t);

  const auto put = [&](BilinearTable& table, std::size_t i, std::size_t j, const Vec& val,
                       std::size_t offset) {
    for (std::size_t k = 0; k < val.size(); ++k) {
      const Scalar cur = table.at(i, j, offset + k);
      table.at(i, j, offset + k) = cur + val[k];
    }
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      put(e.mul, i, j, d.P.mul.eval_basis(i, j), 0);
      put(e.mul, i, j, d.theta.eval_basis(i, j), n);
      put(e.bracket, i, j, d.P.bracket.eval_basis(i, j), 0);
      put(e.bracket, i, j, d.eff.eval_basis(i, j), n);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      put(e.mul, i, n + j, d.act_l.eval_basis(i, j), n);
      put(e.mul, n + j, i, d.act_r.eval_basis(j, i), n);
      put(e.bracket, i, n + j, d.act_lie.eval_basis(i, j), n);
      put(e.bracket, n + j, i, negate(d.act_lie.eval_basis(i, j)), n);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      put(e.mul, n + i, n + j, d.v_mul.eval_basis(i, j), n);
      put(e.bracket, n + i, n + j, d.v_bracket.eval_basis(i, j), n);
    }

  if (!d.P.names.empty()) {
    e.names = d.P.names;
    for (std::size_t j = 0; j < m; ++j) e.names.push_back("v" + std::to_string(j + 1));
  }
  return e;
}

// Crossed system with both cochains zero; describes split extensions.
inline PreCrossedDatum semidirect(PoissonAlgebra base, const PoissonAlgebra& v,
                                  const BilinearTable& act_l, const BilinearTable& act_r,
                                  const BilinearTable& act_lie) {
  PreCrossedDatum d = PreCrossedDatum::trivial(std::move(base), v);
  if (act_l.d1() != d.P.dim || act_l.d2() != v.dim || act_r.d1() != v.dim ||
      act_r.d2() != d.P.dim || act_lie.d1() != d.P.dim || act_lie.d2() != v.dim)
    throw ShapeError("semidirect: action shape mismatch");
  d.act_l = act_l;
  d.act_r = act_r;
  d.act_lie = act_lie;
  return d;
}

// Result of reading a crossed system off a projection pi: E -> P with linear
// section s.  phi = [s | kernel basis] is the induced isomorphism
// P # V -> E; it maps (p, x) to s(p) + x, fixes ker pi pointwise and lifts
// the P-basis through s.
struct Extraction {
  PreCrossedDatum datum;
  Matrix phi;
  Matrix section;
};

inline Extraction extract_crossed_system(const PoissonAlgebra& e, const PoissonAlgebra& p,
                                         const Matrix& pi,
                                         std::optional<Matrix> section = std::nullopt) {
  if (pi.rows() != p.dim || pi.cols() != e.dim)
    throw ShapeError("extract: pi must be dim(P) x dim(E)");
  if (e.field != p.field || pi.field() != e.field)
    throw FieldMismatchError("extract: field mismatch");

  Matrix s(e.field, 0, 0);
  if (section) {
    s = *section;
    if (s.rows() != e.dim || s.cols() != p.dim)
      throw ShapeError("extract: section must be dim(E) x dim(P)");
  } else {
    // Default section: right inverse with free coordinates zeroed, produced
    // by the same elimination pivot rule as everything else.
    auto inv = right_inverse(pi);
    if (!inv) throw NotASectionError("extract: pi is not surjective");
    s = *inv;
  }
  if (!(pi.mul(s) == Matrix::identity(e.field, p.dim)))
    throw NotASectionError("extract: pi composed with the section is not the identity");

  {
    const AxiomReport morph = check_poisson_morphism(pi, e, p);
    if (!morph.passed)
      throw NotAMorphismError("extract: pi is not a Poisson morphism (first failure: " +
                              morph.violations.front().axiom + ")");
  }

  const std::vector<Vec> kernel = nullspace_basis(pi);
  if (kernel.size() != e.dim - p.dim)
    throw ShapeError("extract: kernel dimension mismatch");
  const std::size_t m = kernel.size();
  Matrix k(e.field, e.dim, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < e.dim; ++i) k.at(i, j) = kernel[j][i];

  // Coordinates of a kernel element in the kernel basis.
  const auto to_v = [&](const Vec& w) {
    const auto sol = solve_linear(k, w);
    if (!sol.solvable) throw Error("extract: element not in the kernel");
    return sol.particular;
  };

  PreCrossedDatum d = PreCrossedDatum::make_zero(p, m);
  const auto sp = [&](std::size_t a) { return s.col(a); };  // s(p_a) in E
  const auto kv = [&](std::size_t b) { return k.col(b); };  // x_b in E

  for (std::size_t a = 0; a < p.dim; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      d.act_l.set_basis(a, b, to_v(e.mul.eval(sp(a), kv(b))));
      d.act_r.set_basis(b, a, to_v(e.mul.eval(kv(b), sp(a))));
      d.act_lie.set_basis(a, b, to_v(e.bracket.eval(sp(a), kv(b))));
    }
  for (std::size_t a = 0; a < p.dim; ++a)
    for (std::size_t b = 0; b < p.dim; ++b) {
      d.theta.set_basis(a, b,
                        to_v(sub(e.mul.eval(sp(a), sp(b)), s.apply(p.mul.eval_basis(a, b)))));
      d.eff.set_basis(
          a, b,
          to_v(sub(e.bracket.eval(sp(a), sp(b)), s.apply(p.bracket.eval_basis(a, b)))));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      d.v_mul.set_basis(a, b, to_v(e.mul.eval(kv(a), kv(b))));
      d.v_bracket.set_basis(a, b, to_v(e.bracket.eval(kv(a), kv(b))));
    }

  Matrix phi(e.field, e.dim, e.dim);
  for (std::size_t j = 0; j < p.dim; ++j)
    for (std::size_t i = 0; i < e.dim; ++i) phi.at(i, j) = s.at(i, j);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < e.dim; ++i) phi.at(i, p.dim + j) = k.at(i, j);

  // The transported product must reproduce E's tables; anything else is a
  // bug, not bad input.
  if (rank(phi) != e.dim) throw Error("extract: phi not invertible");
  if (!check_poisson_morphism(phi, crossed_product(d), e).passed)
    throw Error("extract: transport does not reproduce the input tables");

  return Extraction{std::move(d), std::move(phi), std::move(s)};
}

}  // namespace pax
