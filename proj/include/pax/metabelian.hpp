// Metabelian extensions: systems of one abelian algebra acting on another,
// the square-zero matrix characterization for one-dimensional bases, the
// explicit (n+1)-dimensional families, metabelian-ness testing, and
// classification at small dimensions.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/crossed.hpp"
#include "pax/equivalence.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace pax {

// Structure maps of a candidate extension of the abelian algebra on k^m by
// the abelian algebra on k^n.  Both cochains land in V; no multiplication or
// bracket survives on either side.
struct MetabelianSystem {
  Field field;
  std::size_t dim_p = 0, dim_v = 0;
  BilinearTable act_l;    // (m, n, n)  p -> x
  BilinearTable act_r;    // (n, m, n)  x <- p
  BilinearTable act_lie;  // (m, n, n)  p |> x
  BilinearTable theta;    // (m, m, n)
  BilinearTable eff;      // (m, m, n)

  static MetabelianSystem zero(const Field& f, std::size_t m, std::size_t n) {
    return {f,
            m,
            n,
            BilinearTable(f, m, n, n),
            BilinearTable(f, n, m, n),
            BilinearTable(f, m, n, n),
            BilinearTable(f, m, m, n),
            BilinearTable(f, m, m, n)};
  }

  bool operator==(const MetabelianSystem& o) const {
    return field == o.field && dim_p == o.dim_p && dim_v == o.dim_v && act_l == o.act_l &&
           act_r == o.act_r && act_lie == o.act_lie && theta == o.theta && eff == o.eff;
  }
};

// Validity battery, ids MS1..MS7:
//   MS1  (p -> x) <- q = p -> (x <- q)   and   theta(p,q) <- r = p -> theta(q,r)
//   MS2  p -> (q -> x) = 0               and   (x <- p) <- q = 0
//   MS3  f alternating                   and   p |> (q |> x) = q |> (p |> x)
//   MS4  p |> f(q,r) + q |> f(r,p) + r |> f(p,q) = 0
//   MS5  r |> theta(p,q) + f(p,r) <- q + p -> f(q,r) = 0
//   MS6  p -> (q |> x) = -(p |> x) <- q = q |> (p -> x)
//   MS7  (q |> x) <- p = q |> (x <- p)
inline AxiomReport check_metabelian_system(const MetabelianSystem& s) {
  const Field& f = s.field;
  const std::size_t m = s.dim_p, n = s.dim_v;
  if (s.act_l.d1() != m || s.act_l.d2() != n || s.act_l.dout() != n ||
      s.act_r.d1() != n || s.act_r.d2() != m || s.act_r.dout() != n ||
      s.act_lie.d1() != m || s.act_lie.d2() != n || s.act_lie.dout() != n ||
      s.theta.d1() != m || s.theta.d2() != m || s.theta.dout() != n || s.eff.d1() != m ||
      s.eff.d2() != m || s.eff.dout() != n)
    throw ShapeError("metabelian system: table shapes inconsistent");

  AxiomReport rep;
  const auto ep = [&](std::size_t i) { return unit_vec(f, m, i); };
  const Vec vzero = zero_vec(f, n);

  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t x = 0; x < n; ++x) {
        rep.require("MS1", {p, x, q}, s.act_r.eval(s.act_l.eval_basis(p, x), ep(q)),
                    s.act_l.eval(ep(p), s.act_r.eval_basis(x, q)));
        rep.require("MS2", {p, q, x}, s.act_l.eval(ep(p), s.act_l.eval_basis(q, x)), vzero);
        rep.require("MS2", {x, p, q}, s.act_r.eval(s.act_r.eval_basis(x, p), ep(q)), vzero);
        rep.require("MS3", {p, q, x}, s.act_lie.eval(ep(p), s.act_lie.eval_basis(q, x)),
                    s.act_lie.eval(ep(q), s.act_lie.eval_basis(p, x)));
        const Vec lhs6 = s.act_l.eval(ep(p), s.act_lie.eval_basis(q, x));
        rep.require("MS6", {p, q, x}, lhs6,
                    negate(s.act_r.eval(s.act_lie.eval_basis(p, x), ep(q))));
        rep.require("MS6", {p, q, x}, lhs6,
                    s.act_lie.eval(ep(q), s.act_l.eval_basis(p, x)));
        rep.require("MS7", {q, x, p}, s.act_r.eval(s.act_lie.eval_basis(q, x), ep(p)),
                    s.act_lie.eval(ep(q), s.act_r.eval_basis(x, p)));
      }

  for (std::size_t p = 0; p < m; ++p) rep.require("MS3", {p}, s.eff.eval_basis(p, p), vzero);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      rep.require("MS3", {p, q}, s.eff.eval_basis(p, q), negate(s.eff.eval_basis(q, p)));

  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) {
        rep.require("MS1", {p, q, r}, s.act_r.eval(s.theta.eval_basis(p, q), ep(r)),
                    s.act_l.eval(ep(p), s.theta.eval_basis(q, r)));
        Vec ms4 = s.act_lie.eval(ep(p), s.eff.eval_basis(q, r));
        ms4 = add(ms4, s.act_lie.eval(ep(q), s.eff.eval_basis(r, p)));
        ms4 = add(ms4, s.act_lie.eval(ep(r), s.eff.eval_basis(p, q)));
        rep.require("MS4", {p, q, r}, ms4, vzero);
        Vec ms5 = s.act_lie.eval(ep(r), s.theta.eval_basis(p, q));
        ms5 = add(ms5, s.act_r.eval(s.eff.eval_basis(p, r), ep(q)));
        ms5 = add(ms5, s.act_l.eval(ep(p), s.eff.eval_basis(q, r)));
        rep.require("MS5", {p, q, r}, ms5, vzero);
      }
  return rep;
}

// A metabelian system is exactly a crossed system whose base and fiber carry
// zero multiplication and bracket.
inline PreCrossedDatum lift_metabelian(const MetabelianSystem& s) {
  PreCrossedDatum d = PreCrossedDatum::make_zero(PoissonAlgebra::zero(s.field, s.dim_p),
                                                 s.dim_v);
  d.act_l = s.act_l;
  d.act_r = s.act_r;
  d.act_lie = s.act_lie;
  d.theta = s.theta;
  d.eff = s.eff;
  return d;
}

namespace detail {

// Inverse table reads; assumes the datum has metabelian shape.
inline MetabelianSystem read_metabelian(const PreCrossedDatum& d) {
  MetabelianSystem s = MetabelianSystem::zero(d.P.field, d.P.dim, d.dim_v);
  s.act_l = d.act_l;
  s.act_r = d.act_r;
  s.act_lie = d.act_lie;
  s.theta = d.theta;
  s.eff = d.eff;
  return s;
}

}  // namespace detail

// One-dimensional-base systems in matrix form: the three actions as n x n
// matrices, the single cochain value as theta0.
struct CMatrixDatum {
  Matrix a, b, c;
  Vec theta0;

  bool operator==(const CMatrixDatum& o) const {
    return a == o.a && b == o.b && c == o.c && theta0 == o.theta0;
  }
};

// Matrix identities, ids CM1..CM5:
//   CM1  AB = BA
//   CM2  AC = CA = -BC = -CB
//   CM3  A^2 = 0 and B^2 = 0
//   CM4  A theta0 = B theta0
//   CM5  C theta0 = 0
inline AxiomReport check_cmatrix(const CMatrixDatum& c) {
  const std::size_t n = c.a.rows();
  if (c.a.cols() != n || c.b.rows() != n || c.b.cols() != n || c.c.rows() != n ||
      c.c.cols() != n || c.theta0.size() != n)
    throw ShapeError("cmatrix: entries must be n x n with a length-n theta0");
  const Field& f = c.a.field();
  AxiomReport rep;

  const auto flat = [&](const Matrix& mm) {
    Vec v;
    for (std::size_t i = 0; i < mm.rows(); ++i)
      for (std::size_t j = 0; j < mm.cols(); ++j) v.push_back(mm.at(i, j));
    return v;
  };
  const auto neg = [&](const Matrix& mm) {
    Matrix r(f, mm.rows(), mm.cols());
    for (std::size_t i = 0; i < mm.rows(); ++i)
      for (std::size_t j = 0; j < mm.cols(); ++j) r.at(i, j) = Scalar::of(f, 0) - mm.at(i, j);
    return r;
  };

  const Matrix ab = c.a.mul(c.b), ba = c.b.mul(c.a);
  const Matrix ac = c.a.mul(c.c), ca = c.c.mul(c.a);
  const Matrix bc = c.b.mul(c.c), cb = c.c.mul(c.b);
  rep.require("CM1", {}, flat(ab), flat(ba));
  rep.require("CM2", {}, flat(ac), flat(ca));
  rep.require("CM2", {}, flat(ca), flat(neg(bc)));
  rep.require("CM2", {}, flat(bc), flat(cb));
  rep.require("CM3", {}, flat(c.a.mul(c.a)), zero_vec(f, n * n));
  rep.require("CM3", {}, flat(c.b.mul(c.b)), zero_vec(f, n * n));
  rep.require("CM4", {}, c.a.apply(c.theta0), c.b.apply(c.theta0));
  rep.require("CM5", {}, c.c.apply(c.theta0), zero_vec(f, n));
  return rep;
}

// The metabelian system of a matrix datum: single base element acting by A
// (left), B (right), C (bracket), with cochain value theta0.
inline MetabelianSystem lift_cmatrix(const CMatrixDatum& c) {
  const std::size_t n = c.a.rows();
  const Field& f = c.a.field();
  MetabelianSystem s = MetabelianSystem::zero(f, 1, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.act_l.at(0, i, j) = c.a.at(j, i);
      s.act_r.at(i, 0, j) = c.b.at(j, i);
      s.act_lie.at(0, i, j) = c.c.at(j, i);
    }
  for (std::size_t j = 0; j < n; ++j) s.theta.at(0, 0, j) = c.theta0[j];
  return s;
}

// The (n+1)-dimensional algebra with fiber basis E_1..E_n and top element
// E_{n+1}:
//   E_i * E_{n+1} = B e_i,  E_{n+1} * E_i = A e_i,  E_{n+1}^2 = theta0,
//   {E_{n+1}, E_i} = C e_i (bracket stored fully antisymmetrized).
inline PoissonAlgebra build_kn1_ABC(const CMatrixDatum& c) {
  {
    const AxiomReport rep = check_cmatrix(c);
    if (!rep.passed)
      throw InvalidCMatrixError("matrix datum fails " + rep.violations.front().axiom);
  }
  const std::size_t n = c.a.rows();
  const Field& f = c.a.field();
  PoissonAlgebra e = PoissonAlgebra::zero(f, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e.mul.at(i, n, j) = c.b.at(j, i);
      e.mul.at(n, i, j) = c.a.at(j, i);
      e.bracket.at(n, i, j) = c.c.at(j, i);
      e.bracket.at(i, n, j) = Scalar::of(f, 0) - c.c.at(j, i);
    }
  for (std::size_t j = 0; j < n; ++j) e.mul.at(n, n, j) = c.theta0[j];
  return e;
}

// Family with all products and brackets of fiber elements landing on the top
// element: E_i * E_j = theta_ij E_{n+1}, {E_i, E_j} = f_ij E_{n+1}.
inline PoissonAlgebra build_kn1_theta_f(const Matrix& theta, const Matrix& f) {
  const std::size_t n = theta.rows();
  if (theta.cols() != n || f.rows() != n || f.cols() != n)
    throw ShapeError("builder: theta and f must be square of equal size");
  const Field& fld = theta.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(f.at(i, j) + f.at(j, i)).is_zero())
        throw PreconditionError("builder: f must be alternating");
  PoissonAlgebra e = PoissonAlgebra::zero(fld, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e.mul.at(i, j, n) = theta.at(i, j);
      e.bracket.at(i, j, n) = f.at(i, j);
    }
  return e;
}

// Bracket-only family: {E_i, E_j} = f_ij E_{n+1}, {E_i, E_{n+1}} = gamma_i
// E_{n+1}; requires a nontrivial gamma (the theta/f family covers gamma = 0)
// and the gamma-weighted cyclic identity that makes the bracket Jacobi.
inline PoissonAlgebra build_kn1_gamma_f(const Vec& gamma, const Matrix& f) {
  const std::size_t n = gamma.size();
  if (f.rows() != n || f.cols() != n)
    throw ShapeError("builder: f must be square with side matching gamma");
  const Field& fld = f.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(f.at(i, j) + f.at(j, i)).is_zero())
        throw PreconditionError("builder: f must be alternating");
  if (is_zero_vec(gamma))
    throw PreconditionError(
        "builder: gamma must be nontrivial; use the theta/f family for gamma = 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar cyc = gamma[i] * f.at(j, k) + gamma[j] * f.at(k, i) +
                           gamma[k] * f.at(i, j);
        if (!cyc.is_zero())
          throw PreconditionError("builder: gamma-weighted cyclic identity fails");
      }
  PoissonAlgebra e = PoissonAlgebra::zero(fld, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e.bracket.at(i, j, n) = f.at(i, j);
    e.bracket.at(i, n, n) = gamma[i];
    e.bracket.at(n, i, n) = Scalar::of(fld, 0) - gamma[i];
  }
  return e;
}

// Derived-subspace test: D = span of all products and brackets is the
// smallest ideal with abelian quotient, so Q is metabelian exactly when D
// itself is abelian.  Returns a canonical basis of D (rows) in that case.
inline std::optional<Matrix> is_metabelian(const PoissonAlgebra& q) {
  {
    const AxiomReport rep = verify_poisson(q);
    if (!rep.passed)
      throw NotPoissonError("is_metabelian: input fails " + rep.violations.front().axiom);
  }
  std::vector<Vec> span;
  for (std::size_t i = 0; i < q.dim; ++i)
    for (std::size_t j = 0; j < q.dim; ++j) {
      span.push_back(q.mul.eval_basis(i, j));
      span.push_back(q.bracket.eval_basis(i, j));
    }
  const std::vector<Vec> basis = row_space_basis(q.field, span, q.dim);
  for (const Vec& u : basis)
    for (const Vec& w : basis)
      if (!is_zero_vec(q.mul.eval(u, w)) || !is_zero_vec(q.bracket.eval(u, w)))
        return std::nullopt;
  return Matrix::from_rows(q.field, basis, q.dim);
}

// Decider for two metabelian systems with the same dimensions: absent unless
// all three actions agree; then the two cochain relations are linear in the
// witness r (no transport terms, both sides being abelian).
inline std::optional<Matrix> equiv_metabelian(const MetabelianSystem& s,
                                              const MetabelianSystem& s2) {
  if (s.field != s2.field) throw FieldMismatchError("equiv_metabelian: field mismatch");
  if (s.dim_p != s2.dim_p || s.dim_v != s2.dim_v)
    throw ShapeError("equiv_metabelian: dimension mismatch");
  if (!(s.act_l == s2.act_l) || !(s.act_r == s2.act_r) || !(s.act_lie == s2.act_lie))
    return std::nullopt;

  const Field& f = s.field;
  const std::size_t m = s.dim_p, n = s.dim_v;
  // Unknowns r[x][a] at column a*n + x.
  Matrix sys(f, 2 * m * m * n, m * n);
  Vec rhs = zero_vec(f, 2 * m * m * n);
  const auto col = [&](std::size_t a_, std::size_t x_) { return a_ * n + x_; };
  std::size_t row = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        // theta(a,b)_c - theta'(a,b)_c = [a -> r(b)]_c + [r(a) <- b]_c
        for (std::size_t x = 0; x < n; ++x) {
          sys.at(row, col(b, x)) = sys.at(row, col(b, x)) + s2.act_l.at(a, x, c);
          sys.at(row, col(a, x)) = sys.at(row, col(a, x)) + s2.act_r.at(x, b, c);
        }
        rhs[row] = s.theta.at(a, b, c) - s2.theta.at(a, b, c);
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        // eff(a,b)_c - eff'(a,b)_c = [a |> r(b)]_c - [b |> r(a)]_c
        for (std::size_t x = 0; x < n; ++x) {
          sys.at(row, col(b, x)) = sys.at(row, col(b, x)) + s2.act_lie.at(a, x, c);
          sys.at(row, col(a, x)) = sys.at(row, col(a, x)) - s2.act_lie.at(b, x, c);
        }
        rhs[row] = s.eff.at(a, b, c) - s2.eff.at(a, b, c);
      }

  const SolutionSet sol = solve_linear(sys, rhs);
  if (!sol.solvable) return std::nullopt;
  Matrix r(f, n, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < n; ++x) r.at(x, a) = sol.particular[col(a, x)];
  return r;
}

// Matrix-form decider: absent unless A, B, C agree; then theta0 - theta0'
// must lie in the image of A + B.
inline std::optional<Vec> equiv_cmatrix(const CMatrixDatum& c, const CMatrixDatum& c2) {
  if (c.a.rows() != c2.a.rows()) throw ShapeError("equiv_cmatrix: dimension mismatch");
  if (!(c.a == c2.a) || !(c.b == c2.b) || !(c.c == c2.c)) return std::nullopt;
  const Matrix ab = c.a.add(c.b);
  const SolutionSet sol = solve_linear(ab, sub(c.theta0, c2.theta0));
  if (!sol.solvable) return std::nullopt;
  return sol.particular;
}

// Classification of extensions of k^m (abelian) by k^n (abelian) over F_p:
// staged enumeration (action triples filtered by their closed axioms, then
// the homogeneous linear cochain constraints per cell), quotient by
// equiv_metabelian.
inline ClassificationResult classify_metabelian(std::size_t m, std::size_t n,
                                                const Field& fld) {
  if (!fld.is_finite())
    throw InfiniteFieldError("classify_metabelian: finite field required");
  if (m * n > 6) throw TooLargeError("classify_metabelian: dim product above bound 6");
  {
    Integer cells = 1;
    const Integer cap = Integer(1) << 22;
    for (std::size_t t = 0; t < 3 * m * n * n; ++t) {
      cells *= fld.modulus();
      if (cells > cap) throw TooLargeError("classify_metabelian: action space above 2^22");
    }
  }

  std::vector<PreCrossedDatum> lifts;
  VectorEnumerator cells(fld, 3 * m * n * n);
  while (auto cell = cells.next()) {
    MetabelianSystem s = MetabelianSystem::zero(fld, m, n);
    std::size_t pos = 0;
    for (BilinearTable* t : {&s.act_l, &s.act_r, &s.act_lie})
      for (std::size_t i = 0; i < t->d1(); ++i)
        for (std::size_t j = 0; j < t->d2(); ++j)
          for (std::size_t k = 0; k < t->dout(); ++k) t->at(i, j, k) = (*cell)[pos++];

    // Action-only axioms: MS1 first half, MS2, MS3 second half, MS6, MS7.
    const auto ep = [&](std::size_t i) { return unit_vec(fld, m, i); };
    bool ok = true;
    for (std::size_t p = 0; ok && p < m; ++p)
      for (std::size_t q = 0; ok && q < m; ++q)
        for (std::size_t x = 0; ok && x < n; ++x) {
          const Vec lhs6 = s.act_l.eval(ep(p), s.act_lie.eval_basis(q, x));
          ok = s.act_r.eval(s.act_l.eval_basis(p, x), ep(q)) ==
                   s.act_l.eval(ep(p), s.act_r.eval_basis(x, q)) &&
               is_zero_vec(s.act_l.eval(ep(p), s.act_l.eval_basis(q, x))) &&
               is_zero_vec(s.act_r.eval(s.act_r.eval_basis(x, p), ep(q))) &&
               s.act_lie.eval(ep(p), s.act_lie.eval_basis(q, x)) ==
                   s.act_lie.eval(ep(q), s.act_lie.eval_basis(p, x)) &&
               lhs6 == negate(s.act_r.eval(s.act_lie.eval_basis(p, x), ep(q))) &&
               lhs6 == s.act_lie.eval(ep(q), s.act_l.eval_basis(p, x)) &&
               s.act_r.eval(s.act_lie.eval_basis(q, x), ep(p)) ==
                   s.act_lie.eval(ep(q), s.act_r.eval_basis(x, p));
        }
    if (!ok) continue;

    // Cochain constraints: unknowns theta_abc at (a*m+b)*n+c, eff at offset
    // m*m*n; rows from MS1 second half, MS3 alternating, MS4, MS5.
    const std::size_t mmn = m * m * n;
    const auto ti = [&](std::size_t a_, std::size_t b_, std::size_t c_) {
      return (a_ * m + b_) * n + c_;
    };
    const auto fi = [&](std::size_t a_, std::size_t b_, std::size_t c_) {
      return mmn + (a_ * m + b_) * n + c_;
    };
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row = zero_vec(fld, 2 * mmn);
        row[fi(a, a, c)] = Scalar::of(fld, 1);
        rows.push_back(std::move(row));
      }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Vec row = zero_vec(fld, 2 * mmn);
          row[fi(a, b, c)] = Scalar::of(fld, 1);
          row[fi(b, a, c)] = row[fi(b, a, c)] + Scalar::of(fld, 1);
          rows.push_back(std::move(row));
        }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t r_ = 0; r_ < m; ++r_)
          for (std::size_t c = 0; c < n; ++c) {
            Vec ms1 = zero_vec(fld, 2 * mmn);
            for (std::size_t x = 0; x < n; ++x) {
              ms1[ti(a, b, x)] = ms1[ti(a, b, x)] + s.act_r.at(x, r_, c);
              ms1[ti(b, r_, x)] = ms1[ti(b, r_, x)] - s.act_l.at(a, x, c);
            }
            rows.push_back(std::move(ms1));
            Vec ms4 = zero_vec(fld, 2 * mmn);
            for (std::size_t x = 0; x < n; ++x) {
              ms4[fi(b, r_, x)] = ms4[fi(b, r_, x)] + s.act_lie.at(a, x, c);
              ms4[fi(r_, a, x)] = ms4[fi(r_, a, x)] + s.act_lie.at(b, x, c);
              ms4[fi(a, b, x)] = ms4[fi(a, b, x)] + s.act_lie.at(r_, x, c);
            }
            rows.push_back(std::move(ms4));
            Vec ms5 = zero_vec(fld, 2 * mmn);
            for (std::size_t x = 0; x < n; ++x) {
              ms5[ti(a, b, x)] = ms5[ti(a, b, x)] + s.act_lie.at(r_, x, c);
              ms5[fi(a, r_, x)] = ms5[fi(a, r_, x)] + s.act_r.at(x, b, c);
              ms5[fi(b, r_, x)] = ms5[fi(b, r_, x)] + s.act_l.at(a, x, c);
            }
            rows.push_back(std::move(ms5));
          }

    const Matrix sys = Matrix::from_rows(fld, rows, 2 * mmn);
    const std::vector<Vec> basis = nullspace_basis(sys);
    VectorEnumerator coeffs(fld, basis.size());
    while (auto co = coeffs.next()) {
      Vec combo = zero_vec(fld, 2 * mmn);
      for (std::size_t t = 0; t < basis.size(); ++t)
        combo = add(combo, scale((*co)[t], basis[t]));
      MetabelianSystem full = s;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            full.theta.at(a, b, c) = combo[ti(a, b, c)];
            full.eff.at(a, b, c) = combo[fi(a, b, c)];
          }
      lifts.push_back(lift_metabelian(full));
    }
  }

  const auto decider = [](const PreCrossedDatum& a, const PreCrossedDatum& b) {
    auto w = equiv_metabelian(detail::read_metabelian(a), detail::read_metabelian(b));
    return w ? Decision::yes(std::move(*w)) : Decision::no("no metabelian witness");
  };
  return quotient_classes(lifts, decider,
                          [](const PreCrossedDatum&) { return std::string("metabelian"); });
}

}  // namespace pax
