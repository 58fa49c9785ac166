// Cohomologous equivalence of crossed systems: witnesses r: P -> V, the
// induced isomorphism psi_r, the decision ladder, and quotienting a candidate
// list into equivalence classes.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pax/crossed.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"

namespace pax {

// Two data are comparable when they share the base algebra, the fiber
// dimension and the field; only then is equivalence defined.
inline bool comparable(const PreCrossedDatum& a, const PreCrossedDatum& b) {
  return a.P.field == b.P.field && a.P == b.P && a.dim_v == b.dim_v;
}

// r is a witness that d is cohomologous to d2 (primed side) when all seven
// relations below hold.  r is dim_v x dim_p; r(p_a) is column a.
inline bool is_witness(const Matrix& r, const PreCrossedDatum& d, const PreCrossedDatum& d2) {
  if (!comparable(d, d2)) throw PreconditionError("is_witness: data not comparable");
  if (r.rows() != d.dim_v || r.cols() != d.P.dim || r.field() != d.P.field)
    throw ShapeError("is_witness: witness must be dim_v x dim_p over the same field");

  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v;
  const auto ep = [&](std::size_t i) { return unit_vec(f, n, i); };
  const auto ev = [&](std::size_t i) { return unit_vec(f, m, i); };
  const auto rc = [&](std::size_t a) { return r.col(a); };

  // M1, M5: the algebra carried by V is rigid.
  if (!(d.v_mul == d2.v_mul) || !(d.v_bracket == d2.v_bracket)) return false;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < m; ++x) {
      // M2: x <- p = x <-' p + x *' r(p)
      if (d.act_r.eval_basis(x, a) !=
          add(d2.act_r.eval_basis(x, a), d2.v_mul.eval(ev(x), rc(a))))
        return false;
      // M3: p -> x = p ->' x + r(p) *' x
      if (d.act_l.eval_basis(a, x) !=
          add(d2.act_l.eval_basis(a, x), d2.v_mul.eval(rc(a), ev(x))))
        return false;
      // M6: p |> x = p |>' x + [r(p), x]'
      if (d.act_lie.eval_basis(a, x) !=
          add(d2.act_lie.eval_basis(a, x), d2.v_bracket.eval(rc(a), ev(x))))
        return false;
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // M4: theta = theta' + p ->' r(q) + r(p) <-' q - r(pq) + r(p) *' r(q)
      Vec rhs = add(d2.theta.eval_basis(a, b), d2.act_l.eval(ep(a), rc(b)));
      rhs = add(rhs, d2.act_r.eval(rc(a), ep(b)));
      rhs = sub(rhs, r.apply(d.P.mul.eval_basis(a, b)));
      rhs = add(rhs, d2.v_mul.eval(rc(a), rc(b)));
      if (d.theta.eval_basis(a, b) != rhs) return false;
      // M7: eff = eff' + p |>' r(q) - q |>' r(p) + [r(p), r(q)]' - r([p,q])
      Vec rhs7 = add(d2.eff.eval_basis(a, b), d2.act_lie.eval(ep(a), rc(b)));
      rhs7 = sub(rhs7, d2.act_lie.eval(ep(b), rc(a)));
      rhs7 = add(rhs7, d2.v_bracket.eval(rc(a), rc(b)));
      rhs7 = sub(rhs7, r.apply(d.P.bracket.eval_basis(a, b)));
      if (d.eff.eval_basis(a, b) != rhs7) return false;
    }
  return true;
}

// The isomorphism induced by a witness: (p, x) -> (p, r(p) + x), as a matrix
// on the crossed-product basis (P block then V block).  psi_of(-r) inverts
// psi_of(r); witnesses compose additively along chains.
inline Matrix psi_of(const Matrix& r, std::size_t dim_p) {
  if (r.cols() != dim_p) throw ShapeError("psi_of: witness column count must be dim_p");
  const std::size_t m = r.rows(), t = dim_p + m;
  Matrix psi = Matrix::identity(r.field(), t);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t a = 0; a < dim_p; ++a) psi.at(dim_p + x, a) = r.at(x, a);
  return psi;
}

enum class Verdict { Cohomologous, NotCohomologous, Undecidable };

struct Decision {
  Verdict verdict;
  std::optional<Matrix> witness;  // set exactly when verdict == Cohomologous
  std::string reason;             // diagnostic for the other two verdicts

  static Decision yes(Matrix r) { return {Verdict::Cohomologous, std::move(r), {}}; }
  static Decision no(std::string why) {
    return {Verdict::NotCohomologous, std::nullopt, std::move(why)};
  }
  static Decision unknown(std::string why) {
    return {Verdict::Undecidable, std::nullopt, std::move(why)};
  }
};

// Decision ladder for "is d cohomologous to d2":
//   1. the V-algebra tables must agree outright (M1, M5 do not involve r);
//   2. abelian V: the three actions must agree and the cochain relations
//      become a linear system in the entries of r, solved exactly;
//   3. non-abelian V over a finite field: exhaust all witness candidates in
//      lexicographic order of the row-major flattening, first hit wins;
//   4. non-abelian V over Q: undecidable by this procedure.
inline Decision find_witness(const PreCrossedDatum& d, const PreCrossedDatum& d2) {
  if (!comparable(d, d2)) throw PreconditionError("find_witness: data not comparable");
  const Field& f = d.P.field;
  const std::size_t n = d.P.dim, m = d.dim_v;

  if (!(d.v_mul == d2.v_mul)) return Decision::no("V multiplications differ");
  if (!(d.v_bracket == d2.v_bracket)) return Decision::no("V brackets differ");

  const bool abelian = d2.v_mul.is_zero() && d2.v_bracket.is_zero();
  if (abelian) {
    if (!(d.act_l == d2.act_l)) return Decision::no("left actions differ");
    if (!(d.act_r == d2.act_r)) return Decision::no("right actions differ");
    if (!(d.act_lie == d2.act_lie)) return Decision::no("bracket actions differ");

    // Unknown r[x][a] at column a*m + x.  Rows: theta relation then eff
    // relation, each indexed by (a, b, c).
    const std::size_t unknowns = n * m;
    Matrix sys(f, 2 * n * n * m, unknowns);
    Vec rhs = zero_vec(f, 2 * n * n * m);
    const auto col = [&](std::size_t a, std::size_t x) { return a * m + x; };

    std::size_t row = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < m; ++c, ++row) {
          // theta(a,b)_c - theta'(a,b)_c =
          //   sum_x actL'[a][x][c] r[x][b] + sum_x actR'[x][b][c] r[x][a]
          //   - sum_k mul[a][b][k] r[c][k]
          for (std::size_t x = 0; x < m; ++x) {
            sys.at(row, col(b, x)) = sys.at(row, col(b, x)) + d2.act_l.at(a, x, c);
            sys.at(row, col(a, x)) = sys.at(row, col(a, x)) + d2.act_r.at(x, b, c);
          }
          for (std::size_t k = 0; k < n; ++k)
            sys.at(row, col(k, c)) = sys.at(row, col(k, c)) - d.P.mul.at(a, b, k);
          rhs[row] = d.theta.at(a, b, c) - d2.theta.at(a, b, c);
        }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < m; ++c, ++row) {
          // eff(a,b)_c - eff'(a,b)_c =
          //   sum_x actLie'[a][x][c] r[x][b] - sum_x actLie'[b][x][c] r[x][a]
          //   - sum_k bracket[a][b][k] r[c][k]
          for (std::size_t x = 0; x < m; ++x) {
            sys.at(row, col(b, x)) = sys.at(row, col(b, x)) + d2.act_lie.at(a, x, c);
            sys.at(row, col(a, x)) = sys.at(row, col(a, x)) - d2.act_lie.at(b, x, c);
          }
          for (std::size_t k = 0; k < n; ++k)
            sys.at(row, col(k, c)) = sys.at(row, col(k, c)) - d.P.bracket.at(a, b, k);
          rhs[row] = d.eff.at(a, b, c) - d2.eff.at(a, b, c);
        }

    const SolutionSet sol = solve_linear(sys, rhs);
    if (!sol.solvable) return Decision::no("cochain difference is not a coboundary");
    Matrix r(f, m, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < m; ++x) r.at(x, a) = sol.particular[col(a, x)];
    if (!is_witness(r, d, d2)) throw Error("find_witness: solver produced a non-witness");
    return Decision::yes(std::move(r));
  }

  if (f.is_finite()) {
    VectorEnumerator en(f, n * m);
    while (auto v = en.next()) {
      Matrix r(f, m, n);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t a = 0; a < n; ++a) r.at(x, a) = (*v)[x * n + a];
      if (is_witness(r, d, d2)) return Decision::yes(std::move(r));
    }
    return Decision::no("no witness exists (exhaustive search)");
  }
  return Decision::unknown("non-abelian fiber over Q: no general procedure");
}

// The datum induced by r over the trivial system: every structure map is the
// one forced by conjugating the direct product P x V by psi_r.  Always a
// valid crossed system when P and V are Poisson.
inline PreCrossedDatum coboundary_datum(const PoissonAlgebra& p, const PoissonAlgebra& v,
                                        const Matrix& r) {
  if (r.rows() != v.dim || r.cols() != p.dim)
    throw ShapeError("coboundary_datum: r must be dim_v x dim_p");
  PreCrossedDatum d = PreCrossedDatum::trivial(p, v);
  const Field& f = p.field;
  const auto ev = [&](std::size_t i) { return unit_vec(f, v.dim, i); };
  for (std::size_t a = 0; a < p.dim; ++a)
    for (std::size_t x = 0; x < v.dim; ++x) {
      d.act_l.set_basis(a, x, v.mul.eval(r.col(a), ev(x)));
      d.act_r.set_basis(x, a, v.mul.eval(ev(x), r.col(a)));
      d.act_lie.set_basis(a, x, v.bracket.eval(r.col(a), ev(x)));
    }
  for (std::size_t a = 0; a < p.dim; ++a)
    for (std::size_t b = 0; b < p.dim; ++b) {
      d.theta.set_basis(a, b,
                        sub(v.mul.eval(r.col(a), r.col(b)), r.apply(p.mul.eval_basis(a, b))));
      d.eff.set_basis(a, b, sub(v.bracket.eval(r.col(a), r.col(b)),
                                r.apply(p.bracket.eval_basis(a, b))));
    }
  return d;
}

inline Decision is_coboundary(const PreCrossedDatum& d) {
  return find_witness(d, PreCrossedDatum::trivial(d.P, d.v_algebra()));
}

// Total order on comparable data used to pick class representatives and sort
// classes deterministically.
inline Vec canonical_key(const PreCrossedDatum& d) {
  Vec key;
  for (const auto* t : {&d.act_l, &d.act_r, &d.theta, &d.v_mul, &d.act_lie, &d.eff,
                        &d.v_bracket})
    key.insert(key.end(), t->flat().begin(), t->flat().end());
  return key;
}

struct ClassEntry {
  PreCrossedDatum rep;  // minimal canonical key within the class
  std::string family;
  std::size_t size = 0;
};

struct ClassificationResult {
  std::vector<ClassEntry> classes;
  std::size_t candidates = 0;  // class sizes sum to this
  std::size_t total() const { return classes.size(); }
};

// Partition `data` by the decider.  The decider must return a Decision;
// Undecidable aborts the classification rather than guessing.  `family`
// labels each class by its representative.
template <typename Decider, typename FamilyFn>
ClassificationResult quotient_classes(const std::vector<PreCrossedDatum>& data,
                                      Decider&& same, FamilyFn&& family) {
  std::vector<std::size_t> parent(data.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };

  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const std::size_t ri = find(i), rj = find(j);
      if (ri == rj) continue;
      const Decision dec = same(data[i], data[j]);
      if (dec.verdict == Verdict::Undecidable)
        throw UndecidableError("quotient: decider declined a pair: " + dec.reason);
      if (dec.verdict == Verdict::Cohomologous) parent[rj] = ri;
    }

  std::vector<std::size_t> roots;
  std::vector<std::size_t> class_of(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      class_of[i] = roots.size() - 1;
    } else {
      class_of[i] = static_cast<std::size_t>(it - roots.begin());
    }
  }

  ClassificationResult res;
  res.candidates = data.size();
  res.classes.reserve(roots.size());
  std::vector<std::optional<std::size_t>> rep_of(roots.size());
  std::vector<std::size_t> size_of(roots.size(), 0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::size_t c = class_of[i];
    ++size_of[c];
    if (!rep_of[c] || compare(canonical_key(data[i]), canonical_key(data[*rep_of[c]])) < 0)
      rep_of[c] = i;
  }
  for (std::size_t c = 0; c < roots.size(); ++c)
    res.classes.push_back({data[*rep_of[c]], family(data[*rep_of[c]]), size_of[c]});

  std::sort(res.classes.begin(), res.classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
    if (a.family != b.family) return a.family < b.family;
    return compare(canonical_key(a.rep), canonical_key(b.rep)) < 0;
  });
  return res;
}

template <typename Decider>
ClassificationResult quotient_classes(const std::vector<PreCrossedDatum>& data,
                                      Decider&& same) {
  return quotient_classes(data, std::forward<Decider>(same),
                          [](const PreCrossedDatum&) { return std::string(); });
}

}  // namespace pax
