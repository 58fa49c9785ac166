// Line-oriented text formats: algebras, crossed systems, matrices, co-flag
// data, matrix-form metabelian data, and classification reports.  Grammar is
// whitespace-tokenized; '#' starts a comment; indices are 1-based; omitted
// entries are zero.  Emission is canonical (fixed order, zero entries
// skipped), so identical values produce identical bytes.
#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/coflag.hpp"
#include "pax/crossed.hpp"
#include "pax/equivalence.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/linalg.hpp"
#include "pax/metabelian.hpp"

namespace pax {

// Mirror completion for hand-written files: fill each unspecified (j, i)
// multiplication row from (i, j), and each unspecified bracket row with the
// negated mirror.  Applies to algebra mul/bracket and to the P/V tables of a
// system file, never to cochains.  Explicit rows always win; inconsistent
// pairs are left for the axiom checkers to report.
struct ParseOptions {
  bool symmetrize_mul = false;
  bool antisymmetrize_bracket = false;
};

namespace detail {

struct Line {
  std::size_t no;
  std::vector<std::string> toks;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back({no, std::move(toks)});
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : lines_(tokenize(text)) {}

  bool done() const { return pos_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError(last_ + 1, "unexpected end of input");
    return lines_[pos_];
  }

  Line take() {
    Line l = peek();
    last_ = l.no;
    ++pos_;
    return l;
  }

  // Line number to blame when input runs out.
  std::size_t here() const { return done() ? last_ + 1 : lines_[pos_].no; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

inline std::size_t parse_count(const std::string& tok, std::size_t line,
                               const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
      tok.size() > 9)
    throw ParseError(line, what + " must be a small nonnegative integer, got '" + tok + "'");
  return static_cast<std::size_t>(std::stoul(tok));
}

// 1-based index in [1, dim]; returns the 0-based value.
inline std::size_t parse_index(const std::string& tok, std::size_t line, std::size_t dim,
                               const std::string& what) {
  std::size_t v;
  try {
    v = parse_count(tok, line, what);
  } catch (const ParseError&) {
    throw IndexOutOfRangeError(line, what + " '" + tok + "' is not an index");
  }
  if (v < 1 || v > dim)
    throw IndexOutOfRangeError(
        line, what + " " + tok + " outside [1, " + std::to_string(dim) + "]");
  return v - 1;
}

inline Field parse_field_line(const Line& l) {
  if (l.toks.size() < 2 || l.toks[0] != "field")
    throw ParseError(l.no, "expected 'field Q' or 'field F <p>'");
  std::string rest = l.toks[1];
  for (std::size_t i = 2; i < l.toks.size(); ++i) rest += " " + l.toks[i];
  try {
    return Field::parse(rest);
  } catch (const Error& e) {
    throw FieldSyntaxError(l.no, e.what());
  }
}

inline std::size_t parse_count_line(Cursor& cur, const std::string& key) {
  const Line l = cur.take();
  if (l.toks.size() != 2 || l.toks[0] != key)
    throw ParseError(l.no, "expected '" + key + " <n>'");
  return parse_count(l.toks[1], l.no, key);
}

inline void expect_header(Cursor& cur, const std::string& kind) {
  const Line l = cur.take();
  if (l.toks.size() != 2 || l.toks[0] != kind || l.toks[1] != "v1")
    throw ParseError(l.no, "expected header '" + kind + " v1'");
}

inline void require_done(const Cursor& cur) {
  if (!cur.done()) throw ParseError(cur.peek().no, "content after 'end'");
}

using RowSet = std::set<std::pair<std::size_t, std::size_t>>;

// "<kw...> <i> <j> : (<k> <scalar>)+" with the keyword tokens already
// identified; kwlen is how many tokens they occupy.
inline void parse_table_row(BilinearTable& t, const Line& l, std::size_t kwlen,
                            RowSet& seen, const std::string& what) {
  if (l.toks.size() < kwlen + 5 || l.toks[kwlen + 2] != ":")
    throw ParseError(l.no, "expected '" + what + " <i> <j> : <k> <scalar> ...'");
  const std::size_t i = parse_index(l.toks[kwlen], l.no, t.d1(), what + " row index");
  const std::size_t j = parse_index(l.toks[kwlen + 1], l.no, t.d2(), what + " column index");
  if (!seen.insert({i, j}).second)
    throw ParseError(l.no, "duplicate " + what + " row (" + l.toks[kwlen] + ", " +
                               l.toks[kwlen + 1] + ")");
  if ((l.toks.size() - kwlen - 3) % 2 != 0)
    throw ParseError(l.no, "expected (<k> <scalar>) pairs after ':'");
  std::set<std::size_t> ks;
  for (std::size_t pos = kwlen + 3; pos < l.toks.size(); pos += 2) {
    const std::size_t k = parse_index(l.toks[pos], l.no, t.dout(), what + " target index");
    if (!ks.insert(k).second)
      throw ParseError(l.no, "duplicate target index " + l.toks[pos]);
    t.at(i, j, k) = Scalar::parse(t.field(), l.toks[pos + 1], l.no);
  }
}

// Fill mirrors of explicitly given rows; square tables only.
inline void complete_mirror(BilinearTable& t, const RowSet& seen, bool negated) {
  for (const auto& [i, j] : seen) {
    if (i == j || seen.count({j, i})) continue;
    t.set_basis(j, i, negated ? negate(t.eval_basis(i, j)) : t.eval_basis(i, j));
  }
}

inline void emit_table_rows(std::ostream& out, const std::string& prefix,
                            const BilinearTable& t) {
  for (std::size_t i = 0; i < t.d1(); ++i)
    for (std::size_t j = 0; j < t.d2(); ++j) {
      bool any = false;
      for (std::size_t k = 0; k < t.dout(); ++k)
        if (!t.at(i, j, k).is_zero()) any = true;
      if (!any) continue;
      out << prefix << ' ' << i + 1 << ' ' << j + 1 << " :";
      for (std::size_t k = 0; k < t.dout(); ++k)
        if (!t.at(i, j, k).is_zero()) out << ' ' << k + 1 << ' ' << t.at(i, j, k).str();
      out << '\n';
    }
}

inline Vec parse_scalar_list(const Line& l, std::size_t from, std::size_t n,
                             const Field& f) {
  if (l.toks.size() != from + n)
    throw ParseError(l.no, "expected exactly " + std::to_string(n) + " scalars after '" +
                               l.toks[0] + "'");
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(Scalar::parse(f, l.toks[from + i], l.no));
  return v;
}

inline void emit_scalar_list(std::ostream& out, const Vec& v) {
  for (const Scalar& s : v) out << ' ' << s.str();
  out << '\n';
}

inline PoissonAlgebra parse_algebra_body(Cursor& cur, const ParseOptions& opts) {
  expect_header(cur, "poisson-algebra");
  const Field fld = parse_field_line(cur.take());
  const std::size_t n = parse_count_line(cur, "dim");
  PoissonAlgebra p = PoissonAlgebra::zero(fld, n);
  RowSet seen_mul, seen_br;
  std::set<std::size_t> named;
  bool ended = false;
  while (!cur.done()) {
    const Line l = cur.take();
    const std::string& kw = l.toks[0];
    if (kw == "end") {
      if (l.toks.size() != 1) throw ParseError(l.no, "'end' takes no arguments");
      ended = true;
      break;
    } else if (kw == "name") {
      if (l.toks.size() != 3) throw ParseError(l.no, "expected 'name <i> <label>'");
      const std::size_t i = parse_index(l.toks[1], l.no, n, "name index");
      if (!named.insert(i).second)
        throw ParseError(l.no, "duplicate name for index " + l.toks[1]);
      if (p.names.empty())
        for (std::size_t k = 0; k < n; ++k) p.names.push_back("e" + std::to_string(k + 1));
      p.names[i] = l.toks[2];
    } else if (kw == "mul") {
      parse_table_row(p.mul, l, 1, seen_mul, "mul");
    } else if (kw == "bracket") {
      parse_table_row(p.bracket, l, 1, seen_br, "bracket");
    } else {
      throw ParseError(l.no, "unknown directive '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(cur.here(), "missing 'end'");
  if (opts.symmetrize_mul) complete_mirror(p.mul, seen_mul, false);
  if (opts.antisymmetrize_bracket) complete_mirror(p.bracket, seen_br, true);
  return p;
}

inline PreCrossedDatum parse_system_body(Cursor& cur, const ParseOptions& opts) {
  expect_header(cur, "crossed-system");
  const Field fld = parse_field_line(cur.take());
  const std::size_t n = parse_count_line(cur, "dimP");
  const std::size_t m = parse_count_line(cur, "dimV");
  PreCrossedDatum d = PreCrossedDatum::make_zero(PoissonAlgebra::zero(fld, n), m);
  RowSet seen_pm, seen_pb, seen_vm, seen_vb, seen_l, seen_r, seen_lie, seen_th, seen_f;
  bool ended = false;
  while (!cur.done()) {
    const Line l = cur.take();
    const std::string& kw = l.toks[0];
    if (kw == "end") {
      if (l.toks.size() != 1) throw ParseError(l.no, "'end' takes no arguments");
      ended = true;
      break;
    } else if (kw == "P" || kw == "V") {
      if (l.toks.size() < 2 || (l.toks[1] != "mul" && l.toks[1] != "bracket"))
        throw ParseError(l.no, "expected '" + kw + " mul' or '" + kw + " bracket'");
      const bool isMul = l.toks[1] == "mul";
      BilinearTable& t = kw == "P" ? (isMul ? d.P.mul : d.P.bracket)
                                   : (isMul ? d.v_mul : d.v_bracket);
      RowSet& seen = kw == "P" ? (isMul ? seen_pm : seen_pb) : (isMul ? seen_vm : seen_vb);
      parse_table_row(t, l, 2, seen, kw + " " + l.toks[1]);
    } else if (kw == "actL") {
      parse_table_row(d.act_l, l, 1, seen_l, "actL");
    } else if (kw == "actR") {
      parse_table_row(d.act_r, l, 1, seen_r, "actR");
    } else if (kw == "actLie") {
      parse_table_row(d.act_lie, l, 1, seen_lie, "actLie");
    } else if (kw == "theta") {
      parse_table_row(d.theta, l, 1, seen_th, "theta");
    } else if (kw == "eff") {
      parse_table_row(d.eff, l, 1, seen_f, "eff");
    } else {
      throw ParseError(l.no, "unknown directive '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(cur.here(), "missing 'end'");
  if (opts.symmetrize_mul) {
    complete_mirror(d.P.mul, seen_pm, false);
    complete_mirror(d.v_mul, seen_vm, false);
  }
  if (opts.antisymmetrize_bracket) {
    complete_mirror(d.P.bracket, seen_pb, true);
    complete_mirror(d.v_bracket, seen_vb, true);
  }
  return d;
}

}  // namespace detail

inline PoissonAlgebra parse_algebra(const std::string& text, const ParseOptions& opts = {}) {
  detail::Cursor cur(text);
  PoissonAlgebra p = detail::parse_algebra_body(cur, opts);
  detail::require_done(cur);
  return p;
}

inline std::string emit_algebra(const PoissonAlgebra& p) {
  std::ostringstream out;
  out << "poisson-algebra v1\n"
      << "field " << p.field.str() << '\n'
      << "dim " << p.dim << '\n';
  if (!p.names.empty())
    for (std::size_t i = 0; i < p.dim; ++i)
      if (!p.names[i].empty()) out << "name " << i + 1 << ' ' << p.names[i] << '\n';
  detail::emit_table_rows(out, "mul", p.mul);
  detail::emit_table_rows(out, "bracket", p.bracket);
  out << "end\n";
  return out.str();
}

inline PreCrossedDatum parse_system(const std::string& text, const ParseOptions& opts = {}) {
  detail::Cursor cur(text);
  PreCrossedDatum d = detail::parse_system_body(cur, opts);
  detail::require_done(cur);
  return d;
}

inline std::string emit_system(const PreCrossedDatum& d) {
  std::ostringstream out;
  out << "crossed-system v1\n"
      << "field " << d.P.field.str() << '\n'
      << "dimP " << d.P.dim << '\n'
      << "dimV " << d.dim_v << '\n';
  detail::emit_table_rows(out, "P mul", d.P.mul);
  detail::emit_table_rows(out, "P bracket", d.P.bracket);
  detail::emit_table_rows(out, "V mul", d.v_mul);
  detail::emit_table_rows(out, "V bracket", d.v_bracket);
  detail::emit_table_rows(out, "actL", d.act_l);
  detail::emit_table_rows(out, "actR", d.act_r);
  detail::emit_table_rows(out, "actLie", d.act_lie);
  detail::emit_table_rows(out, "theta", d.theta);
  detail::emit_table_rows(out, "eff", d.eff);
  out << "end\n";
  return out.str();
}

// Matrix files carry no field line; the field comes from context.
inline Matrix parse_matrix(const std::string& text, const Field& f) {
  detail::Cursor cur(text);
  detail::expect_header(cur, "matrix");
  const std::size_t r = detail::parse_count_line(cur, "rows");
  const std::size_t c = detail::parse_count_line(cur, "cols");
  Matrix m(f, r, c);
  if (c > 0)
    for (std::size_t i = 0; i < r; ++i) {
      const detail::Line l = cur.take();
      if (l.toks.size() != c)
        throw ParseError(l.no, "expected " + std::to_string(c) + " scalars in matrix row");
      if (l.toks[0] == "end") throw ParseError(l.no, "matrix body shorter than 'rows'");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::parse(f, l.toks[j], l.no);
    }
  const detail::Line l = cur.take();
  if (l.toks.size() != 1 || l.toks[0] != "end") throw ParseError(l.no, "expected 'end'");
  detail::require_done(cur);
  return m;
}

inline std::string emit_matrix(const Matrix& m) {
  std::ostringstream out;
  out << "matrix v1\n"
      << "rows " << m.rows() << '\n'
      << "cols " << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.cols() == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << m.at(i, j).str();
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

// Co-flag data: "u 0" (or no u line) tags the abelian family, in which case
// Lambda/gamma/f describe it; u != 0 tags the non-abelian family, whose only
// data beyond u are lambda and theta.
inline CoflagDatum parse_coflag(const std::string& text) {
  detail::Cursor cur(text);
  detail::expect_header(cur, "coflag");
  const Field fld = detail::parse_field_line(cur.take());
  const std::size_t n = detail::parse_count_line(cur, "dimP");
  Vec lambda = zero_vec(fld, n), Lambda = zero_vec(fld, n), gamma = zero_vec(fld, n);
  Matrix theta(fld, n, n), f(fld, n, n);
  std::optional<Scalar> u;
  detail::RowSet seen_th, seen_f;
  std::size_t abelian_only_line = 0, u_line = 0;
  std::set<std::string> seen_vec;
  bool ended = false;
  while (!cur.done()) {
    const detail::Line l = cur.take();
    const std::string& kw = l.toks[0];
    if (kw == "end") {
      if (l.toks.size() != 1) throw ParseError(l.no, "'end' takes no arguments");
      ended = true;
      break;
    } else if (kw == "lambda" || kw == "Lambda" || kw == "gamma") {
      if (!seen_vec.insert(kw).second)
        throw ParseError(l.no, "duplicate '" + kw + "' line");
      Vec v = detail::parse_scalar_list(l, 1, n, fld);
      if (kw == "lambda")
        lambda = std::move(v);
      else if (kw == "Lambda")
        Lambda = std::move(v);
      else
        gamma = std::move(v);
      if (kw != "lambda") abelian_only_line = l.no;
    } else if (kw == "theta" || kw == "f") {
      if (l.toks.size() != 4)
        throw ParseError(l.no, "expected '" + kw + " <i> <j> <scalar>'");
      const std::size_t i = detail::parse_index(l.toks[1], l.no, n, kw + " row index");
      const std::size_t j = detail::parse_index(l.toks[2], l.no, n, kw + " column index");
      detail::RowSet& seen = kw == "theta" ? seen_th : seen_f;
      if (!seen.insert({i, j}).second)
        throw ParseError(l.no,
                         "duplicate " + kw + " entry (" + l.toks[1] + ", " + l.toks[2] + ")");
      (kw == "theta" ? theta : f).at(i, j) = Scalar::parse(fld, l.toks[3], l.no);
      if (kw == "f") abelian_only_line = l.no;
    } else if (kw == "u") {
      if (l.toks.size() != 2) throw ParseError(l.no, "expected 'u <scalar>'");
      if (u) throw ParseError(l.no, "duplicate 'u' line");
      u = Scalar::parse(fld, l.toks[1], l.no);
      u_line = l.no;
    } else {
      throw ParseError(l.no, "unknown directive '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(cur.here(), "missing 'end'");
  detail::require_done(cur);
  if (u && !u->is_zero()) {
    if (abelian_only_line != 0)
      throw ParseError(std::max(abelian_only_line, u_line),
                       "non-abelian datum (u != 0) forbids 'Lambda', 'gamma', and 'f' lines");
    return NonabelianCoflagDatum{fld, n, std::move(lambda), std::move(theta), *u};
  }
  return AbelianCoflagDatum{fld,
                            n,
                            std::move(lambda),
                            std::move(Lambda),
                            std::move(gamma),
                            std::move(theta),
                            std::move(f)};
}

inline std::string emit_coflag(const CoflagDatum& c) {
  std::ostringstream out;
  const Field& fld = coflag_field(c);
  const std::size_t n = coflag_dim(c);
  out << "coflag v1\n"
      << "field " << fld.str() << '\n'
      << "dimP " << n << '\n';
  const auto grid = [&](const char* kw, const Matrix& m) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m.at(i, j).is_zero())
          out << kw << ' ' << i + 1 << ' ' << j + 1 << ' ' << m.at(i, j).str() << '\n';
  };
  if (is_abelian(c)) {
    const auto& a = std::get<AbelianCoflagDatum>(c);
    out << "lambda";
    detail::emit_scalar_list(out, a.lambda);
    out << "Lambda";
    detail::emit_scalar_list(out, a.Lambda);
    out << "gamma";
    detail::emit_scalar_list(out, a.gamma);
    grid("theta", a.theta);
    grid("f", a.f);
    out << "u 0\n";
  } else {
    const auto& b = std::get<NonabelianCoflagDatum>(c);
    out << "lambda";
    detail::emit_scalar_list(out, b.lambda);
    grid("theta", b.theta);
    out << "u " << b.u.str() << '\n';
  }
  out << "end\n";
  return out.str();
}

// Matrix-form metabelian data: three n x n blocks and the theta0 row.
inline CMatrixDatum parse_cmatrix(const std::string& text) {
  detail::Cursor cur(text);
  detail::expect_header(cur, "cmatrix");
  const Field fld = detail::parse_field_line(cur.take());
  const std::size_t n = detail::parse_count_line(cur, "dim");
  CMatrixDatum c{Matrix(fld, n, n), Matrix(fld, n, n), Matrix(fld, n, n), zero_vec(fld, n)};
  std::set<std::string> seen;
  bool ended = false;
  while (!cur.done()) {
    const detail::Line l = cur.take();
    const std::string& kw = l.toks[0];
    if (kw == "end") {
      if (l.toks.size() != 1) throw ParseError(l.no, "'end' takes no arguments");
      ended = true;
      break;
    } else if (kw == "A" || kw == "B" || kw == "C") {
      if (l.toks.size() != 1)
        throw ParseError(l.no, "'" + kw + "' starts a block and takes no arguments");
      if (!seen.insert(kw).second) throw ParseError(l.no, "duplicate '" + kw + "' block");
      Matrix& m = kw == "A" ? c.a : kw == "B" ? c.b : c.c;
      for (std::size_t i = 0; i < n; ++i) {
        const detail::Line row = cur.take();
        if (row.toks.size() != n)
          throw ParseError(row.no,
                           "expected " + std::to_string(n) + " scalars in '" + kw + "' row");
        for (std::size_t j = 0; j < n; ++j)
          m.at(i, j) = Scalar::parse(fld, row.toks[j], row.no);
      }
    } else if (kw == "theta0") {
      if (!seen.insert(kw).second) throw ParseError(l.no, "duplicate 'theta0' line");
      c.theta0 = detail::parse_scalar_list(l, 1, n, fld);
    } else {
      throw ParseError(l.no, "unknown directive '" + kw + "'");
    }
  }
  if (!ended) throw ParseError(cur.here(), "missing 'end'");
  detail::require_done(cur);
  return c;
}

inline std::string emit_cmatrix(const CMatrixDatum& c) {
  std::ostringstream out;
  const std::size_t n = c.a.rows();
  out << "cmatrix v1\n"
      << "field " << c.a.field().str() << '\n'
      << "dim " << n << '\n';
  const auto block = [&](const char* kw, const Matrix& m) {
    out << kw << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << m.at(i, j).str();
      out << '\n';
    }
  };
  block("A", c.a);
  block("B", c.b);
  block("C", c.c);
  out << "theta0";
  detail::emit_scalar_list(out, c.theta0);
  out << "end\n";
  return out.str();
}

// Classification reports embed each representative as a complete
// crossed-system block so it can be fed back to `check-system` verbatim.
// The family tag "-" stands for an empty tag.
inline std::string emit_classification(const ClassificationResult& r, const Field& f) {
  std::ostringstream out;
  out << "classification v1\n"
      << "field " << f.str() << '\n'
      << "candidates " << r.candidates << '\n'
      << "total " << r.classes.size() << '\n';
  for (const ClassEntry& c : r.classes) {
    out << "family " << (c.family.empty() ? "-" : c.family) << '\n'
        << "size " << c.size << '\n'
        << emit_system(c.rep);
  }
  out << "end\n";
  return out.str();
}

inline std::pair<Field, ClassificationResult> parse_classification(const std::string& text) {
  detail::Cursor cur(text);
  detail::expect_header(cur, "classification");
  const Field fld = detail::parse_field_line(cur.take());
  ClassificationResult r;
  r.candidates = detail::parse_count_line(cur, "candidates");
  const std::size_t total = detail::parse_count_line(cur, "total");
  for (std::size_t k = 0; k < total; ++k) {
    detail::Line l = cur.take();
    if (l.toks.size() != 2 || l.toks[0] != "family")
      throw ParseError(l.no, "expected 'family <tag>'");
    ClassEntry entry{PreCrossedDatum::make_zero(PoissonAlgebra::zero(fld, 0), 0),
                     l.toks[1] == "-" ? "" : l.toks[1], 0};
    l = cur.take();
    if (l.toks.size() != 2 || l.toks[0] != "size")
      throw ParseError(l.no, "expected 'size <n>'");
    entry.size = detail::parse_count(l.toks[1], l.no, "size");
    entry.rep = detail::parse_system_body(cur, ParseOptions{});
    r.classes.push_back(std::move(entry));
  }
  const detail::Line l = cur.take();
  if (l.toks.size() != 1 || l.toks[0] != "end") throw ParseError(l.no, "expected 'end'");
  detail::require_done(cur);
  return {fld, std::move(r)};
}

}  // namespace pax
