// Exact scalar arithmetic over Q (arbitrary-precision rationals) and over
// prime fields F_p.  No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "pax/errors.hpp"

namespace pax {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(num, den) = 1 and den > 0, which is exactly the
// canonical form the emitters rely on.
using Rational = boost::multiprecision::cpp_rational;

// The coefficient field: Q, or F_p for a prime p < 2^15.  The cap keeps
// residue products inside int64 without any overflow checks downstream.
class Field {
 public:
  static constexpr long kMaxModulus = 1 << 15;

  static Field rationals() { return Field(0); }

  static Field prime(long p) {
    if (p < 2 || p > kMaxModulus)
      throw InvalidFieldError("field modulus out of range: " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw InvalidFieldError("field modulus is composite: " + std::to_string(p));
    return Field(static_cast<std::uint32_t>(p));
  }

  bool is_finite() const { return p_ != 0; }

  // p for F_p, 0 for Q.
  long characteristic() const { return static_cast<long>(p_); }

  long modulus() const {
    if (!is_finite()) throw InfiniteFieldError("Q has no modulus");
    return static_cast<long>(p_);
  }

  bool operator==(const Field&) const = default;

  std::string str() const {
    return is_finite() ? "F " + std::to_string(p_) : "Q";
  }

  // Accepts "Q" or "F <p>" (any interior whitespace).
  static Field parse(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    if (!(in >> kind)) throw InvalidFieldError("empty field description");
    if (kind == "Q") {
      std::string extra;
      if (in >> extra) throw InvalidFieldError("trailing tokens after Q");
      return rationals();
    }
    if (kind == "F") {
      long p = 0;
      std::string extra;
      if (!(in >> p)) throw InvalidFieldError("missing modulus after F");
      if (in >> extra) throw InvalidFieldError("trailing tokens after modulus");
      return prime(p);
    }
    throw InvalidFieldError("unknown field kind: " + kind);
  }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// An immutable field element.  Default-constructed scalars are 0 in Q; all
// arithmetic cross-checks fields and throws FieldMismatchError on mixing.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  static Scalar of(const Field& f, long long n) { return Scalar(f, n); }

  static Scalar rational(const Rational& q) {
    Scalar s(Field::rationals(), 0);
    s.q_ = q;
    return s;
  }

  // Reduction of an arbitrary integer into F_p (or the integer itself in Q).
  static Scalar of(const Field& f, const Integer& n) {
    if (!f.is_finite()) return rational(Rational(n));
    const Integer p(f.modulus());
    Integer r = n % p;
    if (r < 0) r += p;
    return Scalar(f, r.convert_to<long long>());
  }

  const Field& field() const { return field_; }

  bool is_zero() const { return field_.is_finite() ? r_ == 0 : q_.is_zero(); }
  bool is_one() const { return field_.is_finite() ? r_ == 1 : q_ == 1; }

  // Residue in [0, p); only valid over finite fields.
  long long residue() const {
    if (!field_.is_finite()) throw InfiniteFieldError("residue() over Q");
    return r_;
  }

  const Rational& rational_value() const {
    if (field_.is_finite()) throw FieldMismatchError("rational_value() over F_p");
    return q_;
  }

  Scalar operator+(const Scalar& o) const {
    require_same(o);
    if (field_.is_finite()) return Scalar(field_, (r_ + o.r_) % field_.modulus());
    return rational(q_ + o.q_);
  }

  Scalar operator-(const Scalar& o) const {
    require_same(o);
    if (field_.is_finite()) {
      const long long p = field_.modulus();
      return Scalar(field_, ((r_ - o.r_) % p + p) % p);
    }
    return rational(q_ - o.q_);
  }

  Scalar operator-() const {
    if (field_.is_finite()) {
      const long long p = field_.modulus();
      return Scalar(field_, (p - r_) % p);
    }
    return rational(-q_);
  }

  Scalar operator*(const Scalar& o) const {
    require_same(o);
    if (field_.is_finite()) return Scalar(field_, (r_ * o.r_) % field_.modulus());
    return rational(q_ * o.q_);
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (!field_.is_finite()) return rational(Rational(1) / q_);
    // Extended Euclid on (r_, p).
    long long a = r_, p = field_.modulus();
    long long x0 = 1, x1 = 0, m = p;
    while (a > 1) {
      const long long q = a / m;
      long long t = m;
      m = a % m;
      a = t;
      t = x1;
      x1 = x0 - q * x1;
      x0 = t;
    }
    return Scalar(field_, ((x0 % p) + p) % p);
  }

  Scalar operator/(const Scalar& o) const {
    require_same(o);
    return *this * o.inverse();
  }

  bool operator==(const Scalar& o) const {
    require_same(o);
    return field_.is_finite() ? r_ == o.r_ : q_ == o.q_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order inside one field; used for canonical representatives.
  // F_p orders by residue, Q by rational value.
  static int compare(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    if (a.field_.is_finite()) return a.r_ < b.r_ ? -1 : (a.r_ > b.r_ ? 1 : 0);
    return a.q_ < b.q_ ? -1 : (a.q_ > b.q_ ? 1 : 0);
  }

  // Canonical text: residues as decimal integers in [0, p); rationals as
  // "n" or "n/d" with d > 0 and gcd(n, d) = 1.
  std::string str() const {
    if (field_.is_finite()) return std::to_string(r_);
    std::ostringstream out;
    out << numerator(q_);
    if (denominator(q_) != 1) out << "/" << denominator(q_);
    return out.str();
  }

  // Scalar literals: optionally signed decimal integer, plus "a/b" over Q.
  // Throws FieldSyntaxError carrying `line` for the file parsers.
  static Scalar parse(const Field& f, const std::string& tok, std::size_t line = 0) {
    const auto bad = [&](const std::string& why) -> FieldSyntaxError {
      return FieldSyntaxError(line, "bad scalar '" + tok + "': " + why);
    };
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
      if (f.is_finite()) throw bad("fractions are only valid over Q");
      const std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
      const Integer d = parse_integer(den, bad);
      if (d == 0) throw bad("zero denominator");
      return rational(Rational(parse_integer(num, bad), d));
    }
    return of(f, parse_integer(tok, bad));
  }

 private:
  template <typename MakeError>
  static Integer parse_integer(const std::string& tok, const MakeError& bad) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    if (i == tok.size()) throw bad("missing digits");
    for (; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9') throw bad("not a decimal integer");
    return Integer(tok);
  }

  Scalar(const Field& f, long long n) : field_(f) {
    if (f.is_finite()) {
      const long long p = f.modulus();
      r_ = ((n % p) + p) % p;
    } else {
      q_ = n;
    }
  }

  void require_same(const Scalar& o) const {
    if (field_ != o.field_)
      throw FieldMismatchError("scalars over " + field_.str() + " and " + o.field_.str());
  }

  Field field_;
  long long r_ = 0;
  Rational q_;
};

}  // namespace pax
