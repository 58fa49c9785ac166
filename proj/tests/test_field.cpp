#include <catch2/catch_amalgamated.hpp>

#include "pax/errors.hpp"
#include "pax/field.hpp"

using namespace pax;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Field q = Field::rationals();
  const Scalar half = Scalar::parse(q, "1/2");
  const Scalar third = Scalar::parse(q, "1/3");
  REQUIRE((half + third).str() == "5/6");
  REQUIRE((half - half).is_zero());
  REQUIRE((half * third).str() == "1/6");
  REQUIRE((half / third).str() == "3/2");
  REQUIRE(Scalar::parse(q, "3/6").str() == "1/2");
  REQUIRE(Scalar::parse(q, "-2/4").str() == "-1/2");
  REQUIRE(Scalar::of(q, -3).str() == "-3");
  REQUIRE((-Scalar::of(q, 5)).str() == "-5");
  REQUIRE(Scalar::of(q, 2).inverse().str() == "1/2");
}

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  REQUIRE((Scalar::of(f5, 3) * Scalar::of(f5, 4)).str() == "2");
  REQUIRE(Scalar::of(f5, 2).inverse().str() == "3");
  REQUIRE((Scalar::of(f5, 2) / Scalar::of(f5, 3)).str() == "4");
  REQUIRE(Scalar::of(f5, -1).str() == "4");
  REQUIRE(Scalar::of(f5, 7) == Scalar::of(f5, 2));
  REQUIRE((Scalar::of(f5, 1) - Scalar::of(f5, 3)).str() == "3");
}

TEST_CASE("field construction and parsing") {
  REQUIRE(Field::parse("Q").str() == "Q");
  REQUIRE(Field::parse("F 7").str() == "F 7");
  REQUIRE(Field::prime(2).characteristic() == 2);
  REQUIRE(Field::rationals().characteristic() == 0);
  REQUIRE(Field::prime(3).is_finite());
  REQUIRE(!Field::rationals().is_finite());
  REQUIRE_THROWS_AS(Field::prime(6), InvalidFieldError);
  REQUIRE_THROWS_AS(Field::prime(1), InvalidFieldError);
  REQUIRE_THROWS_AS(Field::prime(1 << 16), InvalidFieldError);
  REQUIRE_THROWS_AS(Field::parse("F x"), InvalidFieldError);
  REQUIRE_THROWS_AS(Field::parse("R"), InvalidFieldError);
}

TEST_CASE("scalar parse errors carry the line number") {
  const Field q = Field::rationals();
  const Field f5 = Field::prime(5);
  REQUIRE_THROWS_AS(Scalar::parse(q, "1/0", 12), FieldSyntaxError);
  try {
    Scalar::parse(q, "1/0", 12);
    FAIL("expected FieldSyntaxError");
  } catch (const FieldSyntaxError& e) {
    REQUIRE(e.line == 12);
  }
  REQUIRE_THROWS_AS(Scalar::parse(f5, "1/2", 3), FieldSyntaxError);
  REQUIRE_THROWS_AS(Scalar::parse(q, "zebra", 1), FieldSyntaxError);
  REQUIRE(Scalar::parse(f5, "-2", 1).str() == "3");
}

TEST_CASE("cross-field operations are rejected") {
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  REQUIRE_THROWS_AS(Scalar::of(q, 1) + Scalar::of(f2, 1), FieldMismatchError);
  REQUIRE_THROWS_AS(Scalar::of(q, 1) / Scalar::zero(q), DivisionByZeroError);
  REQUIRE_THROWS_AS(Scalar::zero(Field::prime(5)).inverse(), DivisionByZeroError);
}

TEST_CASE("scalar comparison is a total order") {
  const Field f5 = Field::prime(5);
  REQUIRE(Scalar::compare(Scalar::of(f5, 1), Scalar::of(f5, 3)) < 0);
  REQUIRE(Scalar::compare(Scalar::of(f5, 3), Scalar::of(f5, 3)) == 0);
  const Field q = Field::rationals();
  REQUIRE(Scalar::compare(Scalar::of(q, -1), Scalar::of(q, 1)) < 0);
}
