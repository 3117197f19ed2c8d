#include "doctest.h"
#include "gzero/error.hpp"
#include "gzero/scalar.hpp"

using namespace gzero;

TEST_CASE("rational arithmetic is exact") {
  DivisionScalar a(1, 3), b(1, 6);
  CHECK(a + b == DivisionScalar(1, 2));
  CHECK(a * b == DivisionScalar(1, 18));
  CHECK(a.inverse() == DivisionScalar(3));
  CHECK((a - a).isZero());
  CHECK_THROWS_AS(DivisionScalar(0).inverse(), DivisionByZero);
}

TEST_CASE("quaternions do not commute") {
  DivisionScalar i(Quaternion(0, 1, 0, 0)), j(Quaternion(0, 0, 1, 0));
  DivisionScalar k(Quaternion(0, 0, 0, 1));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == DivisionScalar(Quaternion(-1, 0, 0, 0)));
  Quaternion q(1, 2, -1, Rational(1, 2));
  CHECK(DivisionScalar(q) * DivisionScalar(q.inverse()) ==
        DivisionScalar::one(ScalarKind::Quaternion));
}

TEST_CASE("mixing scalar kinds is a type error") {
  DivisionScalar r(2), q(Quaternion(0, 1, 0, 0));
  CHECK_THROWS_AS(r + q, TypeError);
  CHECK_THROWS_AS(r * q, TypeError);
}
