#include <catch_amalgamated.hpp>

#include "dblgrp/errors.hpp"
#include "dblgrp/field.hpp"

using namespace dblgrp;

TEST_CASE("field specifications") {
  CHECK(make_field_spec(0).zeta == 1);
  CHECK(make_field_spec(0, 2).zeta == -1);
  CHECK_THROWS_AS(make_field_spec(0, 3), MathError);
  CHECK(make_field_spec(3, 2).zeta == 2);
  CHECK(make_field_spec(7, 3).zeta == 2);
  CHECK(make_field_spec(7, 3, 4).zeta == 4);
  CHECK_THROWS_AS(make_field_spec(7, 3, 3), StructuralError);
  CHECK_THROWS_AS(make_field_spec(5, 3), MathError);
  CHECK_THROWS_AS(make_field_spec(6), StructuralError);
}

TEST_CASE("prime field arithmetic") {
  const Field f(make_field_spec(7, 3));
  CHECK(f.add(f.from_int(5), f.from_int(4)) == 2);
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == 1);
  CHECK(f.neg(f.from_int(1)) == 6);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.root_power(3) == 1);
  CHECK(f.root_power(-1) == f.inv(f.root_power(1)));
  for (long a = 1; a < 7; ++a) CHECK(f.mul(f.from_int(a), f.inv(f.from_int(a))) == 1);
  CHECK_THROWS(f.inv(f.zero()));
}

TEST_CASE("rational arithmetic") {
  const Field q(make_field_spec(0, 2));
  CHECK(q.root_power(1) == -1);
  CHECK(q.root_power(2) == 1);
  CHECK(q.mul(Scalar(2, 3), q.inv(Scalar(2, 3))) == 1);
  CHECK(q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
