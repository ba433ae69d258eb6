#include <doctest.h>

#include <random>

#include "dlat/pseudoroots.hpp"
#include "dlat/quaternion.hpp"
#include "dlat/rational.hpp"

using dlat::Quaternion;
using dlat::Rational;

namespace {
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
}

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 9).str() == "-1/3");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), dlat::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x"), dlat::PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), dlat::DivisionByZero);
}

TEST_CASE("quaternion arithmetic") {
  CHECK(I * J == K);
  CHECK(J * I == -K);
  CHECK(I * I == Quaternion(-1));
  CHECK(I * J * K == Quaternion(-1));
  CHECK((1 + I) + (1 - I) == Quaternion(2));
  CHECK((I - J) * (I - J) == Quaternion(-2));
  CHECK(Quaternion(Rational(1, 2), -1, 0, 3).str() == "1/2 - i + 3k");
  CHECK(Quaternion::from_strings({"1/2", "-1", "0", "3"}) == Quaternion(Rational(1, 2), -1, 0, 3));
}

TEST_CASE("inverse") {
  CHECK(inverse(Quaternion(1)) == Quaternion(1));
  CHECK(inverse(I) == -I);
  Quaternion d = I - J;
  CHECK(inverse(d) == Quaternion(0, Rational(-1, 2), Rational(1, 2), 0));
  CHECK(d * Quaternion(0, Rational(-1, 2), Rational(1, 2), 0) == Quaternion(1));
  CHECK_THROWS_AS(inverse(Quaternion()), dlat::DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(conjugate_by(I, Quaternion(1)) == I);
  CHECK(conjugate_by(I, J) == -I);
  CHECK(conjugate_by(Quaternion(Rational(3, 7)), 1 + I + K) == Quaternion(Rational(3, 7)));
  CHECK_THROWS_AS(conjugate_by(I, Quaternion()), dlat::DivisionByZero);
}

TEST_CASE("field and conjugation identities on random quaternions") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Quaternion x = dlat::random_quaternion(rng), y = dlat::random_quaternion(rng), c = dlat::random_quaternion(rng);
    if (x.is_zero() || y.is_zero() || c.is_zero()) continue;
    CHECK(inverse(inverse(x)) == x);
    CHECK(inverse(x * y) == inverse(y) * inverse(x));
    CHECK(x * inverse(x) == Quaternion(1));
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(conjugate_by(x + y, c) == conjugate_by(x, c) + conjugate_by(y, c));
    CHECK(conjugate_by(x * y, c) == conjugate_by(x, c) * conjugate_by(y, c));
  }
}
