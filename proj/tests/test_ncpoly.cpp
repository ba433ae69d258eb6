#include <doctest.h>

#include <algorithm>
#include <random>

#include "dlat/ncpoly.hpp"
#include "dlat/pseudoroots.hpp"

using dlat::NCPoly;
using dlat::Quaternion;
using dlat::Rational;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
NCPoly lin(const Quaternion& a) { return NCPoly::linear(a); }
const NCPoly T2_PLUS_1{Quaternion(1), Quaternion(0), Quaternion(1)};

NCPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Quaternion> c;
  for (int i = 0; i < degree; ++i) c.push_back(dlat::random_quaternion(rng));
  c.push_back(Quaternion(1));
  return NCPoly(c);
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK(lin(-I) * lin(I) == T2_PLUS_1);
  NCPoly p{I, J, K};
  CHECK(p * NCPoly::one() == p);
  NCPoly ij = lin(I) * lin(J), ji = lin(J) * lin(I);
  CHECK(ij != ji);
  CHECK(ij.coeff(0) == K);
  CHECK(ji.coeff(0) == -K);
  CHECK(ij.coeff(1) == ji.coeff(1));
  CHECK(NCPoly{Quaternion(0), Quaternion(0)}.is_zero());
  CHECK(T2_PLUS_1.str() == "t^2 + 1");
}

TEST_CASE("right evaluation") {
  CHECK(eval_right(T2_PLUS_1, I).is_zero());
  CHECK(eval_right(NCPoly::one(), 1 + J) == Quaternion(1));
  // a zero of p need not be a zero of q p
  NCPoly p = lin(J) * lin(I);
  CHECK(eval_right(p, I).is_zero());
  CHECK(!eval_right(p, J).is_zero());
}

TEST_CASE("right division") {
  auto [q, r] = dlat::right_divide(T2_PLUS_1, lin(I));
  CHECK(q == lin(-I));
  CHECK(r.is_zero());
  NCPoly p{I, 1 + K, J};
  auto [q1, r1] = dlat::right_divide(p, NCPoly::one());
  CHECK(q1 == p);
  CHECK(r1.is_zero());
  CHECK_THROWS_AS(dlat::right_divide(p, NCPoly{Quaternion(1), Quaternion(2)}), dlat::PreconditionError);
  CHECK_THROWS_AS(dlat::right_divide(p, NCPoly()), dlat::PreconditionError);

  CHECK(dlat::divides_right(lin(I), T2_PLUS_1));
  CHECK(dlat::divides_right(NCPoly::one(), p));
  CHECK(!dlat::divides_right(lin(J), lin(J) * lin(I)));
}

TEST_CASE("remainder theorem and degree additivity on random input") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    NCPoly p = random_poly(rng, 1 + t % 4);
    NCPoly q = random_poly(rng, t % 3);
    Quaternion a = dlat::random_quaternion(rng);
    auto [quot, rem] = dlat::right_divide(p, lin(a));
    CHECK(rem == NCPoly::constant(eval_right(p, a)));
    CHECK(quot * lin(a) + rem == p);
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("gcrd and lclm") {
  NCPoly p{I, 1 + K, Quaternion(1)};
  CHECK(dlat::gcrd(p, p) == p);
  CHECK(dlat::gcrd(Quaternion(2) * p, p) == p);
  CHECK(dlat::gcrd(lin(I), lin(J)) == NCPoly::one());
  CHECK_THROWS_AS(dlat::gcrd(NCPoly(), NCPoly()), dlat::PreconditionError);
  CHECK(dlat::lclm(p, NCPoly::one()) == p);
  CHECK(dlat::lclm(lin(I), lin(J)) == T2_PLUS_1);
  CHECK(dlat::lclm(p, p) == p);
  CHECK(dlat::lclm_linear(NCPoly::one(), J) == lin(J));
  CHECK(dlat::lclm_linear(lin(I), I) == lin(I));
  CHECK(dlat::lclm_linear(lin(I), J) == dlat::lclm(lin(I), lin(J)));
}

TEST_CASE("lclm/gcrd properties on products of random linear factors") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    NCPoly p = NCPoly::one(), q = NCPoly::one();
    Quaternion shared = dlat::random_quaternion(rng);
    for (int k = 0; k < 1 + t % 3; ++k) p = lin(dlat::random_quaternion(rng)) * p;
    for (int k = 0; k < 1 + t % 2; ++k) q = lin(dlat::random_quaternion(rng)) * q;
    if (t % 2) {
      p = p * lin(shared);
      q = q * lin(shared);
    }
    NCPoly l = dlat::lclm(p, q), g = dlat::gcrd(p, q);
    CHECK(l == dlat::lclm(q, p));
    CHECK(g == dlat::gcrd(q, p));
    CHECK(dlat::divides_right(p, l));
    CHECK(dlat::divides_right(q, l));
    CHECK(dlat::divides_right(g, p));
    CHECK(dlat::divides_right(g, q));
    CHECK(l.degree() + g.degree() == p.degree() + q.degree());
    if (t % 2) CHECK(dlat::divides_right(lin(shared), g));
  }
}

TEST_CASE("Wedderburn polynomials") {
  CHECK(dlat::wedderburn({}) == NCPoly::one());
  std::vector<Quaternion> ij{I, J};
  CHECK(dlat::wedderburn(ij) == T2_PLUS_1);
  std::vector<Quaternion> central{Quaternion(1), Quaternion(2)};
  CHECK(dlat::wedderburn(central) == NCPoly{Quaternion(2), Quaternion(-3), Quaternion(1)});
  std::vector<Quaternion> repeated{I, I, -I};
  CHECK(dlat::wedderburn(repeated) == T2_PLUS_1);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Quaternion> s;
    for (int k = 0; k < 2 + t % 3; ++k) s.push_back(dlat::random_quaternion(rng));
    NCPoly f = dlat::wedderburn(s);
    for (const Quaternion& x : s) CHECK(eval_right(f, x).is_zero());
    std::vector<Quaternion> sub(s.begin(), s.end() - 1);
    CHECK(dlat::divides_right(dlat::wedderburn(sub), f));
    std::sort(s.begin(), s.end());
    do {
      CHECK(dlat::wedderburn(s) == f);
    } while (std::next_permutation(s.begin(), s.end()));
  }
}

TEST_CASE("printing") {
  CHECK(NCPoly().str() == "0");
  CHECK(lin(I).str() == "t - i");
  CHECK(lin(-J).str() == "t + j");
  CHECK(NCPoly{Quaternion(2), Quaternion(-3), Quaternion(1)}.str() == "t^2 - 3t + 2");
  CHECK(NCPoly{1 - I, -K, Quaternion(-1)}.str() == "-t^2 - kt + (1 - i)");
  CHECK(NCPoly{1 - I}.str() == "1 - i");
  CHECK(NCPoly{Quaternion(0), 1 + J}.str() == "(1 + j)t");
}
