#include <doctest.h>

#include <random>

#include "dlat/birkhoff.hpp"
#include "dlat/pseudoroots.hpp"

using namespace dlat;

namespace {
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
const NCPoly T2_PLUS_1{Quaternion(1), Quaternion(0), Quaternion(1)};
}  // namespace

TEST_CASE("building pseudo-root lattices") {
  PseudoRootLattice empty = PseudoRootLattice::build({});
  CHECK(empty.lattice().size() == 1);
  CHECK(empty.f_s() == NCPoly::one());

  PseudoRootLattice ij = PseudoRootLattice::build({I, J});
  CHECK(ij.lattice().size() == 4);
  CHECK(ij.f_s() == T2_PLUS_1);
  CHECK(ij.polys()[static_cast<std::size_t>(ij.element_of_subset(1))] == NCPoly::linear(I));
  CHECK(ij.psi({ij.element_of_subset(1), ij.lattice().bottom()}) == I);
  CHECK(ij.psi({ij.element_of_subset(2), ij.lattice().bottom()}) == J);

  PseudoRootLattice central = PseudoRootLattice::build({Quaternion(1), Quaternion(2)});
  CHECK(central.lattice().size() == 4);
  CHECK(central.f_s() == NCPoly::linear(Quaternion(1)) * NCPoly::linear(Quaternion(2)));

  PseudoRootLattice ijk = PseudoRootLattice::build({I, J, K});
  CHECK(ijk.lattice().size() == 5);  // every pair already gives t^2 + 1
  CHECK(lattice_isomorphism(ijk.lattice(), standard::m3()).has_value());
  CHECK(!generic_check(ijk));

  CHECK_THROWS_AS(PseudoRootLattice::build({I, J, K, 1 + I, 1 + J, 1 + K}), PreconditionError);
}

TEST_CASE("genericity") {
  CHECK(generic_check(PseudoRootLattice::build({I, J})));
  CHECK(generic_check(PseudoRootLattice::build({I, -I})));
  CHECK(!generic_check(PseudoRootLattice::build({Quaternion(1), Quaternion(1)})));
}

TEST_CASE("diamond operations") {
  CHECK(diamond_up(I, J) == std::pair(-I, -J));
  CHECK(diamond_down(-I, -J) == std::pair(I, J));
  CHECK(diamond_up(Quaternion(1), Quaternion(2)) == std::pair(Quaternion(2), Quaternion(1)));
  CHECK(diamond_down(Quaternion(2), Quaternion(1)) == std::pair(Quaternion(1), Quaternion(2)));
  CHECK_THROWS_AS(diamond_up(I, I), DegenerateDiamond);
  CHECK_THROWS_AS(diamond_down(J, J), DegenerateDiamond);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    if (a == b) continue;
    auto [u1, u2] = diamond_up(a, b);
    CHECK(diamond_down(u1, u2) == std::pair(a, b));
    CHECK(u1 + a == u2 + b);
    CHECK(u1 * a == u2 * b);
    CHECK(diamond_up(diamond_down(a, b).first, diamond_down(a, b).second) == std::pair(a, b));
  }
}

TEST_CASE("conjugating the root itself instead of its companion does not factor") {
  // conjugating the root itself rather than its companion
  Quaternion x1 = conjugate_by(I, I - J), x2 = conjugate_by(J, J - I);
  CHECK(x1 == -J);
  CHECK(x2 == -I);
  CHECK(NCPoly::linear(x1) * NCPoly::linear(I) != NCPoly::linear(x2) * NCPoly::linear(J));
}

TEST_CASE("generation replay") {
  PseudoRootLattice ij = PseudoRootLattice::build({I, J});
  const FiniteLattice& lat = ij.lattice();
  GenerationReport all = rational_generation_check(ij, ArcSet::all(lat));
  CHECK(all.steps.empty());
  CHECK(all.ok());

  GenerationReport r = rational_generation_check(ij, ij.zero_arcs());
  CHECK(r.ok());
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].rule == Rule::Up);
  CHECK(r.steps[0].values[0] == -I);
  CHECK(r.steps[0].values[1] == -J);

  std::mt19937_64 rng(2);
  int generic3 = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<Quaternion> s;
    for (int k = 0; k < 3; ++k) s.push_back(random_quaternion(rng));
    PseudoRootLattice pl = PseudoRootLattice::build(s);
    GenerationReport g = rational_generation_check(pl, pl.zero_arcs());
    CHECK(g.ok());
    if (generic_check(pl)) {
      ++generic3;
      CHECK(g.derived.size() == 12);
    }
    // starting from the top arcs works downwards
    ArcSet tops(pl.lattice());
    for (Element y : pl.lattice().lower_covers(pl.lattice().top())) tops.insert({pl.lattice().top(), y});
    GenerationReport down = rational_generation_check(pl, tops);
    CHECK(down.ok());
  }
  CHECK(generic3 > 0);
}

TEST_CASE("chain factorizations") {
  PseudoRootLattice ij = PseudoRootLattice::build({I, J});
  const FiniteLattice& lat = ij.lattice();
  const Element ei = ij.element_of_subset(1), ej = ij.element_of_subset(2);
  CHECK(chain_factorization(ij, {lat.top(), ei, lat.bottom()}) == std::vector<Quaternion>{-I, I});
  CHECK(chain_factorization(ij, {lat.top(), ej, lat.bottom()}) == std::vector<Quaternion>{-J, J});
  CHECK_THROWS_AS(chain_factorization(ij, {lat.top(), lat.bottom()}), PreconditionError);
  CHECK_THROWS_AS(chain_factorization(ij, {ei, lat.bottom()}), PreconditionError);

  PseudoRootLattice central = PseudoRootLattice::build({Quaternion(1), Quaternion(2)});
  const FiniteLattice& c = central.lattice();
  for (Element mid : c.lower_covers(c.top())) {
    std::vector<Quaternion> roots = chain_factorization(central, {c.top(), mid, c.bottom()});
    CHECK(NCPoly::linear(roots[0]) * NCPoly::linear(roots[1]) ==
          NCPoly{Quaternion(2), Quaternion(-3), Quaternion(1)});
  }
}
