#include <doctest.h>

#include "dlat/lattice.hpp"
#include "dlat/suites.hpp"

using namespace dlat;

namespace {

OrderRelation from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
  OrderRelation r(n);
  for (auto [a, b] : pairs) r.set(a, b);
  r.close_reflexive_transitive();
  return r;
}

}  // namespace

TEST_CASE("build validates the axioms") {
  FiniteLattice b2 = FiniteLattice::build(from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(b2.size() == 4);
  CHECK(b2.bottom() == 0);
  CHECK(b2.top() == 3);
  CHECK(b2.join(1, 2) == 3);
  CHECK(b2.meet(1, 2) == 0);

  OrderRelation not_transitive(3);
  for (int i = 0; i < 3; ++i) not_transitive.set(i, i);
  not_transitive.set(0, 1);
  not_transitive.set(1, 2);
  try {
    FiniteLattice::build(not_transitive);
    FAIL("accepted a non-transitive relation");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::NotPartialOrder);
    CHECK(std::string(e.what()).find("not a partial order") != std::string::npos);
  }

  // two maximal elements
  try {
    FiniteLattice::build(from_pairs(3, {{0, 1}, {0, 2}}));
    FAIL("accepted a poset without a top");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::NotLattice);
  }
  // 0 < a, b < c, d: a and b have two minimal upper bounds
  CHECK_THROWS_AS(
      FiniteLattice::build(from_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}})),
      LatticeError);
  CHECK_THROWS_AS(FiniteLattice::build(OrderRelation(0)), LatticeError);
  CHECK(standard::n5().size() == 5);
}

TEST_CASE("covers and heights") {
  FiniteLattice c3 = standard::chain(3);
  CHECK(c3.covers() == std::vector<Arc>{{1, 0}, {2, 1}});
  CHECK(standard::boolean(2).covers().size() == 4);
  CHECK(standard::m3().covers().size() == 6);

  FiniteLattice b3 = standard::boolean(3);
  CHECK(b3.height(b3.bottom()) == 0);
  CHECK(b3.height() == 3);
  CHECK(standard::n5().height() == 3);
  CHECK(heights(standard::n5()) == std::vector<int>{0, 1, 2, 1, 3});
}

TEST_CASE("ranked, modular, distributive") {
  for (int n = 0; n <= 4; ++n) {
    FiniteLattice b = standard::boolean(n);
    CHECK(is_ranked(b));
    CHECK(is_modular(b));
    CHECK(is_distributive(b));
  }
  FiniteLattice n5 = standard::n5(), m3 = standard::m3();
  CHECK(!is_ranked(n5));
  CHECK(is_ranked(m3));
  CHECK(!is_modular(n5));
  CHECK(!modular_by_law(n5));
  CHECK(!modular_by_height(n5));
  CHECK(!modular_by_neighbors(n5));
  CHECK(is_modular(m3));
  CHECK(!is_distributive(m3));
  CHECK(is_distributive(standard::chain(5)));
  CHECK(is_modular(make_standard("product(m3,chain:2)")));
  CHECK(!is_distributive(make_standard("product(m3,chain:2)")));
  // a ^ (b v c) = a while (a ^ b) v (a ^ c) = 0
  CHECK(m3.meet(1, m3.join(2, 3)) == 1);
  CHECK(m3.join(m3.meet(1, 2), m3.meet(1, 3)) == 0);
}

TEST_CASE("sublattices") {
  FiniteLattice b2 = standard::boolean(2), b3 = standard::boolean(3);
  CHECK(sublattice_generated(b2, {1}) == ElementSet{1});
  CHECK(sublattice_generated(b2, {1, 2}) == ElementSet{0, 1, 2, 3});
  CHECK(sublattice_generated(b3, {0, 1, 3, 7}) == ElementSet{0, 1, 3, 7});
  CHECK(is_sublattice(b2, {0, 3}));
  CHECK(!is_sublattice(b2, {1, 2}));

  CHECK(is_cover_preserving(b2, {0, 1, 2, 3}));
  CHECK(!is_cover_preserving(b2, {0, 3}));
  CHECK(is_cover_preserving(b2, {0, 1, 3}));
  CHECK_THROWS_AS(is_cover_preserving(b2, {1, 2}), PreconditionError);

  CHECK(induced_arcs(b2, {0, 1, 2, 3}) == b2.covers());
  CHECK(induced_arcs(b2, {0, 3}).empty());
  CHECK(induced_arcs(b3, {0, 1, 2, 3}).size() == 4);
}

TEST_CASE("standard families") {
  FiniteLattice b3 = make_standard("boolean:3");
  CHECK(b3.size() == 8);
  CHECK(b3.covers().size() == 12);
  CHECK(b3.name(5) == "{1,3}");
  FiniteLattice c4 = make_standard("chain:4");
  CHECK(c4.size() == 4);
  CHECK(c4.covers().size() == 3);
  FiniteLattice grid = make_standard("product(chain:2,chain:3)");
  CHECK(grid.size() == 6);
  CHECK(is_distributive(grid));
  FiniteLattice d = make_standard("divisors:360");
  CHECK(d.size() == 24);
  CHECK(d.height() == 6);
  CHECK(is_distributive(d));
  CHECK_THROWS_AS(make_standard("tree:3"), PreconditionError);
  CHECK_THROWS_AS(make_standard("boolean:x"), PreconditionError);
}

TEST_CASE("ranked criterion agrees with equal chain lengths; modular tests agree") {
  for (const std::string& family : corpus_families()) {
    FiniteLattice lat = make_standard(family);
    // all maximal chains have equal length iff ranked
    std::vector<int> longest(static_cast<std::size_t>(lat.size())), shortest(static_cast<std::size_t>(lat.size()));
    std::vector<Element> order(static_cast<std::size_t>(lat.size()));
    for (int x = 0; x < lat.size(); ++x) order[static_cast<std::size_t>(x)] = x;
    std::sort(order.begin(), order.end(), [&](Element a, Element b) { return lat.height(a) < lat.height(b); });
    bool equal = true;
    for (Element x : order) {
      if (x == lat.bottom()) continue;
      int lo = 1 << 20, hi = 0;
      for (Element y : lat.lower_covers(x)) {
        lo = std::min(lo, shortest[static_cast<std::size_t>(y)] + 1);
        hi = std::max(hi, longest[static_cast<std::size_t>(y)] + 1);
      }
      shortest[static_cast<std::size_t>(x)] = lo;
      longest[static_cast<std::size_t>(x)] = hi;
      equal = equal && lo == hi;
    }
    CHECK_MESSAGE(is_ranked(lat) == equal, family);
    CHECK_NOTHROW(is_modular(lat));
  }
}

TEST_CASE("join of a cover with any element") {
  // for a cover x' -> x and any y, either x' v y = x v y, or x' v y covers x v y
  for (const char* family : {"boolean:3", "m3", "product(m3,chain:2)", "divisors:360"}) {
    FiniteLattice lat = make_standard(family);
    for (const Arc& a : lat.covers()) {
      for (Element y = 0; y < lat.size(); ++y) {
        Element hi = lat.join(a.top, y), lo = lat.join(a.bottom, y);
        CHECK((hi == lo) != lat.is_cover(hi, lo));
      }
    }
  }
}
