#include <doctest.h>

#include <random>

#include "dlat/birkhoff.hpp"

using namespace dlat;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// bottom 0, middles 1..m, top m + 1
PointedPoset poset(int m, const Pairs& pairs) { return PointedPoset(QuasiOrder::generated(m + 2, 0, m + 1, pairs)); }

Downset mask(std::initializer_list<int> pts) {
  Downset d = 0;
  for (int p : pts) d |= Downset{1} << p;
  return d;
}

}  // namespace

TEST_CASE("quasi-orders") {
  QuasiOrder q = QuasiOrder::generated(4, 0, 3, Pairs{{1, 2}, {2, 1}});
  CHECK(q.leq(1, 2));
  CHECK(q.leq(0, 2));
  CHECK(q.leq(2, 3));
  CHECK(!q.is_partial_order());
  CHECK(q.is_pointed());
  CHECK(q.classes().size() == 3);
  CHECK(!QuasiOrder::total(4, 0, 3).is_pointed());
  CHECK_THROWS_AS(PointedPoset{q}, PreconditionError);
  CHECK_THROWS_AS(QuasiOrder(3, 1, 1), PreconditionError);
}

TEST_CASE("downset lattices") {
  CHECK(downset_lattice(poset(0, {})).lattice.size() == 1);
  for (int n = 1; n <= 4; ++n) {
    DownsetLattice dl = downset_lattice(poset(n, {}));
    CHECK(lattice_isomorphism(dl.lattice, standard::boolean(n)).has_value());
  }
  DownsetLattice chain = downset_lattice(poset(2, {{1, 2}}));
  CHECK(chain.lattice.size() == 3);
  CHECK(lattice_isomorphism(chain.lattice, standard::chain(3)).has_value());
  CHECK(chain.sets == std::vector<Downset>{mask({0}), mask({0, 1}), mask({0, 1, 2})});
  CHECK(!is_downset(chain.poset.order(), mask({0, 2})));
}

TEST_CASE("order from a family of downsets") {
  PointedPoset p = poset(2, {});
  const QuasiOrder& base = p.order();
  DownsetLattice dl = downset_lattice(p);
  CHECK(order_from_family(base, dl.sets) == base);
  CHECK(order_from_family(base, {}) == QuasiOrder::total(4, 0, 3));
  Downset d = mask({0, 1});
  QuasiOrder one = order_from_family(base, std::vector<Downset>{d});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(one.leq(i, j) == (!(d >> j & 1) || (d >> i & 1)));
  }
}

TEST_CASE("extension sublattices") {
  PointedPoset p = poset(2, {});
  DownsetLattice dl = downset_lattice(p);
  CHECK(extension_sublattice(dl, p.order()).size() == 4);
  QuasiOrder merged = QuasiOrder::generated(4, 0, 3, Pairs{{1, 2}, {2, 1}});
  ElementSet k = extension_sublattice(dl, merged);
  REQUIRE(k.size() == 2);
  CHECK(dl.sets[static_cast<std::size_t>(k[0])] == mask({0}));
  CHECK(dl.sets[static_cast<std::size_t>(k[1])] == mask({0, 1, 2}));
  CHECK_THROWS_AS(extension_sublattice(dl, QuasiOrder::total(4, 0, 3)), PreconditionError);

  CHECK(is_cover_preserving_extension(p.order()));
  CHECK(!is_cover_preserving_extension(merged));
  CHECK(is_cover_preserving_extension(QuasiOrder::generated(4, 0, 3, Pairs{{1, 0}})));
}

TEST_CASE("downset covers") {
  PointedPoset p = poset(4, {});
  const QuasiOrder& base = p.order();
  CHECK(!downset_covers(base, mask({0, 1}), mask({0, 1})));
  CHECK(downset_covers(base, mask({0, 1}), mask({0})));
  QuasiOrder merged = QuasiOrder::generated(6, 0, 5, Pairs{{1, 2}, {2, 1}});
  CHECK(downset_covers(merged, mask({0, 1, 2}), mask({0})));
  CHECK(!downset_covers(base, mask({0, 1, 2}), mask({0})));
}

TEST_CASE("compatibility") {
  PointedPoset p = poset(2, {});
  const QuasiOrder& base = p.order();
  CHECK(compatible(base, base));
  QuasiOrder up = QuasiOrder::generated(4, 0, 3, Pairs{{3, 1}});
  QuasiOrder down = QuasiOrder::generated(4, 0, 3, Pairs{{1, 0}});
  CHECK(!compatible(up, down));
  CHECK(compatible(up, base));

  // compatible iff the sublattices meet; merged orders match the intersection
  DownsetLattice dl = downset_lattice(poset(3, {}));
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pt(0, 4);
  auto random_ext = [&] {
    Pairs pairs;
    for (int k = 0; k < 2; ++k) pairs.emplace_back(pt(rng), pt(rng));
    QuasiOrder q = QuasiOrder::generated(5, 0, 4, pairs);
    return q;
  };
  int tested = 0;
  while (tested < 200) {
    QuasiOrder a = random_ext(), b = random_ext();
    if (!a.is_pointed() || !b.is_pointed()) continue;
    ++tested;
    ElementSet ka = extension_sublattice(dl, a), kb = extension_sublattice(dl, b), both;
    std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(both));
    CHECK(compatible(a, b) == !both.empty());
    if (compatible(a, b)) {
      ElementSet un;
      std::set_union(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(un));
      std::vector<Downset> fam;
      for (Element x : un) fam.push_back(dl.sets[static_cast<std::size_t>(x)]);
      CHECK(order_from_family(dl.poset.order(), fam) == intersection(a, b));
    }
  }
}

TEST_CASE("generated sublattices of downset families") {
  std::mt19937_64 rng(8);
  DownsetLattice dl = downset_lattice(poset(4, {{1, 2}}));
  const FiniteLattice& lat = dl.lattice;
  std::uniform_int_distribution<int> el(0, lat.size() - 1);
  for (int t = 0; t < 200; ++t) {
    ElementSet s;
    for (int k = 0; k < 1 + t % 4; ++k) s.push_back(el(rng));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Downset> fam;
    for (Element x : s) fam.push_back(dl.sets[static_cast<std::size_t>(x)]);
    ElementSet gen = sublattice_generated(lat, s);
    CHECK(gen == extension_sublattice(dl, order_from_family(dl.poset.order(), fam)));
  }
}

TEST_CASE("distributive closure") {
  FiniteLattice b3 = standard::boolean(3);
  BirkhoffRepresentation rep = birkhoff_representation(b3);
  DldcResult none = closure_dldc(b3, rep, ArcSet(b3));
  CHECK(none.arcs.empty());
  CHECK(none.family.empty());

  for (int n = 2; n <= 4; ++n) {
    DownsetLattice dl = downset_lattice(poset(n, {}));
    ArcSet atoms(dl.lattice);
    for (int i = 1; i <= n; ++i) atoms.insert({*dl.element_of(mask({0, i})), *dl.element_of(mask({0}))});
    DldcResult r = closure_dldc(dl, atoms);
    CHECK(r.arcs == ArcSet::all(dl.lattice));
    REQUIRE(r.family.size() == 1);
    CHECK(r.family[0] == dl.poset.order());
  }
  CHECK_THROWS_AS(birkhoff_representation(standard::m3()), PreconditionError);
}

TEST_CASE("connected arc sets generate everything iff the family separates points") {
  std::mt19937_64 rng(12);
  DownsetLattice dl = downset_lattice(poset(4, {{1, 3}}));
  const FiniteLattice& lat = dl.lattice;
  std::bernoulli_distribution pick(0.3);
  const QuasiOrder& base = dl.poset.order();
  int tested = 0;
  for (int t = 0; t < 400; ++t) {
    ArcSet a(lat);
    for (std::size_t i = 0; i < lat.covers().size(); ++i) {
      if (pick(rng)) a.insert_index(static_cast<int>(i));
    }
    if (arc_components(a).size() != 1) continue;
    ++tested;
    std::vector<Downset> fam;
    for (Element x : a.vertices()) fam.push_back(dl.sets[static_cast<std::size_t>(x)]);
    bool separates = true;
    for (int i = 0; i < base.size(); ++i) {
      for (int j = 0; j < base.size(); ++j) {
        if (base.leq(j, i)) continue;
        bool found = false;
        for (Downset d : fam) found = found || ((d >> i & 1) && !(d >> j & 1));
        separates = separates && found;
      }
    }
    CHECK((closure_naive(a) == ArcSet::all(lat)) == separates);
  }
  CHECK(tested > 20);
}

TEST_CASE("join-irreducibles") {
  for (int n = 1; n <= 4; ++n) {
    JoinIrreducibles ji = join_irreducibles(standard::boolean(n));
    CHECK(ji.poset.order() == poset(n, {}).order());
  }
  JoinIrreducibles c = join_irreducibles(standard::chain(4));
  CHECK(poset_isomorphism(c.poset.order(), poset(3, {{1, 2}, {2, 3}}).order()).has_value());
  JoinIrreducibles grid = join_irreducibles(make_standard("product(chain:2,chain:3)"));
  CHECK(poset_isomorphism(grid.poset.order(), poset(3, {{2, 3}}).order()).has_value());
  CHECK(!poset_isomorphism(grid.poset.order(), poset(3, {{1, 2}, {2, 3}}).order()).has_value());
  CHECK_THROWS_AS(join_irreducibles(standard::n5()), PreconditionError);

  BirkhoffRepresentation rep = birkhoff_representation(make_standard("divisors:360"));
  CHECK(rep.model.lattice.size() == 24);
  CHECK(rep.model.poset.size() == 8);
}
