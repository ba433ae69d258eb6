#include "dlat/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "dlat/birkhoff.hpp"
#include "dlat/diamond.hpp"
#include "dlat/lattice.hpp"
#include "dlat/pseudoroots.hpp"

namespace dlat {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  bool expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what();
    return ok;
  }
};

struct Context {
  Tally tally;
  std::ostringstream info;
  int trials = 0;
  std::uint64_t seed = 0;
};

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

ArcSet random_arcs(const FiniteLattice& lat, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution pick(density);
  ArcSet a(lat);
  for (std::size_t i = 0; i < lat.covers().size(); ++i) {
    if (pick(rng)) a.insert_index(static_cast<int>(i));
  }
  return a;
}

double random_density(std::mt19937_64& rng) { return std::uniform_real_distribution<double>(0.02, 0.45)(rng); }

std::string show(const ArcSet& a) {
  std::string s = "{";
  for (const Arc& x : a.arcs()) s += " " + std::to_string(x.top) + "->" + std::to_string(x.bottom);
  return s + " }";
}

// Every arc subset of a small lattice, as bitsets.
std::vector<Bits> all_arc_subsets(const FiniteLattice& lat) {
  const std::size_t m = lat.covers().size();
  if (m > 16) throw PreconditionError("too many arcs for exhaustive enumeration");
  std::vector<Bits> out;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) out.emplace_back(m, mask);
  return out;
}

// Cover-preserving sublattices with at least two elements, found by brute
// force over element subsets.
std::vector<ElementSet> cover_preserving_blocks(const FiniteLattice& lat) {
  const int n = lat.size();
  if (n > 20) throw PreconditionError("too many elements for exhaustive enumeration");
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    ElementSet k;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1u) k.push_back(x);
    }
    if (is_sublattice(lat, k) && is_cover_preserving(lat, k)) out.push_back(std::move(k));
  }
  return out;
}

std::vector<CSPacking> all_packings(const FiniteLattice& lat) {
  std::vector<ElementSet> blocks = cover_preserving_blocks(lat);
  std::vector<std::uint32_t> masks;
  for (const ElementSet& k : blocks) {
    std::uint32_t m = 0;
    for (Element x : k) m |= std::uint32_t{1} << x;
    masks.push_back(m);
  }
  std::vector<CSPacking> out;
  CSPacking cur;
  std::function<void(std::size_t, std::uint32_t)> go = [&](std::size_t from, std::uint32_t used) {
    out.push_back(cur);
    for (std::size_t i = from; i < blocks.size(); ++i) {
      if (masks[i] & used) continue;
      cur.blocks.push_back(blocks[i]);
      go(i + 1, used | masks[i]);
      cur.blocks.pop_back();
    }
  };
  go(0, 0);
  return out;
}

std::vector<Bits> closed_subsets(const FiniteLattice& lat) {
  std::vector<Bits> out;
  for (Bits& b : all_arc_subsets(lat)) {
    if (is_diamond_closed(ArcSet::from_bits(lat, b))) out.push_back(std::move(b));
  }
  return out;
}

// 1. naive, mldc and dldc agree on every arc subset of the cube.
void closure_exhaustive(Context& c) {
  FiniteLattice lat = standard::boolean(3);
  BirkhoffRepresentation rep = birkhoff_representation(lat);
  long n = 0;
  for (const Bits& bits : all_arc_subsets(lat)) {
    ArcSet b = ArcSet::from_bits(lat, bits);
    ArcSet naive = closure_naive(b);
    c.tally.expect(closure_mldc(b).arcs == naive, [&] { return "mldc differs on " + show(b); });
    c.tally.expect(closure_dldc(lat, rep, b).arcs == naive, [&] { return "dldc differs on " + show(b); });
    ++n;
  }
  c.info << n << " subsets of " << lat.covers().size() << " arcs";
}

// 2. The same on random subsets of larger lattices.
void closure_random(Context& c) {
  const int trials = c.trials > 0 ? c.trials : 500;
  auto rng = stream(c.seed, 2);
  for (const char* family : {"boolean:4", "m3", "product(m3,chain:2)", "product(chain:3,chain:3)", "divisors:360"}) {
    FiniteLattice lat = make_standard(family);
    std::optional<BirkhoffRepresentation> rep;
    if (is_distributive(lat)) rep = birkhoff_representation(lat);
    for (int t = 0; t < trials; ++t) {
      ArcSet b = random_arcs(lat, rng, random_density(rng));
      ArcSet naive = closure_naive(b);
      c.tally.expect(closure_mldc(b).arcs == naive,
                     [&] { return std::string(family) + ": mldc differs on " + show(b); });
      c.tally.expect(closure_mldc(b, rng).arcs == naive,
                     [&] { return std::string(family) + ": random-order mldc differs on " + show(b); });
      if (rep) {
        c.tally.expect(closure_dldc(lat, *rep, b).arcs == naive,
                       [&] { return std::string(family) + ": dldc differs on " + show(b); });
      }
    }
    c.info << family << (rep ? " (dldc) " : " ");
  }
  c.info << "x " << trials;
}

// 3. Closed arc sets correspond one to one with CS-packings.
void packing_bijection(Context& c) {
  for (const char* family : {"boolean:2", "boolean:3", "m3"}) {
    FiniteLattice lat = make_standard(family);
    std::vector<Bits> closed = closed_subsets(lat);
    std::vector<CSPacking> packings = all_packings(lat);
    std::set<Bits> image;
    for (const CSPacking& p : packings) {
      ArcSet a = packing_arcs(lat, p);
      c.tally.expect(is_diamond_closed(a), [&] { return std::string(family) + ": packing arcs not closed"; });
      image.insert(a.bits());
    }
    c.tally.expect(image.size() == packings.size(),
                   [&] { return std::string(family) + ": two packings share an arc set"; });
    c.tally.expect(image == std::set<Bits>(closed.begin(), closed.end()),
                   [&] { return std::string(family) + ": closed sets and packing images differ"; });
    for (const Bits& b : closed) {
      ArcSet s = ArcSet::from_bits(lat, b);
      c.tally.expect(packing_arcs(lat, packing_of_closed(s)) == s,
                     [&] { return std::string(family) + ": packing_of_closed does not invert on " + show(s); });
    }
    c.info << family << ": " << closed.size() << " closed = " << packings.size() << " packings; ";
  }
}

// 4. On N5 some closed set is not induced by any packing.
void n5_control(Context& c) {
  FiniteLattice lat = standard::n5();
  c.tally.expect(!is_modular(lat), [] { return std::string("N5 reported modular"); });
  std::vector<Bits> closed = closed_subsets(lat);
  std::set<Bits> image;
  for (const CSPacking& p : all_packings(lat)) image.insert(packing_arcs(lat, p).bits());
  long unmatched = 0;
  for (const Bits& b : closed) unmatched += image.count(b) == 0;
  c.tally.expect(unmatched > 0, [] { return std::string("every closed set of N5 comes from a packing"); });
  c.info << closed.size() << " closed sets, " << unmatched << " not induced by a packing";
}

// 5. Atom arcs and the two-chain family generate the Boolean lattice.
void generating_families(Context& c) {
  for (int n = 3; n <= 5; ++n) {
    FiniteLattice lat = standard::boolean(n);
    const int full = (1 << n) - 1;
    ArcSet atoms(lat), chains(lat);
    for (int i = 0; i < n; ++i) atoms.insert({1 << i, 0});
    auto prefix = [](int k) { return (1 << k) - 1; };            // {1..k}
    auto suffix = [&](int a) { return full & ~((1 << (a - 1)) - 1); };  // {a..n}
    for (int i = 1; i <= n - 1; ++i) chains.insert({prefix(i + 1), prefix(i)});
    for (int i = 0; i <= n - 2; ++i) chains.insert({suffix(n - i - 1), suffix(n - i)});
    for (const ArcSet* b : {&atoms, &chains}) {
      c.tally.expect(generates_all(*b) && closure_naive(*b) == ArcSet::all(lat),
                     [&] { return "family " + show(*b) + " does not generate boolean:" + std::to_string(n); });
    }
    if (n == 3) {
      ArcSet weak(lat);
      for (int i = 0; i < n - 1; ++i) weak.insert({1 << i, 0});
      c.tally.expect(!generates_all(weak) && closure_naive(weak) != ArcSet::all(lat),
                     [] { return std::string("weakened atom family still generates"); });
    }
  }
  c.info << "atoms and two chains generate boolean:3..5; dropping an atom arc does not";
}

QuasiOrder random_pointed_poset(std::mt19937_64& rng, int max_middle) {
  const int m = std::uniform_int_distribution<int>(1, max_middle)(rng);
  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(0.35);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (edge(rng)) pairs.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
  }
  return QuasiOrder::generated(m + 2, 0, m + 1, pairs);
}

// Pointed extensions of q, by closing under single added pairs.
std::set<QuasiOrder> all_extensions(const QuasiOrder& q) {
  std::set<QuasiOrder> seen{q};
  std::vector<QuasiOrder> work{q};
  while (!work.empty()) {
    QuasiOrder cur = work.back();
    work.pop_back();
    for (int x = 0; x < cur.size(); ++x) {
      for (int y = 0; y < cur.size(); ++y) {
        if (cur.leq(x, y)) continue;
        std::vector<std::uint64_t> up;
        for (int i = 0; i < cur.size(); ++i) up.push_back(cur.up(i));
        up[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
        QuasiOrder next = QuasiOrder::from_masks(cur.bottom(), cur.top(), std::move(up));
        if (next.is_pointed() && seen.insert(next).second) work.push_back(std::move(next));
      }
    }
  }
  return seen;
}

// Labelled pointed posets with m middle points (0 is bottom, m + 1 top).
std::vector<QuasiOrder> all_pointed_posets(int m) {
  std::vector<std::pair<int, int>> cand;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i != j) cand.emplace_back(i, j);
    }
  }
  std::vector<QuasiOrder> out;
  for (unsigned long mask = 0; mask < (1ul << cand.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (mask >> k & 1ul) pairs.push_back(cand[k]);
    }
    QuasiOrder q = QuasiOrder::generated(m + 2, 0, m + 1, pairs);
    if (!q.is_partial_order()) continue;
    bool exact = true;
    for (std::size_t k = 0; k < cand.size() && exact; ++k) {
      exact = q.leq(cand[k].first, cand[k].second) == ((mask >> k & 1ul) != 0);
    }
    if (exact) out.push_back(std::move(q));
  }
  return out;
}

// 6. Birkhoff roundtrip and the extension/sublattice bijection.
void birkhoff_roundtrip(Context& c) {
  const int trials = c.trials > 0 ? c.trials : 50;
  auto rng = stream(c.seed, 6);
  for (int t = 0; t < trials; ++t) {
    QuasiOrder q = random_pointed_poset(rng, 6);
    DownsetLattice dl = downset_lattice(PointedPoset(q));
    JoinIrreducibles ji = join_irreducibles(dl.lattice);
    c.tally.expect(poset_isomorphism(q, ji.poset.order()).has_value(),
                   [&] { return "join-irreducibles of trial " + std::to_string(t) + " not isomorphic to input"; });
    c.tally.expect(lattice_isomorphism(dl.lattice, downset_lattice(ji.poset).lattice).has_value(),
                   [&] { return "downset lattices of trial " + std::to_string(t) + " not isomorphic"; });
  }

  long posets = 0, extensions = 0;
  for (int m = 0; m <= 4; ++m) {
    for (const QuasiOrder& base : all_pointed_posets(m)) {
      ++posets;
      DownsetLattice dl = downset_lattice(PointedPoset(base));
      const FiniteLattice& lat = dl.lattice;
      std::set<ElementSet> image;
      std::set<QuasiOrder> exts = all_extensions(base);
      for (const QuasiOrder& ext : exts) {
        ElementSet k = extension_sublattice(dl, ext);
        image.insert(k);
        std::vector<Downset> family;
        for (Element x : k) family.push_back(dl.sets[static_cast<std::size_t>(x)]);
        c.tally.expect(order_from_family(base, family) == ext,
                       [] { return std::string("order_from_family does not invert extension_sublattice"); });
        c.tally.expect(is_cover_preserving(lat, k) == is_cover_preserving_extension(ext),
                       [] { return std::string("cover-preserving sublattice and extension classes disagree"); });
      }
      extensions += static_cast<long>(exts.size());
      c.tally.expect(image.size() == exts.size(),
                     [] { return std::string("two extensions share a sublattice"); });

      std::set<ElementSet> sublattices;
      const int n = lat.size();
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        ElementSet k;
        for (int x = 0; x < n; ++x) {
          if (mask >> x & 1u) k.push_back(x);
        }
        if (!is_sublattice(lat, k)) continue;
        std::vector<Downset> family;
        for (Element x : k) family.push_back(dl.sets[static_cast<std::size_t>(x)]);
        QuasiOrder ext = order_from_family(base, family);
        c.tally.expect(ext.extends(base) && ext.is_pointed() && extension_sublattice(dl, ext) == k,
                       [] { return std::string("a sublattice is not the image of its extension"); });
        sublattices.insert(std::move(k));
      }
      c.tally.expect(image == sublattices,
                     [] { return std::string("extension images differ from the nonempty sublattices"); });
    }
  }
  c.info << trials << " roundtrips; " << posets << " posets with <= 4 points, " << extensions << " extensions";
}

std::vector<Quaternion> random_set(std::mt19937_64& rng) {
  const int size = std::uniform_int_distribution<int>(2, 4)(rng);
  std::vector<Quaternion> s;
  for (int i = 0; i < size; ++i) s.push_back(random_quaternion(rng));
  return s;
}

std::string show(const std::vector<Quaternion>& s) {
  std::string out = "S = {";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : " ") + s[i].str();
  return out + " }";
}

void maximal_chains(const FiniteLattice& lat, std::vector<Element>& path,
                    const std::function<void(const std::vector<Element>&)>& visit) {
  Element x = path.back();
  if (x == lat.bottom()) {
    visit(path);
    return;
  }
  for (Element y : lat.lower_covers(x)) {
    path.push_back(y);
    maximal_chains(lat, path, visit);
    path.pop_back();
  }
}

// 7. Structural checks on random Wedderburn lattices.
void wedderburn_suite(Context& c) {
  const int trials = c.trials > 0 ? c.trials : 100;
  auto rng = stream(c.seed, 7);
  long generic = 0, chains = 0, diamonds = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Quaternion> s = random_set(rng);
    auto where = [&] { return " for " + show(s); };
    PseudoRootLattice pl = PseudoRootLattice::build(s);
    const FiniteLattice& lat = pl.lattice();
    const auto& polys = pl.polys();

    for (const Quaternion& x : s) {
      c.tally.expect(eval_right(pl.f_s(), x).is_zero() && divides_right(NCPoly::linear(x), pl.f_s()),
                     [&] { return "f_S does not vanish on " + x.str() + where(); });
    }
    c.tally.expect(polys.size() <= (std::size_t{1} << s.size()), [&] { return "too many polynomials" + where(); });

    std::set<NCPoly> members(polys.begin(), polys.end());
    for (std::size_t x = 0; x < polys.size(); ++x) {
      for (std::size_t y = x + 1; y < polys.size(); ++y) {
        c.tally.expect(members.count(gcrd(polys[x], polys[y])) && members.count(lclm(polys[x], polys[y])),
                       [&] { return "gcrd/lclm leaves the family" + where(); });
      }
    }
    c.tally.expect(is_modular(lat), [&] { return "lattice not modular" + where(); });

    for (const Arc& a : lat.covers()) {
      c.tally.expect(NCPoly::linear(pl.psi(a)) * polys[static_cast<std::size_t>(a.bottom)] ==
                         polys[static_cast<std::size_t>(a.top)],
                     [&] { return "arc factorization fails" + where(); });
    }

    std::vector<Element> path{lat.top()};
    maximal_chains(lat, path, [&](const std::vector<Element>& p) {
      std::vector<Quaternion> roots = chain_factorization(pl, p);
      NCPoly prod = NCPoly::one();
      for (const Quaternion& r : roots) prod = prod * NCPoly::linear(r);
      c.tally.expect(prod == pl.f_s(), [&] { return "chain product differs from f_S" + where(); });
      ++chains;
    });

    for (const Diamond& d : lat.diamonds()) {
      const Quaternion& u1 = pl.psi({d.top, d.left});
      const Quaternion& u2 = pl.psi({d.top, d.right});
      const Quaternion& v1 = pl.psi({d.left, d.bottom});
      const Quaternion& v2 = pl.psi({d.right, d.bottom});
      c.tally.expect(u1 + v1 == u2 + v2 && u1 * v1 == u2 * v2,
                     [&] { return "diamond sum/product identity fails" + where(); });
      ++diamonds;
    }

    if (generic_check(pl)) {
      ++generic;
      c.tally.expect(is_distributive(lat) &&
                         lattice_isomorphism(lat, standard::boolean(static_cast<int>(s.size()))).has_value(),
                     [&] { return "generic lattice is not Boolean" + where(); });
    }
  }
  c.info << trials << " sets (" << generic << " generic), " << chains << " maximal chains, " << diamonds
         << " diamonds";
}

// 8. Diamond operations replay the closure of the zero arcs exactly.
void weakening_suite(Context& c) {
  const int trials = c.trials > 0 ? c.trials : 100;
  auto rng = stream(c.seed, 7);  // same sets as the Wedderburn suite
  long generic3 = 0, steps = 0, degenerate = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Quaternion> s = random_set(rng);
    PseudoRootLattice pl = PseudoRootLattice::build(s);
    GenerationReport r = rational_generation_check(pl, pl.zero_arcs());
    steps += static_cast<long>(r.steps.size());
    degenerate += static_cast<long>(r.degenerate.size());
    c.tally.expect(r.exact(), [&] { return "replayed psi differs for " + show(s); });
    c.tally.expect(r.complete(), [&] { return "replay left closure arcs underived for " + show(s); });
    if (s.size() == 3 && generic_check(pl)) {
      ++generic3;
      c.tally.expect(pl.lattice().covers().size() == 12 && r.derived.size() == 12 && r.closure.size() == 12,
                     [&] { return "generic three-element set did not derive all 12 arcs: " + show(s); });
    }
  }
  c.tally.expect(generic3 > 0, [] { return std::string("no generic three-element set was drawn"); });
  c.info << trials << " sets, " << steps << " diamond steps, " << degenerate << " degenerate, " << generic3
         << " generic with |S| = 3";
}

// 9. S = {i, j}.
void worked_example(Context& c) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j();
  PseudoRootLattice pl = PseudoRootLattice::build({i, j});
  const FiniteLattice& lat = pl.lattice();
  const Element ei = pl.element_of_subset(1), ej = pl.element_of_subset(2);
  auto expect = [&](bool ok, const char* what) { c.tally.expect(ok, [&] { return std::string(what); }); };

  expect(lat.size() == 4, "lattice has four elements");
  expect(pl.f_s() == NCPoly({Quaternion(1), Quaternion(0), Quaternion(1)}), "f_S = t^2 + 1");
  expect(pl.psi({lat.top(), ei}) == -i && pl.psi({lat.top(), ej}) == -j, "upper pseudo-roots are (-i, -j)");
  expect(pl.psi({ei, lat.bottom()}) == i && pl.psi({ej, lat.bottom()}) == j, "lower pseudo-roots are (i, j)");
  expect(diamond_down(-i, -j) == std::pair(i, j), "diamond_down(-i, -j) = (i, j)");
  expect(diamond_up(i, j) == std::pair(-i, -j), "diamond_up(i, j) = (-i, -j)");
  expect(chain_factorization(pl, {lat.top(), ei, lat.bottom()}) == std::vector<Quaternion>{-i, i},
         "chain through t - i factors as (t + i)(t - i)");

  GenerationReport r = rational_generation_check(pl, pl.zero_arcs());
  expect(r.ok() && r.derived.size() == 4, "bottom arcs derive both top arcs");

  // Conjugating the root itself instead of its companion does not factor.
  const Quaternion x1 = conjugate_by(i, i - j), x2 = conjugate_by(j, j - i);
  expect(NCPoly::linear(x1) * NCPoly::linear(i) != NCPoly::linear(x2) * NCPoly::linear(j),
         "conjugating the root itself breaks the factorization");
  c.info << "f_S = " << pl.f_s().str() << ", upper (" << pl.psi({lat.top(), ei}).str() << ", "
         << pl.psi({lat.top(), ej}).str() << ")";
}

// 10. closure_naive is extensive, monotone and idempotent.
void closure_axioms(Context& c) {
  const int trials = c.trials > 0 ? c.trials : 200;
  auto rng = stream(c.seed, 10);
  std::bernoulli_distribution coin(0.5);
  for (const std::string& family : corpus_families()) {
    FiniteLattice lat = make_standard(family);
    for (int t = 0; t < trials; ++t) {
      ArcSet b = random_arcs(lat, rng, random_density(rng));
      ArcSet b2 = b | random_arcs(lat, rng, random_density(rng) / 2);
      ArcSet cb = closure_naive(b);
      c.tally.expect(b.is_subset_of(cb), [&] { return family + ": not extensive on " + show(b); });
      c.tally.expect(cb.is_subset_of(closure_naive(b2)), [&] { return family + ": not monotone on " + show(b); });
      c.tally.expect(closure_naive(cb) == cb && is_diamond_closed(cb),
                     [&] { return family + ": not idempotent on " + show(b); });
    }
  }
  c.info << corpus_families().size() << " lattices x " << trials << " pairs";
}

struct SuiteDef {
  const char* name;
  void (*run)(Context&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> all = {
      {"closure-exhaustive", closure_exhaustive}, {"closure-random", closure_random},
      {"packing-bijection", packing_bijection},   {"n5-control", n5_control},
      {"generating-families", generating_families}, {"birkhoff", birkhoff_roundtrip},
      {"wedderburn", wedderburn_suite},           {"weakening", weakening_suite},
      {"worked-example", worked_example},         {"closure-axioms", closure_axioms},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& corpus_families() {
  static const std::vector<std::string> all = {
      "boolean:2", "boolean:3", "boolean:4", "chain:4", "m3", "n5",
      "product(m3,chain:2)", "product(chain:3,chain:3)", "divisors:360"};
  return all;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SuiteDef& s : suites()) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  auto it = std::find_if(suites().begin(), suites().end(), [&](const SuiteDef& s) { return name == s.name; });
  if (it == suites().end()) throw PreconditionError("unknown suite '" + name + "'");
  if (opts.trials && *opts.trials <= 0) throw PreconditionError("--trials must be positive");

  Context c;
  c.seed = opts.seed;
  c.trials = opts.trials.value_or(0);
  SuiteResult result{name, false, "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    it->run(c);
    result.passed = c.tally.failures == 0;
    result.detail = c.info.str() + "; " + std::to_string(c.tally.checks) + " checks";
    if (!result.passed) {
      result.detail += ", " + std::to_string(c.tally.failures) + " failed; first: " + c.tally.first;
    }
  } catch (const std::exception& e) {
    result.detail = std::string("aborted: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace dlat
