#include "dlat/birkhoff.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace dlat {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void check_size(int n) {
  if (n < 2 || n > 64) throw PreconditionError("quasi-orders need between 2 and 64 points");
}

}  // namespace

QuasiOrder::QuasiOrder(int n, int bottom, int top) : n_(n), bottom_(bottom), top_(top), up_(n, 0) {
  check_size(n);
  if (bottom < 0 || top < 0 || bottom >= n || top >= n || bottom == top) {
    throw PreconditionError("quasi-order needs distinct bottom and top points");
  }
  for (int i = 0; i < n; ++i) up_[i] = bit(i) | bit(top);
  up_[bottom] = ground();
}

QuasiOrder QuasiOrder::generated(int n, int bottom, int top, std::span<const std::pair<int, int>> pairs) {
  QuasiOrder q(n, bottom, top);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw PreconditionError("order pair outside the ground set");
    q.up_[i] |= bit(j);
  }
  q.close();
  return q;
}

QuasiOrder QuasiOrder::from_masks(int bottom, int top, std::vector<std::uint64_t> up) {
  QuasiOrder q;
  q.n_ = static_cast<int>(up.size());
  check_size(q.n_);
  q.bottom_ = bottom;
  q.top_ = top;
  q.up_ = std::move(up);
  for (auto& m : q.up_) m &= q.ground();
  q.close();
  return q;
}

QuasiOrder QuasiOrder::total(int n, int bottom, int top) {
  QuasiOrder q(n, bottom, top);
  std::fill(q.up_.begin(), q.up_.end(), q.ground());
  return q;
}

void QuasiOrder::close() {
  for (int i = 0; i < n_; ++i) up_[i] |= bit(i);
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (up_[i] & bit(k)) up_[i] |= up_[k];
}

std::uint64_t QuasiOrder::down(int j) const {
  std::uint64_t m = 0;
  for (int i = 0; i < n_; ++i)
    if (leq(i, j)) m |= bit(i);
  return m;
}

std::vector<int> QuasiOrder::class_of() const {
  std::vector<int> id(n_, -1);
  int next = 0;
  for (int i = 0; i < n_; ++i) {
    if (id[i] >= 0) continue;
    for (int j = i; j < n_; ++j)
      if (leq(i, j) && leq(j, i)) id[j] = next;
    ++next;
  }
  return id;
}

std::vector<std::uint64_t> QuasiOrder::classes() const {
  auto id = class_of();
  std::vector<std::uint64_t> out(id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1, 0);
  for (int i = 0; i < n_; ++i) out[id[i]] |= bit(i);
  return out;
}

bool QuasiOrder::is_partial_order() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

bool QuasiOrder::is_pointed() const {
  return up_[bottom_] == ground() && down(top_) == ground() && !leq(top_, bottom_);
}

bool QuasiOrder::extends(const QuasiOrder& base) const {
  if (base.n_ != n_ || base.bottom_ != bottom_ || base.top_ != top_) return false;
  for (int i = 0; i < n_; ++i)
    if ((base.up_[i] & ~up_[i]) != 0) return false;
  return true;
}

QuasiOrder join_closure(const QuasiOrder& a, const QuasiOrder& b) {
  if (a.n_ != b.n_) throw PreconditionError("quasi-orders on different ground sets");
  QuasiOrder q = a;
  for (int i = 0; i < q.n_; ++i) q.up_[i] |= b.up_[i];
  q.close();
  return q;
}

QuasiOrder intersection(const QuasiOrder& a, const QuasiOrder& b) {
  if (a.n_ != b.n_) throw PreconditionError("quasi-orders on different ground sets");
  QuasiOrder q = a;
  for (int i = 0; i < q.n_; ++i) q.up_[i] &= b.up_[i];
  return q;
}

PointedPoset::PointedPoset(QuasiOrder order, std::vector<std::string> names)
    : order_(std::move(order)), names_(std::move(names)) {
  if (!order_.is_partial_order()) throw PreconditionError("pointed poset: relation is not antisymmetric");
  if (!order_.is_pointed()) throw PreconditionError("pointed poset: bottom/top are not extreme");
  if (names_.empty()) {
    for (int i = 0; i < order_.size(); ++i) names_.push_back(std::to_string(i));
  } else if (static_cast<int>(names_.size()) != order_.size()) {
    throw PreconditionError("pointed poset: wrong number of names");
  }
}

bool is_downset(const QuasiOrder& q, Downset d) {
  if (!(d & bit(q.bottom())) || (d & bit(q.top())) || (d & ~q.ground())) return false;
  for (std::uint64_t rest = d; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    if (q.down(j) & ~d) return false;
  }
  return true;
}

std::vector<Downset> downsets(const QuasiOrder& q) {
  const int n = q.size();
  std::vector<std::uint64_t> down(n);
  for (int j = 0; j < n; ++j) down[j] = q.down(j);
  const std::uint64_t forced = down[q.bottom()];
  const std::uint64_t excluded = q.up(q.top());
  std::vector<Downset> out;
  if (forced & excluded) return out;
  const std::uint64_t free = q.ground() & ~forced & ~excluded;
  if (std::popcount(free) > 24) throw PreconditionError("downset enumeration limited to 24 free points");
  std::uint64_t sub = 0;
  do {
    Downset d = forced | sub;
    bool closed = true;
    for (std::uint64_t rest = sub; rest && closed; rest &= rest - 1) {
      closed = (down[std::countr_zero(rest)] & ~d) == 0;
    }
    if (closed) out.push_back(d);
    sub = (sub - free) & free;
  } while (sub != 0);
  std::sort(out.begin(), out.end(), [](Downset a, Downset b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::optional<Element> DownsetLattice::element_of(Downset d) const {
  auto it = index.find(d);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

DownsetLattice downset_lattice(const PointedPoset& p) {
  const QuasiOrder& q = p.order();
  std::vector<Downset> sets = downsets(q);
  const int n = static_cast<int>(sets.size());
  OrderRelation leq(n);
  std::vector<std::string> names;
  std::unordered_map<Downset, Element> index;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) leq.set(x, y, (sets[x] & ~sets[y]) == 0);
    std::string s = "{";
    for (int i = 0; i < q.size(); ++i) {
      if (i == q.bottom() || !(sets[x] & bit(i))) continue;
      if (s.size() > 1) s += ',';
      s += p.names()[i];
    }
    names.push_back(s + "}");
    index.emplace(sets[x], x);
  }
  FiniteLattice lat = FiniteLattice::build(leq, std::move(names));
  return {p, std::move(sets), std::move(lat), std::move(index)};
}

QuasiOrder order_from_family(const QuasiOrder& base, std::span<const Downset> family) {
  const int n = base.size();
  // down[j] = intersection of the members containing j.
  std::vector<std::uint64_t> down(n, base.ground());
  for (Downset d : family)
    for (int j = 0; j < n; ++j)
      if (d & bit(j)) down[j] &= d;
  std::vector<std::uint64_t> up(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (down[j] & bit(i)) up[i] |= bit(j);
  return QuasiOrder::from_masks(base.bottom(), base.top(), std::move(up));
}

ElementSet extension_sublattice(const DownsetLattice& dl, const QuasiOrder& ext) {
  if (!ext.extends(dl.poset.order())) throw PreconditionError("relation does not extend the poset order");
  if (!ext.is_pointed()) throw PreconditionError("extension is not pointed");
  ElementSet out;
  for (int x = 0; x < dl.lattice.size(); ++x)
    if (is_downset(ext, dl.sets[x])) out.push_back(x);
  return out;
}

bool is_cover_preserving_extension(const QuasiOrder& ext) {
  auto id = ext.class_of();
  auto cls = ext.classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (static_cast<int>(c) == id[ext.bottom()] || static_cast<int>(c) == id[ext.top()]) continue;
    if (std::popcount(cls[c]) != 1) return false;
  }
  return true;
}

bool downset_covers(const QuasiOrder& ext, Downset d, Downset c) {
  if (c & ~d) throw PreconditionError("downset_covers: C is not contained in D");
  if (!is_downset(ext, d) || !is_downset(ext, c)) throw PreconditionError("downset_covers: not a downset");
  const Downset diff = d & ~c;
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  const std::uint64_t cls = ext.up(x) & ext.down(x);
  if (cls != diff) return false;
  // Maximal: nothing in D sits strictly above the class.
  return (ext.up(x) & d & ~cls) == 0;
}

bool compatible(const QuasiOrder& a, const QuasiOrder& b) {
  QuasiOrder u = join_closure(a, b);
  return !u.leq(u.top(), u.bottom());
}

DldcResult closure_dldc(const DownsetLattice& dl, const ArcSet& a) {
  if (&a.host() != &dl.lattice) throw PreconditionError("closure_dldc: arc set is not over the downset lattice");
  const QuasiOrder& base = dl.poset.order();
  std::vector<QuasiOrder> family;
  for (const ElementSet& comp : vertex_components(a)) {
    std::vector<Downset> members;
    for (Element x : comp) members.push_back(dl.sets[x]);
    family.push_back(order_from_family(base, members));
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < family.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < family.size() && !merged; ++j) {
        if (compatible(family[i], family[j])) {
          family[i] = intersection(family[i], family[j]);
          family.erase(family.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }
  ArcSet arcs(dl.lattice);
  std::vector<std::pair<ElementSet, QuasiOrder>> keyed;
  for (QuasiOrder& ext : family) {
    if (!is_cover_preserving_extension(ext)) throw InvariantViolation("closure_dldc: extension is not cover-preserving");
    ElementSet k = extension_sublattice(dl, ext);
    for (const Arc& arc : induced_arcs(dl.lattice, k)) arcs.insert(arc);
    keyed.emplace_back(std::move(k), std::move(ext));
  }
  std::sort(keyed.begin(), keyed.end());
  family.clear();
  for (auto& [k, ext] : keyed) family.push_back(std::move(ext));
  return {std::move(arcs), std::move(family)};
}

JoinIrreducibles join_irreducibles(const FiniteLattice& lat) {
  if (!is_distributive(lat)) throw PreconditionError("join_irreducibles: lattice is not distributive");
  std::vector<Element> ji;
  for (Element x = 0; x < lat.size(); ++x)
    if (lat.lower_covers(x).size() == 1) ji.push_back(x);
  const int m = static_cast<int>(ji.size());
  if (m + 2 > 64) throw PreconditionError("join_irreducibles: more than 62 join-irreducibles");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names{"0^"};
  for (int a = 0; a < m; ++a) {
    names.push_back(lat.name(ji[a]));
    for (int b = 0; b < m; ++b)
      if (a != b && lat.leq(ji[a], ji[b])) pairs.emplace_back(a + 1, b + 1);
  }
  names.push_back("1^");
  QuasiOrder q = QuasiOrder::generated(m + 2, 0, m + 1, pairs);
  return {PointedPoset(std::move(q), std::move(names)), std::move(ji)};
}

BirkhoffRepresentation birkhoff_representation(const FiniteLattice& lat) {
  JoinIrreducibles ji = join_irreducibles(lat);
  DownsetLattice model = downset_lattice(ji.poset);
  if (model.lattice.size() != lat.size()) throw InvariantViolation("Birkhoff model has the wrong size");
  std::vector<Element> to(lat.size()), from(lat.size(), -1);
  for (Element x = 0; x < lat.size(); ++x) {
    Downset d = bit(0);
    for (std::size_t i = 0; i < ji.elements.size(); ++i)
      if (lat.leq(ji.elements[i], x)) d |= bit(static_cast<int>(i) + 1);
    auto e = model.element_of(d);
    if (!e || from[*e] >= 0) throw InvariantViolation("Birkhoff map is not a bijection");
    to[x] = *e;
    from[*e] = x;
  }
  for (Element x = 0; x < lat.size(); ++x)
    for (Element y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y) != model.lattice.leq(to[x], to[y])) throw InvariantViolation("Birkhoff map is not an order isomorphism");
  return {std::move(model), std::move(to), std::move(from)};
}

DldcResult closure_dldc(const FiniteLattice& host, const BirkhoffRepresentation& rep, const ArcSet& a) {
  if (&a.host() != &host) throw PreconditionError("closure_dldc: arc set is not over the host");
  ArcSet mapped(rep.model.lattice);
  for (const Arc& arc : a.arcs()) mapped.insert({rep.to_model[arc.top], rep.to_model[arc.bottom]});
  DldcResult inner = closure_dldc(rep.model, mapped);
  ArcSet back(host);
  for (const Arc& arc : inner.arcs.arcs()) back.insert({rep.from_model[arc.top], rep.from_model[arc.bottom]});
  return {std::move(back), std::move(inner.family)};
}

namespace {

// Generic backtracking search for a bijection f with rel_a(x, y) == rel_b(f x, f y).
template <typename RelA, typename RelB>
std::optional<std::vector<int>> match(int n, const std::vector<std::vector<int>>& candidates,
                                      const std::vector<int>& order, RelA rel_a, RelB rel_b) {
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    int x = order[pos];
    for (int y : candidates[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        int u = order[p];
        ok = rel_a(u, x) == rel_b(f[u], y) && rel_a(x, u) == rel_b(y, f[u]);
      }
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      if (self(self, pos + 1)) return true;
      used[y] = false;
      f[x] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return f;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const QuasiOrder& a, const QuasiOrder& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  auto sig = [](const QuasiOrder& q, int x) {
    return std::pair{std::popcount(q.up(x)), std::popcount(q.down(x))};
  };
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x) {
    if (x == a.bottom()) cand[x] = {b.bottom()};
    else if (x == a.top()) cand[x] = {b.top()};
    else
      for (int y = 0; y < n; ++y)
        if (y != b.bottom() && y != b.top() && sig(a, x) == sig(b, y)) cand[x].push_back(y);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return match(n, cand, order, [&](int x, int y) { return a.leq(x, y); },
               [&](int x, int y) { return b.leq(x, y); });
}

std::optional<std::vector<Element>> lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  const int n = a.size();
  if (b.size() != n || a.covers().size() != b.covers().size()) return std::nullopt;
  auto sig = [](const FiniteLattice& l, Element x) {
    return std::tuple{l.height(x), l.lower_covers(x).size(), l.upper_covers(x).size()};
  };
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sig(a, x) == sig(b, y)) cand[x].push_back(y);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.height(x) < a.height(y); });
  return match(n, cand, order, [&](int x, int y) { return a.leq(x, y); },
               [&](int x, int y) { return b.leq(x, y); });
}

}  // namespace dlat
