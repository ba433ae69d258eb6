#include "dlat/diamond.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dlat {

namespace {

int index_of(const FiniteLattice& host, const Arc& a) {
  auto i = host.arc_index(a.top, a.bottom);
  if (!i) {
    throw PreconditionError("(" + host.name(a.top) + " -> " + host.name(a.bottom) +
                            ") is not a cover arc");
  }
  return *i;
}

bool in_range(const FiniteLattice& host, const Arc& a) {
  return a.top >= 0 && a.top < host.size() && a.bottom >= 0 && a.bottom < host.size();
}

void require_subset(const ArcSet& s, const ArcSet& within, const char* what) {
  if (&s.host() != &within.host() || !s.is_subset_of(within)) {
    throw PreconditionError(std::string(what) + ": arc set is not contained in the ambient set");
  }
}

void require_modular(const FiniteLattice& host, const char* what) {
  if (!is_modular(host)) throw PreconditionError(std::string(what) + ": host lattice is not modular");
}

// Union-find over elements, joined along the arcs of a.
std::vector<int> component_roots(const ArcSet& a) {
  const FiniteLattice& host = a.host();
  std::vector<int> parent(host.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& arc : a.arcs()) parent[find(arc.top)] = find(arc.bottom);
  for (int x = 0; x < host.size(); ++x) parent[x] = find(x);
  return parent;
}

}  // namespace

ArcSet ArcSet::all(const FiniteLattice& host) {
  ArcSet s(host);
  s.bits_.set();
  return s;
}

ArcSet ArcSet::from_arcs(const FiniteLattice& host, std::span<const Arc> arcs) {
  ArcSet s(host);
  for (const Arc& a : arcs) s.insert(a);
  return s;
}

ArcSet ArcSet::from_bits(const FiniteLattice& host, boost::dynamic_bitset<> bits) {
  if (bits.size() != host.covers().size()) throw PreconditionError("arc bitset has the wrong size");
  ArcSet s(host);
  s.bits_ = std::move(bits);
  return s;
}

bool ArcSet::contains(const Arc& a) const {
  if (!in_range(*host_, a)) return false;
  auto i = host_->arc_index(a.top, a.bottom);
  return i && bits_.test(static_cast<std::size_t>(*i));
}

void ArcSet::insert(const Arc& a) {
  if (!in_range(*host_, a)) throw PreconditionError("arc endpoint outside the lattice");
  bits_.set(static_cast<std::size_t>(index_of(*host_, a)));
}

std::vector<Arc> ArcSet::arcs() const {
  std::vector<Arc> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
    out.push_back(host_->covers()[i]);
  }
  return out;
}

ElementSet ArcSet::vertices() const {
  std::vector<bool> seen(static_cast<std::size_t>(host_->size()), false);
  for (const Arc& a : arcs()) seen[a.top] = seen[a.bottom] = true;
  ElementSet out;
  for (int x = 0; x < host_->size(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

ArcSet& ArcSet::operator|=(const ArcSet& o) {
  if (host_ != o.host_) throw PreconditionError("arc sets over different hosts");
  bits_ |= o.bits_;
  return *this;
}

std::array<Arc, 4> arcs_of(const Diamond& d) {
  return {Arc{d.top, d.left}, Arc{d.top, d.right}, Arc{d.left, d.bottom}, Arc{d.right, d.bottom}};
}

bool spans(const ArcSet& s, const Diamond& d) {
  auto a = arcs_of(d);
  return (s.contains(a[0]) && s.contains(a[1])) || (s.contains(a[2]) && s.contains(a[3]));
}

bool contains(const ArcSet& s, const Diamond& d) {
  auto a = arcs_of(d);
  return std::all_of(a.begin(), a.end(), [&](const Arc& x) { return s.contains(x); });
}

std::vector<ArcSet> arc_components(const ArcSet& a) {
  const FiniteLattice& host = a.host();
  auto root = component_roots(a);
  std::vector<ArcSet> out;
  std::vector<int> slot(host.size(), -1);
  for (auto i = a.bits().find_first(); i != boost::dynamic_bitset<>::npos; i = a.bits().find_next(i)) {
    int r = root[host.covers()[i].top];
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back(host);
    }
    out[slot[r]].insert_index(static_cast<int>(i));
  }
  return out;
}

std::vector<ElementSet> vertex_components(const ArcSet& a) {
  std::vector<ElementSet> out;
  for (const ArcSet& c : arc_components(a)) out.push_back(c.vertices());
  return out;
}

std::vector<Diamond> diamonds(const ArcSet& a) {
  std::vector<Diamond> out;
  for (const Diamond& d : a.host().diamonds())
    if (contains(a, d)) out.push_back(d);
  return out;
}

bool is_diamond_closed(const ArcSet& s, const ArcSet& within) {
  require_subset(s, within, "is_diamond_closed");
  for (const Diamond& d : s.host().diamonds()) {
    if (contains(within, d) && spans(s, d) && !contains(s, d)) return false;
  }
  return true;
}

bool is_diamond_closed(const ArcSet& s) { return is_diamond_closed(s, ArcSet::all(s.host())); }

ArcSet closure_naive(const ArcSet& b, const ArcSet& within) {
  require_subset(b, within, "closure_naive");
  const FiniteLattice& host = b.host();
  ArcSet s = b;
  std::deque<int> work;
  for (auto i = b.bits().find_first(); i != boost::dynamic_bitset<>::npos; i = b.bits().find_next(i)) {
    work.push_back(static_cast<int>(i));
  }
  while (!work.empty()) {
    int arc = work.front();
    work.pop_front();
    for (int di : host.diamonds_of_arc(arc)) {
      const Diamond& d = host.diamonds()[static_cast<std::size_t>(di)];
      if (!contains(within, d) || !spans(s, d)) continue;
      for (const Arc& a : arcs_of(d)) {
        int idx = *host.arc_index(a.top, a.bottom);
        if (!s.contains_index(idx)) {
          s.insert_index(idx);
          work.push_back(idx);
        }
      }
    }
  }
  return s;
}

ArcSet closure_naive(const ArcSet& b) { return closure_naive(b, ArcSet::all(b.host())); }

ArcSet packing_arcs(const FiniteLattice& host, const CSPacking& packing) {
  ArcSet out(host);
  for (const ElementSet& block : packing.blocks)
    for (const Arc& a : induced_arcs(host, block)) out.insert(a);
  return out;
}

namespace {

bool intersects(const ElementSet& a, const ElementSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

ElementSet merged(const FiniteLattice& host, const ElementSet& a, const ElementSet& b) {
  ElementSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return sublattice_generated(host, u);
}

template <typename Choose>
MldcResult run_mldc(const ArcSet& b, Choose choose) {
  const FiniteLattice& host = b.host();
  require_modular(host, "closure_mldc");
  std::vector<ElementSet> blocks;
  for (const ElementSet& y : vertex_components(b)) blocks.push_back(sublattice_generated(host, y));
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        if (intersects(blocks[i], blocks[j])) candidates.emplace_back(i, j);
    if (candidates.empty()) break;
    auto [i, j] = candidates[choose(candidates.size())];
    blocks[i] = merged(host, blocks[i], blocks[j]);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
  }
  std::sort(blocks.begin(), blocks.end());
  CSPacking packing{std::move(blocks)};
  ArcSet arcs = packing_arcs(host, packing);
  return {std::move(arcs), std::move(packing)};
}

}  // namespace

MldcResult closure_mldc(const ArcSet& b) {
  return run_mldc(b, [](std::size_t) { return std::size_t{0}; });
}

MldcResult closure_mldc(const ArcSet& b, std::mt19937_64& rng) {
  return run_mldc(b, [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); });
}

CSPacking packing_of_closed(const ArcSet& s) {
  const FiniteLattice& host = s.host();
  require_modular(host, "packing_of_closed");
  if (!is_diamond_closed(s)) throw PreconditionError("packing_of_closed: arc set is not diamond-closed");
  CSPacking packing;
  for (const ArcSet& comp : arc_components(s)) {
    ElementSet k = comp.vertices();
    if (!is_sublattice(host, k)) throw InvariantViolation("closed component is not a sublattice");
    if (!is_cover_preserving(host, k)) throw InvariantViolation("closed component is not cover-preserving");
    if (!(ArcSet::from_arcs(host, induced_arcs(host, k)) == comp)) {
      throw InvariantViolation("closed component is not induced by its vertex set");
    }
    packing.blocks.push_back(std::move(k));
  }
  std::sort(packing.blocks.begin(), packing.blocks.end());
  return packing;
}

bool generates_all(const ArcSet& b) {
  require_modular(b.host(), "generates_all");
  return closure_naive(b) == ArcSet::all(b.host());
}

std::vector<Element> updown_normalize(const ArcSet& s, Element x, Element y) {
  const FiniteLattice& host = s.host();
  if (x < 0 || y < 0 || x >= host.size() || y >= host.size()) {
    throw PreconditionError("updown_normalize: element outside the lattice");
  }
  if (x == y) return {x};

  // Shortest path from x to y using arcs of s.
  std::vector<int> prev(host.size(), -1);
  std::deque<int> queue{x};
  prev[x] = x;
  while (!queue.empty() && prev[y] < 0) {
    int v = queue.front();
    queue.pop_front();
    for (const auto* nbrs : {&host.lower_covers(v), &host.upper_covers(v)}) {
      for (int w : *nbrs) {
        Arc a = host.lt(w, v) ? Arc{v, w} : Arc{w, v};
        if (prev[w] < 0 && s.contains(a)) {
          prev[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  if (prev[y] < 0) throw PreconditionError("updown_normalize: x and y are not connected in s");
  std::vector<Element> path{y};
  while (path.back() != x) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());

  auto dist = cover_distances(host);
  if (static_cast<int>(path.size()) - 1 != dist[static_cast<std::size_t>(x) * host.size() + y]) {
    throw PreconditionError("updown_normalize: no path of length d(x, y) inside s");
  }

  // Remove down-then-up inversions by lifting the valley to the join.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      bool down = host.lt(path[i], path[i - 1]);
      bool up = host.lt(path[i], path[i + 1]);
      if (down && up) {
        Element peak = host.join(path[i - 1], path[i + 1]);
        if (!s.contains({peak, path[i - 1]}) || !s.contains({peak, path[i + 1]})) {
          throw PreconditionError("updown_normalize: arc set is not diamond-closed");
        }
        path[i] = peak;
        changed = true;
      }
    }
  }
  return path;
}

}  // namespace dlat
