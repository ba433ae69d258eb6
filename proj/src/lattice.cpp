#include "dlat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace dlat {

void OrderRelation::close_reflexive_transitive() {
  for (int i = 0; i < n_; ++i) set(i, i);
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (test(i, k))
        for (int j = 0; j < n_; ++j)
          if (test(k, j)) set(i, j);
}

FiniteLattice FiniteLattice::build(const OrderRelation& leq, std::vector<std::string> names) {
  const int n = leq.size();
  if (n == 0) throw LatticeError(LatticeError::Kind::Empty, "not a lattice: no elements");
  if (!names.empty() && static_cast<int>(names.size()) != n) {
    throw PreconditionError("lattice: " + std::to_string(names.size()) + " names for " +
                            std::to_string(n) + " elements");
  }
  auto label = [&](int x) { return names.empty() ? std::to_string(x) : names[x]; };

  for (int x = 0; x < n; ++x) {
    if (!leq.test(x, x)) {
      throw LatticeError(LatticeError::Kind::NotPartialOrder,
                         "not a partial order: relation is not reflexive at " + label(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (leq.test(x, y) && leq.test(y, x)) {
        throw LatticeError(LatticeError::Kind::NotPartialOrder,
                           "not a partial order: " + label(x) + " and " + label(y) +
                               " violate antisymmetry");
      }
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq.test(x, y))
        for (int z = 0; z < n; ++z)
          if (leq.test(y, z) && !leq.test(x, z)) {
            throw LatticeError(LatticeError::Kind::NotPartialOrder,
                               "not a partial order: transitivity fails for " + label(x) +
                                   " <= " + label(y) + " <= " + label(z));
          }

  FiniteLattice lat;
  lat.n_ = n;
  lat.leq_ = leq;
  lat.join_.assign(static_cast<std::size_t>(n) * n, -1);
  lat.meet_.assign(static_cast<std::size_t>(n) * n, -1);

  std::vector<int> bounds;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      for (int pass = 0; pass < 2; ++pass) {
        const bool upper = pass == 0;
        bounds.clear();
        for (int z = 0; z < n; ++z) {
          bool ok = upper ? (leq.test(x, z) && leq.test(y, z)) : (leq.test(z, x) && leq.test(z, y));
          if (ok) bounds.push_back(z);
        }
        int best = -1;
        for (int u : bounds) {
          bool extreme = std::all_of(bounds.begin(), bounds.end(),
                                     [&](int v) { return upper ? leq.test(u, v) : leq.test(v, u); });
          if (extreme) {
            best = u;
            break;
          }
        }
        if (best < 0) {
          throw LatticeError(LatticeError::Kind::NotLattice,
                             std::string("not a lattice: ") + label(x) + " and " + label(y) +
                                 (upper ? " have no unique join" : " have no unique meet"));
        }
        auto& table = upper ? lat.join_ : lat.meet_;
        table[lat.pair(x, y)] = best;
        table[lat.pair(y, x)] = best;
      }
    }
  }

  lat.bottom_ = 0;
  lat.top_ = 0;
  for (int x = 1; x < n; ++x) {
    lat.bottom_ = lat.meet(lat.bottom_, x);
    lat.top_ = lat.join(lat.top_, x);
  }

  lat.arc_index_.assign(static_cast<std::size_t>(n) * n, -1);
  lat.lower_.assign(n, {});
  lat.upper_.assign(n, {});
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (!lat.lt(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) cover = !(lat.lt(x, z) && lat.lt(z, y));
      if (cover) {
        lat.arc_index_[lat.pair(y, x)] = static_cast<int>(lat.covers_.size());
        lat.covers_.push_back({y, x});
        lat.lower_[y].push_back(x);
        lat.upper_[x].push_back(y);
      }
    }
  }

  // Heights along a linear extension (fewer elements below comes first).
  std::vector<int> below(n, 0), order(n);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) below[x] += leq.test(z, x) ? 1 : 0;
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
  lat.height_.assign(n, 0);
  for (int x : order)
    for (int lo : lat.lower_[x]) lat.height_[x] = std::max(lat.height_[x], lat.height_[lo] + 1);

  lat.arc_diamonds_.assign(lat.covers_.size(), {});
  for (int y = 0; y < n; ++y) {
    for (int z = y + 1; z < n; ++z) {
      Element t = lat.join(y, z), b = lat.meet(y, z);
      if (lat.is_cover(t, y) && lat.is_cover(t, z) && lat.is_cover(y, b) && lat.is_cover(z, b)) {
        lat.diamonds_.push_back({t, y, z, b});
      }
    }
  }
  std::sort(lat.diamonds_.begin(), lat.diamonds_.end());
  for (std::size_t d = 0; d < lat.diamonds_.size(); ++d) {
    const Diamond& dm = lat.diamonds_[d];
    for (auto [hi, lo] : {std::pair{dm.top, dm.left}, std::pair{dm.top, dm.right},
                          std::pair{dm.left, dm.bottom}, std::pair{dm.right, dm.bottom}}) {
      lat.arc_diamonds_[*lat.arc_index(hi, lo)].push_back(static_cast<int>(d));
    }
  }

  if (names.empty()) {
    names.reserve(n);
    for (int x = 0; x < n; ++x) names.push_back(std::to_string(x));
  }
  lat.names_ = std::move(names);
  return lat;
}

std::optional<int> FiniteLattice::arc_index(Element y, Element x) const {
  int i = arc_index_[pair(y, x)];
  if (i < 0) return std::nullopt;
  return i;
}

HeightMap heights(const FiniteLattice& lat) {
  HeightMap h(lat.size());
  for (int x = 0; x < lat.size(); ++x) h[x] = lat.height(x);
  return h;
}

bool is_ranked(const FiniteLattice& lat) {
  return std::all_of(lat.covers().begin(), lat.covers().end(),
                     [&](const Arc& a) { return lat.height(a.top) == lat.height(a.bottom) + 1; });
}

bool modular_by_height(const FiniteLattice& lat) {
  if (!is_ranked(lat)) return false;
  for (int x = 0; x < lat.size(); ++x)
    for (int y = x + 1; y < lat.size(); ++y)
      if (lat.height(x) + lat.height(y) != lat.height(lat.meet(x, y)) + lat.height(lat.join(x, y)))
        return false;
  return true;
}

bool modular_by_neighbors(const FiniteLattice& lat) {
  for (int x = 0; x < lat.size(); ++x) {
    for (int y = x + 1; y < lat.size(); ++y) {
      Element j = lat.join(x, y), m = lat.meet(x, y);
      bool vee = lat.is_cover(j, x) && lat.is_cover(j, y);
      bool wedge = lat.is_cover(x, m) && lat.is_cover(y, m);
      if (vee != wedge) return false;
    }
  }
  return true;
}

bool modular_by_law(const FiniteLattice& lat) {
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y))
        for (int w = 0; w < lat.size(); ++w)
          if (lat.meet(lat.join(x, w), y) != lat.join(x, lat.meet(w, y))) return false;
  return true;
}

bool is_modular(const FiniteLattice& lat) {
  bool by_height = modular_by_height(lat);
  if (by_height != modular_by_neighbors(lat) || by_height != modular_by_law(lat)) {
    throw InvariantViolation("modularity characterizations disagree");
  }
  return by_height;
}

bool is_distributive(const FiniteLattice& lat) {
  const int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) return false;
  return true;
}

namespace {

void check_members(const FiniteLattice& lat, const ElementSet& k) {
  for (Element x : k) {
    if (x < 0 || x >= lat.size()) {
      throw PreconditionError("element " + std::to_string(x) + " is not in the lattice");
    }
  }
}

boost::dynamic_bitset<> to_bits(const FiniteLattice& lat, const ElementSet& k) {
  check_members(lat, k);
  boost::dynamic_bitset<> bits(lat.size());
  for (Element x : k) bits.set(x);
  return bits;
}

ElementSet from_bits(const boost::dynamic_bitset<>& bits) {
  ElementSet out;
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace

bool is_sublattice(const FiniteLattice& lat, const ElementSet& k) {
  auto bits = to_bits(lat, k);
  for (Element x : k)
    for (Element y : k)
      if (!bits.test(lat.join(x, y)) || !bits.test(lat.meet(x, y))) return false;
  return true;
}

ElementSet sublattice_generated(const FiniteLattice& lat, const ElementSet& y) {
  auto bits = to_bits(lat, y);
  ElementSet members = from_bits(bits);
  for (std::size_t done = 0; done < members.size();) {
    // Combine each new member with everything present so far.
    std::size_t end = members.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        for (Element z : {lat.join(members[i], members[j]), lat.meet(members[i], members[j])}) {
          if (!bits.test(z)) {
            bits.set(z);
            members.push_back(z);
          }
        }
      }
    }
    done = end;
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_cover_preserving(const FiniteLattice& lat, const ElementSet& k) {
  if (!is_sublattice(lat, k)) throw PreconditionError("is_cover_preserving: not a sublattice");
  auto inside = to_bits(lat, k);
  // Every y >= x in K must reach x by a descending cover path inside K.
  for (Element y : k) {
    boost::dynamic_bitset<> reached(lat.size());
    std::vector<Element> stack{y};
    reached.set(y);
    while (!stack.empty()) {
      Element v = stack.back();
      stack.pop_back();
      for (Element w : lat.lower_covers(v)) {
        if (inside.test(w) && !reached.test(w)) {
          reached.set(w);
          stack.push_back(w);
        }
      }
    }
    for (Element x : k)
      if (lat.leq(x, y) && !reached.test(x)) return false;
  }
  return true;
}

std::vector<Arc> induced_arcs(const FiniteLattice& lat, const ElementSet& k) {
  auto inside = to_bits(lat, k);
  std::vector<Arc> out;
  for (const Arc& a : lat.covers())
    if (inside.test(a.top) && inside.test(a.bottom)) out.push_back(a);
  return out;
}

std::vector<int> cover_distances(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    int* row = &dist[static_cast<std::size_t>(s) * n];
    std::deque<int> queue{s};
    row[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto* nbrs : {&lat.lower_covers(v), &lat.upper_covers(v)}) {
        for (int w : *nbrs) {
          if (row[w] < 0) {
            row[w] = row[v] + 1;
            queue.push_back(w);
          }
        }
      }
    }
  }
  return dist;
}

}  // namespace dlat
