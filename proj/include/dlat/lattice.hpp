#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlat/errors.hpp"

namespace dlat {

using Element = int;

/// Sorted, duplicate-free list of lattice elements.
using ElementSet = std::vector<Element>;

/// Cover-graph arc, directed from the larger element to the one it covers.
struct Arc {
  Element top = 0;
  Element bottom = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Four cover arcs top -> {left, right} -> bottom, with left < right.
struct Diamond {
  Element top = 0;
  Element left = 0;
  Element right = 0;
  Element bottom = 0;
  friend auto operator<=>(const Diamond&, const Diamond&) = default;
};

/// Dense boolean relation on {0..n-1}; test(i, j) reads "i <= j".
class OrderRelation {
 public:
  OrderRelation() = default;
  explicit OrderRelation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool test(int i, int j) const { return bits_[idx(i, j)] != 0; }
  void set(int i, int j, bool v = true) { bits_[idx(i, j)] = v ? 1 : 0; }

  /// Adds reflexive pairs and closes transitively (Warshall).
  void close_reflexive_transitive();

  friend bool operator==(const OrderRelation&, const OrderRelation&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class LatticeError : public PreconditionError {
 public:
  enum class Kind { Empty, NotPartialOrder, NotLattice };
  LatticeError(Kind kind, const std::string& what) : PreconditionError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Explicit finite lattice with precomputed meet/join tables, cover graph,
/// heights and diamonds. Immutable once built.
class FiniteLattice {
 public:
  /// Validates the relation and builds the lattice. Throws LatticeError
  /// naming the first violated axiom.
  static FiniteLattice build(const OrderRelation& leq, std::vector<std::string> names = {});

  int size() const { return n_; }
  bool leq(Element x, Element y) const { return leq_.test(x, y); }
  bool lt(Element x, Element y) const { return x != y && leq_.test(x, y); }
  Element join(Element x, Element y) const { return join_[pair(x, y)]; }
  Element meet(Element x, Element y) const { return meet_[pair(x, y)]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const OrderRelation& order() const { return leq_; }

  /// Cover arcs in ascending (top, bottom) order.
  const std::vector<Arc>& covers() const { return covers_; }
  bool is_cover(Element y, Element x) const { return arc_index_[pair(y, x)] >= 0; }
  /// Index of arc y -> x in covers(), if y covers x.
  std::optional<int> arc_index(Element y, Element x) const;
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }

  /// Length of the longest descending cover path from x to the bottom.
  int height(Element x) const { return height_[x]; }
  int height() const { return height_[top_]; }

  /// All diamonds of the full cover graph, sorted.
  const std::vector<Diamond>& diamonds() const { return diamonds_; }
  /// Indices into diamonds() of the diamonds using a given arc.
  const std::vector<int>& diamonds_of_arc(int arc) const { return arc_diamonds_[arc]; }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t pair(Element x, Element y) const { return static_cast<std::size_t>(x) * n_ + y; }

  int n_ = 0;
  OrderRelation leq_;
  std::vector<Element> join_, meet_;
  Element bottom_ = 0, top_ = 0;
  std::vector<Arc> covers_;
  std::vector<int> arc_index_;
  std::vector<std::vector<Element>> lower_, upper_;
  std::vector<int> height_;
  std::vector<Diamond> diamonds_;
  std::vector<std::vector<int>> arc_diamonds_;
  std::vector<std::string> names_;
};

using HeightMap = std::vector<int>;
HeightMap heights(const FiniteLattice& lat);

bool is_ranked(const FiniteLattice& lat);

/// Three independent modularity tests; is_modular() requires them to agree.
bool modular_by_height(const FiniteLattice& lat);
bool modular_by_neighbors(const FiniteLattice& lat);
bool modular_by_law(const FiniteLattice& lat);
bool is_modular(const FiniteLattice& lat);

bool is_distributive(const FiniteLattice& lat);

bool is_sublattice(const FiniteLattice& lat, const ElementSet& k);

/// Least superset of y closed under pairwise join and meet.
ElementSet sublattice_generated(const FiniteLattice& lat, const ElementSet& y);

/// Whether the covers of sublattice k are covers of the host. Throws
/// PreconditionError when k is not a sublattice.
bool is_cover_preserving(const FiniteLattice& lat, const ElementSet& k);

/// Cover arcs of the host with both endpoints in k, ascending.
std::vector<Arc> induced_arcs(const FiniteLattice& lat, const ElementSet& k);

/// Undirected shortest-path distances in the cover graph (row-major n*n).
std::vector<int> cover_distances(const FiniteLattice& lat);

/// Lattice families for tests and the CLI.
namespace standard {
FiniteLattice boolean(int n);
FiniteLattice chain(int n);
FiniteLattice m3();
FiniteLattice n5();
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice divisors(long m);
}  // namespace standard

/// Parses "boolean:3", "chain:4", "m3", "n5", "divisors:360" and
/// "product(<family>,<family>)". Throws PreconditionError otherwise.
FiniteLattice make_standard(const std::string& family);

}  // namespace dlat
