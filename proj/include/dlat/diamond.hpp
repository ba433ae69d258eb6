#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dlat/lattice.hpp"

namespace dlat {

/// Subset of the cover arcs of a host lattice. The host must outlive the set.
class ArcSet {
 public:
  explicit ArcSet(const FiniteLattice& host) : host_(&host), bits_(host.covers().size()) {}
  static ArcSet all(const FiniteLattice& host);
  /// Throws PreconditionError if some arc is not a cover of the host.
  static ArcSet from_arcs(const FiniteLattice& host, std::span<const Arc> arcs);
  /// Bit i selects host.covers()[i].
  static ArcSet from_bits(const FiniteLattice& host, boost::dynamic_bitset<> bits);

  const FiniteLattice& host() const { return *host_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(const Arc& a) const;
  bool contains_index(int i) const { return bits_.test(static_cast<std::size_t>(i)); }
  void insert(const Arc& a);
  void insert_index(int i) { bits_.set(static_cast<std::size_t>(i)); }
  bool is_subset_of(const ArcSet& o) const { return bits_.is_subset_of(o.bits_); }

  /// Arcs in ascending (top, bottom) order.
  std::vector<Arc> arcs() const;
  /// V(A): elements incident to at least one arc.
  ElementSet vertices() const;

  ArcSet& operator|=(const ArcSet& o);
  friend ArcSet operator|(ArcSet a, const ArcSet& b) { return a |= b; }
  friend bool operator==(const ArcSet& a, const ArcSet& b) {
    return a.host_ == b.host_ && a.bits_ == b.bits_;
  }

 private:
  const FiniteLattice* host_;
  boost::dynamic_bitset<> bits_;
};

std::array<Arc, 4> arcs_of(const Diamond& d);

/// Whether s contains the out-V or the in-V of d.
bool spans(const ArcSet& s, const Diamond& d);
bool contains(const ArcSet& s, const Diamond& d);

/// Maximal connected subsets, ordered by their smallest arc.
std::vector<ArcSet> arc_components(const ArcSet& a);
/// V(A_i) for each arc-component, in the same order.
std::vector<ElementSet> vertex_components(const ArcSet& a);

/// Diamonds all four of whose arcs lie in a.
std::vector<Diamond> diamonds(const ArcSet& a);

/// s is diamond-closed with respect to `within` (s must be a subset).
bool is_diamond_closed(const ArcSet& s, const ArcSet& within);
bool is_diamond_closed(const ArcSet& s);

/// Least diamond-closed superset of b inside `within`, by repeatedly adding
/// every spanned diamond. Valid on any host lattice.
ArcSet closure_naive(const ArcSet& b, const ArcSet& within);
ArcSet closure_naive(const ArcSet& b);

/// Pairwise-disjoint cover-preserving sublattices, each with at least two
/// elements. Blocks are kept sorted.
struct CSPacking {
  std::vector<ElementSet> blocks;
  friend bool operator==(const CSPacking&, const CSPacking&) = default;
};

/// Union of the arcs induced on each block.
ArcSet packing_arcs(const FiniteLattice& host, const CSPacking& packing);

struct MldcResult {
  ArcSet arcs;
  CSPacking packing;
};

/// Closure on a modular host via sublattice generation: vertex-components
/// of b generate sublattices, and intersecting sublattices are merged into
/// the sublattice generated by their union until the family is disjoint.
/// Merges the first intersecting pair in block order. Throws
/// PreconditionError on a non-modular host.
MldcResult closure_mldc(const ArcSet& b);
/// Same procedure, merging a uniformly random intersecting pair each round.
MldcResult closure_mldc(const ArcSet& b, std::mt19937_64& rng);

/// The CS-packing whose induced arcs are s, for s diamond-closed in a
/// modular host.
CSPacking packing_of_closed(const ArcSet& s);

/// Whether the closure of b is every cover arc of a modular host.
bool generates_all(const ArcSet& b);

/// Path x = p0, ..., pd = y inside s of length d(x, y) whose ascending
/// steps all precede its descending ones. s must be diamond-closed and
/// contain some path of that length between x and y.
std::vector<Element> updown_normalize(const ArcSet& s, Element x, Element y);

}  // namespace dlat
