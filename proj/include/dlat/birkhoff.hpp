#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlat/diamond.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

/// Subset of a ground set of at most 64 points; bit i is point i.
using Downset = std::uint64_t;

/// Reflexive, transitive relation on {0..n-1} (n <= 64) with designated
/// bottom and top points. up(i) is the mask of j with i <= j.
class QuasiOrder {
 public:
  QuasiOrder() = default;
  /// Discrete order plus bottom <= x <= top for all x.
  QuasiOrder(int n, int bottom, int top);
  /// The order generated by `pairs` (i <= j), pointed at bottom/top.
  static QuasiOrder generated(int n, int bottom, int top, std::span<const std::pair<int, int>> pairs);
  /// Reflexive-transitive closure of the relation given by row masks.
  static QuasiOrder from_masks(int bottom, int top, std::vector<std::uint64_t> up);
  /// Everything related to everything (not pointed).
  static QuasiOrder total(int n, int bottom, int top);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int i, int j) const { return (up_[i] >> j) & 1u; }
  std::uint64_t up(int i) const { return up_[i]; }
  std::uint64_t down(int j) const;
  std::uint64_t ground() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  /// Class id of each point; ids ordered by smallest member.
  std::vector<int> class_of() const;
  /// Mutual-leq classes as masks, ordered by smallest member.
  std::vector<std::uint64_t> classes() const;

  bool is_partial_order() const;
  /// bottom <= x <= top everywhere and top not <= bottom.
  bool is_pointed() const;
  bool extends(const QuasiOrder& base) const;

  /// Transitive closure of the union.
  friend QuasiOrder join_closure(const QuasiOrder& a, const QuasiOrder& b);
  friend QuasiOrder intersection(const QuasiOrder& a, const QuasiOrder& b);
  friend bool operator==(const QuasiOrder&, const QuasiOrder&) = default;
  friend auto operator<=>(const QuasiOrder&, const QuasiOrder&) = default;

 private:
  void close();
  int n_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::uint64_t> up_;
};

/// Pointed partial order (antisymmetric, bottom < everything < top).
class PointedPoset {
 public:
  /// Throws PreconditionError unless `order` is a pointed partial order.
  explicit PointedPoset(QuasiOrder order, std::vector<std::string> names = {});
  const QuasiOrder& order() const { return order_; }
  int size() const { return order_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  QuasiOrder order_;
  std::vector<std::string> names_;
};

/// All downsets of q: downward closed, containing bottom, excluding top.
/// Sorted by (size, mask). Throws when more than 24 points are free.
std::vector<Downset> downsets(const QuasiOrder& q);
bool is_downset(const QuasiOrder& q, Downset d);

/// The distributive lattice of downsets of a pointed poset, ordered by
/// inclusion. Element x of `lattice` is `sets[x]`.
struct DownsetLattice {
  PointedPoset poset;
  std::vector<Downset> sets;
  FiniteLattice lattice;
  std::unordered_map<Downset, Element> index;

  std::optional<Element> element_of(Downset d) const;
};

DownsetLattice downset_lattice(const PointedPoset& p);

/// i <= j iff every member of `family` containing j also contains i.
QuasiOrder order_from_family(const QuasiOrder& base, std::span<const Downset> family);

/// Elements of the downset lattice that are downsets of `ext`. Throws
/// PreconditionError unless ext is a pointed extension of the poset.
ElementSet extension_sublattice(const DownsetLattice& dl, const QuasiOrder& ext);

/// Every class other than those of bottom and top is a singleton.
bool is_cover_preserving_extension(const QuasiOrder& ext);

/// Whether d covers c among the downsets of ext: d - c is one class of
/// ext, maximal among the classes inside d. c must be a subset of d and
/// both must be downsets of ext.
bool downset_covers(const QuasiOrder& ext, Downset d, Downset c);

/// bottom and top stay in different classes of the union's closure.
bool compatible(const QuasiOrder& a, const QuasiOrder& b);

struct DldcResult {
  ArcSet arcs;
  std::vector<QuasiOrder> family;
};

/// Closure on a downset lattice through extensions: one extension per
/// arc-component, compatible extensions replaced by their intersection
/// until none remain. `a` must be an arc set of dl.lattice.
DldcResult closure_dldc(const DownsetLattice& dl, const ArcSet& a);

/// Join-irreducible poset of a distributive lattice with fresh bottom and
/// top points. Point 0 is bottom, the last point is top, and point i in
/// between is the i-th join-irreducible in element order.
struct JoinIrreducibles {
  PointedPoset poset;
  std::vector<Element> elements;  // lattice element of each middle point
};
JoinIrreducibles join_irreducibles(const FiniteLattice& lat);

/// A distributive lattice together with its downset model and the
/// isomorphism x -> {j join-irreducible : j <= x}.
struct BirkhoffRepresentation {
  DownsetLattice model;
  std::vector<Element> to_model;
  std::vector<Element> from_model;
};
BirkhoffRepresentation birkhoff_representation(const FiniteLattice& lat);

/// closure_dldc run on the model, with arcs carried to and from the host.
DldcResult closure_dldc(const FiniteLattice& host, const BirkhoffRepresentation& rep, const ArcSet& a);

/// Order-preserving bijection a -> b fixing bottom and top, if any.
std::optional<std::vector<int>> poset_isomorphism(const QuasiOrder& a, const QuasiOrder& b);
/// Order isomorphism between two lattices, if any.
std::optional<std::vector<Element>> lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace dlat
