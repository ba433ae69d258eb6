#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dlat/diamond.hpp"
#include "dlat/lattice.hpp"
#include "dlat/ncpoly.hpp"
#include "dlat/quaternion.hpp"

namespace dlat {

/// Two arcs of a diamond carry the same pseudo-root where a nondegenerate
/// value is required.
class DegenerateDiamond : public std::domain_error {
 public:
  DegenerateDiamond() : std::domain_error("degenerate diamond: equal pseudo-roots") {}
};

/// The lattice {f_T : T subset of S} of Wedderburn polynomials under right
/// divisibility, with every cover arc r -> q labelled by the pseudo-root
/// psi such that r = (t - psi) q.
class PseudoRootLattice {
 public:
  static constexpr int kDefaultMaxSize = 5;

  /// Builds the lattice and checks its structural invariants (closure
  /// under gcrd/lclm, modularity, exact arc factorizations). A failed check
  /// throws InvariantViolation.
  static PseudoRootLattice build(std::vector<Quaternion> s, int max_size = kDefaultMaxSize);

  const std::vector<Quaternion>& set() const { return s_; }
  /// Lattice element x is the polynomial polys()[x]; element 0 is 1.
  const std::vector<NCPoly>& polys() const { return polys_; }
  const FiniteLattice& lattice() const { return lattice_; }
  const NCPoly& f_s() const { return polys_[static_cast<std::size_t>(lattice_.top())]; }

  /// Element holding f_T, for T given as a bitmask over set().
  Element element_of_subset(std::uint32_t mask) const { return subset_element_[mask]; }

  const Quaternion& psi(const Arc& a) const;
  /// Indexed like lattice().covers().
  const std::vector<Quaternion>& psi_table() const { return psi_; }

  /// Arcs f_{s} -> 1, one per distinct element of S.
  ArcSet zero_arcs() const;

 private:
  std::vector<Quaternion> s_;
  std::vector<NCPoly> polys_;
  std::vector<Element> subset_element_;
  FiniteLattice lattice_;
  std::vector<Quaternion> psi_;
};

/// Upper pseudo-roots of a diamond from its lower ones:
/// u1 = (v1 - v2) v2 (v1 - v2)^-1 and u2 = (v2 - v1) v1 (v2 - v1)^-1, so
/// that (t - u1)(t - v1) = (t - u2)(t - v2).
std::pair<Quaternion, Quaternion> diamond_up(const Quaternion& v1, const Quaternion& v2);

/// Inverse of diamond_up: v1 = (u1 - u2)^-1 u2 (u1 - u2) and symmetrically.
std::pair<Quaternion, Quaternion> diamond_down(const Quaternion& u1, const Quaternion& u2);

enum class Rule { Up, Down };

/// One application of a diamond operation during the replay.
struct DerivationStep {
  Diamond diamond;
  Rule rule;
  std::array<Arc, 2> operands;
  std::array<Quaternion, 2> operand_values;
  std::array<Arc, 2> produced;
  std::array<Quaternion, 2> values;
  std::array<bool, 2> fresh;  // produced arc was not known before this step
};

struct GenerationReport {
  std::vector<Arc> given;
  std::vector<DerivationStep> steps;
  std::vector<Arc> closure;    // diamond closure of the given arcs
  std::vector<Arc> derived;    // arcs whose pseudo-root the replay produced or was given
  std::vector<Arc> underived;  // closure arcs the replay never reached
  std::vector<Arc> mismatches; // produced values differing from psi
  std::vector<Diamond> degenerate;

  bool exact() const { return mismatches.empty(); }
  bool complete() const { return underived.empty(); }
  bool ok() const { return exact() && complete(); }
};

/// Replays the diamond closure of b, computing each new pseudo-root only
/// from pseudo-roots already known through diamond_up / diamond_down, and
/// compares every produced value with the stored psi exactly.
GenerationReport rational_generation_check(const PseudoRootLattice& pl, const ArcSet& b);

/// All 2^|S| Wedderburn polynomials are distinct and deg f_T = |T|.
bool generic_check(const PseudoRootLattice& pl);

/// Pseudo-roots along a maximal descending path from f_S to 1, top first.
/// Throws PreconditionError if the path is not maximal.
std::vector<Quaternion> chain_factorization(const PseudoRootLattice& pl, const std::vector<Element>& path);

/// Components drawn as n/d with |n| <= 3 and d in {1, 2}.
Quaternion random_quaternion(std::mt19937_64& rng);

}  // namespace dlat
