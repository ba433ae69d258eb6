#include "dlat/pseudoroots.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dlat {

PseudoRootLattice PseudoRootLattice::build(std::vector<Quaternion> s, int max_size) {
  if (static_cast<int>(s.size()) > max_size || max_size > 16) {
    throw PreconditionError("pseudo-root lattice limited to " + std::to_string(max_size) + " elements");
  }
  PseudoRootLattice pl;
  pl.s_ = std::move(s);
  const std::uint32_t subsets = std::uint32_t{1} << pl.s_.size();

  std::vector<NCPoly> f(subsets);
  f[0] = NCPoly::one();
  std::map<NCPoly, Element> seen;
  pl.subset_element_.resize(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (mask != 0) {
      int high = 31 - std::countl_zero(mask);
      f[mask] = lclm_linear(f[mask & ~(std::uint32_t{1} << high)], pl.s_[static_cast<std::size_t>(high)]);
    }
    auto [it, fresh] = seen.emplace(f[mask], static_cast<Element>(pl.polys_.size()));
    if (fresh) pl.polys_.push_back(f[mask]);
    pl.subset_element_[mask] = it->second;
  }

  const int n = static_cast<int>(pl.polys_.size());
  OrderRelation leq(n);
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) leq.set(x, y, divides_right(pl.polys_[x], pl.polys_[y]));
    names.push_back(pl.polys_[x].str());
  }
  try {
    pl.lattice_ = FiniteLattice::build(leq, std::move(names));
  } catch (const LatticeError& e) {
    throw InvariantViolation(std::string("Wedderburn polynomials do not form a lattice: ") + e.what());
  }

  const FiniteLattice& lat = pl.lattice_;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (gcrd(pl.polys_[x], pl.polys_[y]) != pl.polys_[lat.meet(x, y)]) {
        throw InvariantViolation("gcrd of two Wedderburn polynomials is not their lattice meet");
      }
      if (lclm(pl.polys_[x], pl.polys_[y]) != pl.polys_[lat.join(x, y)]) {
        throw InvariantViolation("lclm of two Wedderburn polynomials is not their lattice join");
      }
    }
  }
  if (!is_modular(lat)) throw InvariantViolation("Wedderburn lattice is not modular");

  for (const Arc& a : lat.covers()) {
    const NCPoly& r = pl.polys_[a.top];
    const NCPoly& q = pl.polys_[a.bottom];
    auto [quot, rem] = right_divide(r, q);
    if (!rem.is_zero() || quot.degree() != 1 || !quot.is_monic()) {
      throw InvariantViolation("cover arc " + r.str() + " -> " + q.str() + " is not a linear quotient");
    }
    Quaternion xi = -quot.coeff(0);
    if (NCPoly::linear(xi) * q != r) throw InvariantViolation("psi does not reproduce the arc");
    pl.psi_.push_back(std::move(xi));
  }
  return pl;
}

const Quaternion& PseudoRootLattice::psi(const Arc& a) const {
  auto i = lattice_.arc_index(a.top, a.bottom);
  if (!i) throw PreconditionError("psi: not a cover arc");
  return psi_[static_cast<std::size_t>(*i)];
}

ArcSet PseudoRootLattice::zero_arcs() const {
  ArcSet b(lattice_);
  for (std::size_t i = 0; i < s_.size(); ++i) {
    b.insert({element_of_subset(std::uint32_t{1} << i), lattice_.bottom()});
  }
  return b;
}

namespace {

void check_diamond_identity(const Quaternion& u1, const Quaternion& v1, const Quaternion& u2,
                            const Quaternion& v2) {
  if (NCPoly::linear(u1) * NCPoly::linear(v1) != NCPoly::linear(u2) * NCPoly::linear(v2)) {
    throw InvariantViolation("diamond operation broke (t - u1)(t - v1) = (t - u2)(t - v2)");
  }
}

}  // namespace

std::pair<Quaternion, Quaternion> diamond_up(const Quaternion& v1, const Quaternion& v2) {
  if (v1 == v2) throw DegenerateDiamond();
  Quaternion u1 = conjugate_by(v2, v1 - v2);
  Quaternion u2 = conjugate_by(v1, v2 - v1);
  check_diamond_identity(u1, v1, u2, v2);
  return {std::move(u1), std::move(u2)};
}

std::pair<Quaternion, Quaternion> diamond_down(const Quaternion& u1, const Quaternion& u2) {
  if (u1 == u2) throw DegenerateDiamond();
  Quaternion v1 = conjugate_by(u2, inverse(u1 - u2));
  Quaternion v2 = conjugate_by(u1, inverse(u2 - u1));
  check_diamond_identity(u1, v1, u2, v2);
  return {std::move(v1), std::move(v2)};
}

GenerationReport rational_generation_check(const PseudoRootLattice& pl, const ArcSet& b) {
  const FiniteLattice& lat = pl.lattice();
  if (&b.host() != &lat) throw PreconditionError("rational_generation_check: arcs are not over this lattice");
  GenerationReport report;
  report.given = b.arcs();
  ArcSet closure = closure_naive(b);
  report.closure = closure.arcs();

  std::vector<std::optional<Quaternion>> known(lat.covers().size());
  for (const Arc& a : report.given) known[static_cast<std::size_t>(*lat.arc_index(a.top, a.bottom))] = pl.psi(a);
  auto slot = [&](const Arc& a) -> std::optional<Quaternion>& {
    return known[static_cast<std::size_t>(*lat.arc_index(a.top, a.bottom))];
  };

  std::vector<bool> degenerate_seen(lat.diamonds().size(), false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t di = 0; di < lat.diamonds().size(); ++di) {
      const Diamond& d = lat.diamonds()[di];
      auto arcs = arcs_of(d);  // top->left, top->right, left->bottom, right->bottom
      const bool upper_known = slot(arcs[0]) && slot(arcs[1]);
      const bool lower_known = slot(arcs[2]) && slot(arcs[3]);
      if (upper_known == lower_known) continue;

      DerivationStep step{d, lower_known ? Rule::Up : Rule::Down, {}, {}, {}, {}, {}};
      if (lower_known) {
        step.operands = {arcs[2], arcs[3]};
        step.produced = {arcs[0], arcs[1]};
      } else {
        step.operands = {arcs[0], arcs[1]};
        step.produced = {arcs[2], arcs[3]};
      }
      step.operand_values = {*slot(step.operands[0]), *slot(step.operands[1])};
      std::pair<Quaternion, Quaternion> out;
      try {
        out = lower_known ? diamond_up(step.operand_values[0], step.operand_values[1])
                          : diamond_down(step.operand_values[0], step.operand_values[1]);
      } catch (const DegenerateDiamond&) {
        if (!degenerate_seen[di]) report.degenerate.push_back(d);
        degenerate_seen[di] = true;
        continue;
      }
      step.values = {out.first, out.second};
      for (int k = 0; k < 2; ++k) {
        auto& v = slot(step.produced[k]);
        step.fresh[k] = !v.has_value();
        if (step.values[k] != pl.psi(step.produced[k])) report.mismatches.push_back(step.produced[k]);
        if (!v) v = step.values[k];
      }
      report.steps.push_back(std::move(step));
      progress = true;
    }
  }

  for (const Arc& a : lat.covers()) {
    if (slot(a)) report.derived.push_back(a);
    else if (closure.contains(a)) report.underived.push_back(a);
  }
  return report;
}

bool generic_check(const PseudoRootLattice& pl) {
  const std::uint32_t subsets = std::uint32_t{1} << pl.set().size();
  if (pl.polys().size() != subsets) return false;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (pl.polys()[static_cast<std::size_t>(pl.element_of_subset(mask))].degree() != std::popcount(mask)) return false;
  }
  return true;
}

std::vector<Quaternion> chain_factorization(const PseudoRootLattice& pl, const std::vector<Element>& path) {
  const FiniteLattice& lat = pl.lattice();
  if (path.empty() || path.front() != lat.top() || path.back() != lat.bottom()) {
    throw PreconditionError("chain_factorization: path must run from f_S down to 1");
  }
  std::vector<Quaternion> roots;
  NCPoly product = NCPoly::one();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= lat.size() || path[i + 1] < 0 || path[i + 1] >= lat.size() ||
        !lat.is_cover(path[i], path[i + 1])) {
      throw PreconditionError("chain_factorization: not a maximal path (step is not a cover)");
    }
    roots.push_back(pl.psi({path[i], path[i + 1]}));
    product = product * NCPoly::linear(roots.back());
  }
  if (product != pl.f_s()) throw InvariantViolation("chain factorization does not multiply back to f_S");
  return roots;
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  auto r = [&] { return Rational(num(rng), den(rng)); };
  Rational a = r(), b = r(), c = r(), d = r();
  return {a, b, c, d};
}

}  // namespace dlat
